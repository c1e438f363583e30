// Copyright 2026 The ASDS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Naive second implementation of sentence scoring, written from the raw text
// and resource files without any library code. Used as the oracle for the
// scoring and ranking tests.

#ifndef ASDS_TESTS_SCORING_ORACLE_H_
#define ASDS_TESTS_SCORING_ORACLE_H_

#include <cstddef>
#include <string>
#include <vector>

namespace asds::oracle {

struct OracleScore {
  double keyword_weight = 0.0;
  double connective_weight = 1.0;
  double score = 0.0;
};

struct OracleResult {
  std::vector<std::string> sentences;
  std::vector<OracleScore> scores;
  std::vector<std::size_t> ranking;
};

OracleResult ScoreFromRaw(const std::string &raw_text,
                          const std::string &stopword_file_text,
                          const std::string &lexicon_file_text, double alpha);

}  // namespace asds::oracle

#endif  // ASDS_TESTS_SCORING_ORACLE_H_
