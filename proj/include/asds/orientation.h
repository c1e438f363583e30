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

// Constraint generation: combines connective matches, clause splits and the
// topos base into a per-sentence argumentative orientation.

#ifndef ASDS_ORIENTATION_H_
#define ASDS_ORIENTATION_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "asds/lexicon.h"
#include "asds/text.h"
#include "asds/topos.h"

namespace asds {

struct SentenceAnnotation {
  std::size_t sentence_index = 0;
  // Every connective detected in the sentence, in token order.
  std::vector<ConnectiveMatch> matches;
  // The governing splitting connective: the rightmost one that has a
  // non-empty conclusion clause.
  std::optional<ConnectiveMatch> connective;
  std::optional<ConnectiveKind> relation;
  std::optional<ClauseSplit> split;
  std::vector<ArgOrientation> argument_orientations;
  std::vector<ArgOrientation> conclusion_orientations;
  // Filled only when no splitting connective governs the sentence.
  std::vector<ArgOrientation> whole_orientations;
  std::optional<ArgOrientation> sentence_orientation;
  // Opposition connective whose two clauses orient a common scale with the
  // same sign.
  bool conflict = false;
};

// MatchClause then Conclude, with each orientation tagged by `source`.
// Results are ordered by topos declaration order.
std::vector<ArgOrientation> OrientClause(const std::vector<Token> &tokens,
                                         TokenRange clause,
                                         const ToposBase &base,
                                         OrientationSource source);

SentenceAnnotation OrientSentence(const Sentence &sentence,
                                  const std::vector<ConnectiveMatch> &matches,
                                  const Lexicon &lexicon,
                                  const ToposBase &base);

// One annotation per sentence, in document order.
std::vector<SentenceAnnotation> GenerateConstraints(const Document &doc,
                                                    const Lexicon &lexicon,
                                                    const ToposBase &base);

}  // namespace asds

#endif  // ASDS_ORIENTATION_H_
