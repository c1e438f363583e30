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

#ifndef ASDS_SUMMARIZER_H_
#define ASDS_SUMMARIZER_H_

#include <cstddef>
#include <string>
#include <vector>

#include "asds/lexicon.h"
#include "asds/orientation.h"
#include "asds/scoring.h"
#include "asds/text.h"
#include "asds/topos.h"

namespace asds {

inline constexpr double kDefaultRatio = 0.3;
inline constexpr double kDefaultAlpha = 0.5;

struct SummaryConfig {
  double ratio = kDefaultRatio;
  double alpha = kDefaultAlpha;
  // alpha = 1.0 and per-kind default connective weights.
  bool paper_fidelity = false;

  // Throws kInvalidArgument unless ratio and alpha lie in (0, 1].
  void Validate() const;
};

// max(1, floor(ratio * n)) for n >= 1.
std::size_t SelectionSize(double ratio, std::size_t n);

struct SelectedSentence {
  std::size_t index = 0;
  std::string text;

  bool operator==(const SelectedSentence &) const = default;
};

struct ConclusionNote {
  std::size_t sentence_index = 0;
  ArgOrientation orientation;
  std::string rendered;

  bool operator==(const ConclusionNote &) const = default;
};

struct Summary {
  std::vector<SelectedSentence> selected;  // document order
  std::vector<ConclusionNote> conclusions;
  std::vector<SentenceScore> scores;       // every sentence
  std::vector<std::size_t> ranking;
  std::vector<SentenceAnnotation> annotations;
};

// segment -> detect -> annotate -> score -> rank -> top-k -> document order,
// plus a conclusion note for each selected sentence that has an orientation.
// Throws kEmptyDocument when the document has no sentences.
Summary Summarize(const Document &doc, const Lexicon &lexicon,
                  const ToposBase &base, const SummaryConfig &config);

enum class OutputFormat { kText, kJson };

// Text: selected sentences joined by single spaces and a newline; when there
// are conclusions, a blank line and one line per note. `explain` appends the
// score table and annotations (text) or fills "scores" (json).
std::string Render(const Summary &summary, const Lexicon &lexicon,
                   OutputFormat format, bool explain = false);

}  // namespace asds

#endif  // ASDS_SUMMARIZER_H_
