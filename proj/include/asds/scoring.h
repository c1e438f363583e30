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

#ifndef ASDS_SCORING_H_
#define ASDS_SCORING_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "asds/lexicon.h"
#include "asds/orientation.h"
#include "asds/text.h"

namespace asds {

// Word x sentence occurrence counts over non-stopword normalized tokens.
// Stored sparsely per sentence column; rows are in first-occurrence order.
class WordSentenceMatrix {
 public:
  using Column = std::vector<std::pair<std::size_t, std::size_t>>;

  WordSentenceMatrix() = default;

  const std::vector<std::string> &words() const { return words_; }
  std::size_t rows() const { return words_.size(); }
  std::size_t cols() const { return columns_.size(); }

  // (row, count) pairs with count > 0, rows ordered by first occurrence in
  // the sentence.
  const Column &column(std::size_t sentence) const {
    return columns_[sentence];
  }
  std::size_t count(std::size_t row, std::size_t sentence) const;
  std::size_t count(std::string_view word, std::size_t sentence) const;
  std::size_t doc_freq(std::size_t row) const { return doc_freq_[row]; }
  std::size_t doc_freq(std::string_view word) const;
  std::size_t max_doc_freq() const;

  // -1 cast to size_t when absent.
  std::size_t row_of(std::string_view word) const;

 private:
  friend WordSentenceMatrix BuildMatrix(const Document &doc);

  std::vector<std::string> words_;
  std::unordered_map<std::string, std::size_t> row_index_;
  std::vector<Column> columns_;
  std::vector<std::size_t> doc_freq_;
};

inline constexpr std::size_t kNoRow = static_cast<std::size_t>(-1);

// Uses the stopword flags already set on the document's tokens.
WordSentenceMatrix BuildMatrix(const Document &doc);

// Keyword weights indexed by matrix row; 0 for non-keywords.
class KeywordWeights {
 public:
  KeywordWeights() = default;
  explicit KeywordWeights(std::vector<double> by_row)
      : by_row_(std::move(by_row)) {}

  double weight(std::size_t row) const {
    return row < by_row_.size() ? by_row_[row] : 0.0;
  }
  bool is_keyword(std::size_t row) const { return weight(row) > 0.0; }
  std::size_t size() const;  // number of keywords
  const std::vector<double> &by_row() const { return by_row_; }

 private:
  std::vector<double> by_row_;
};

// Keywords are the words with doc_freq >= alpha * max doc_freq, weighted
// doc_freq / max doc_freq. Throws kInvalidArgument unless 0 < alpha <= 1.
KeywordWeights ExtractKeywords(const WordSentenceMatrix &m, double alpha);

// Word -> weight view of the keywords, for display and tests.
std::unordered_map<std::string, double> KeywordMap(
    const WordSentenceMatrix &m, const KeywordWeights &k);

struct SentenceScore {
  std::size_t sentence_index = 0;
  double keyword_weight = 0.0;     // W_w
  double connective_weight = 1.0;  // C_w
  double score = 0.0;

  bool operator==(const SentenceScore &) const = default;
};

// W_w sums weight(w) * count(w, s) over the sentence's keywords, visited in
// their order of first occurrence in the sentence. C_w is the largest entry
// weight among the sentence's connective matches, 1.0 without any.
SentenceScore ScoreSentence(std::size_t sentence_index,
                            const WordSentenceMatrix &m,
                            const KeywordWeights &keywords,
                            const SentenceAnnotation &annotation,
                            const Lexicon &lexicon);

std::vector<SentenceScore> ScoreDocument(
    const WordSentenceMatrix &m, const KeywordWeights &keywords,
    const std::vector<SentenceAnnotation> &annotations,
    const Lexicon &lexicon);

// Sentence indices by descending score, ties in document order.
std::vector<std::size_t> Rank(const std::vector<SentenceScore> &scores);

}  // namespace asds

#endif  // ASDS_SCORING_H_
