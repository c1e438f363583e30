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

#include "asds/scoring.h"

#include <algorithm>
#include <numeric>

#include "asds/error.h"

namespace asds {

std::size_t WordSentenceMatrix::row_of(std::string_view word) const {
  auto it = row_index_.find(std::string(word));
  return it == row_index_.end() ? kNoRow : it->second;
}

std::size_t WordSentenceMatrix::count(std::size_t row,
                                      std::size_t sentence) const {
  for (const auto &[r, c] : columns_.at(sentence))
    if (r == row) return c;
  return 0;
}

std::size_t WordSentenceMatrix::count(std::string_view word,
                                      std::size_t sentence) const {
  std::size_t row = row_of(word);
  return row == kNoRow ? 0 : count(row, sentence);
}

std::size_t WordSentenceMatrix::doc_freq(std::string_view word) const {
  std::size_t row = row_of(word);
  return row == kNoRow ? 0 : doc_freq_[row];
}

std::size_t WordSentenceMatrix::max_doc_freq() const {
  return doc_freq_.empty()
             ? 0
             : *std::max_element(doc_freq_.begin(), doc_freq_.end());
}

WordSentenceMatrix BuildMatrix(const Document &doc) {
  WordSentenceMatrix m;
  m.columns_.resize(doc.sentences.size());
  std::unordered_map<std::size_t, std::size_t> slot;  // row -> column position
  for (const Sentence &s : doc.sentences) {
    auto &column = m.columns_[s.index];
    slot.clear();
    for (const Token &t : s.tokens) {
      if (t.is_stopword) continue;
      auto [it, inserted] = m.row_index_.emplace(t.normalized, m.words_.size());
      if (inserted) {
        m.words_.push_back(t.normalized);
        m.doc_freq_.push_back(0);
      }
      const std::size_t row = it->second;
      ++m.doc_freq_[row];
      auto [pos, fresh] = slot.emplace(row, column.size());
      if (fresh)
        column.emplace_back(row, 1);
      else
        ++column[pos->second].second;
    }
  }
  return m;
}

std::size_t KeywordWeights::size() const {
  return static_cast<std::size_t>(
      std::count_if(by_row_.begin(), by_row_.end(),
                    [](double w) { return w > 0.0; }));
}

KeywordWeights ExtractKeywords(const WordSentenceMatrix &m, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw Error(ErrorCode::kInvalidArgument, "alpha must lie in (0, 1]");
  const std::size_t max_df = m.max_doc_freq();
  std::vector<double> weights(m.rows(), 0.0);
  if (max_df == 0) return KeywordWeights(std::move(weights));
  const double threshold = alpha * static_cast<double>(max_df);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto df = static_cast<double>(m.doc_freq(r));
    if (df >= threshold) weights[r] = df / static_cast<double>(max_df);
  }
  return KeywordWeights(std::move(weights));
}

std::unordered_map<std::string, double> KeywordMap(const WordSentenceMatrix &m,
                                                   const KeywordWeights &k) {
  std::unordered_map<std::string, double> out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (k.is_keyword(r)) out.emplace(m.words()[r], k.weight(r));
  return out;
}

SentenceScore ScoreSentence(std::size_t sentence_index,
                            const WordSentenceMatrix &m,
                            const KeywordWeights &keywords,
                            const SentenceAnnotation &annotation,
                            const Lexicon &lexicon) {
  SentenceScore s;
  s.sentence_index = sentence_index;
  for (const auto &[row, count] : m.column(sentence_index)) {
    const double w = keywords.weight(row);
    if (w > 0.0) s.keyword_weight += w * static_cast<double>(count);
  }
  if (!annotation.matches.empty()) {
    s.connective_weight = 0.0;
    for (const ConnectiveMatch &match : annotation.matches)
      s.connective_weight =
          std::max(s.connective_weight, lexicon.entry(match).weight);
  }
  s.score = s.connective_weight * s.keyword_weight;
  return s;
}

std::vector<SentenceScore> ScoreDocument(
    const WordSentenceMatrix &m, const KeywordWeights &keywords,
    const std::vector<SentenceAnnotation> &annotations,
    const Lexicon &lexicon) {
  std::vector<SentenceScore> scores;
  scores.reserve(m.cols());
  for (std::size_t i = 0; i < m.cols(); ++i)
    scores.push_back(ScoreSentence(i, m, keywords, annotations.at(i), lexicon));
  return scores;
}

std::vector<std::size_t> Rank(const std::vector<SentenceScore> &scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     if (scores[a].score != scores[b].score)
                       return scores[a].score > scores[b].score;
                     return scores[a].sentence_index < scores[b].sentence_index;
                   });
  std::vector<std::size_t> out;
  out.reserve(order.size());
  for (std::size_t i : order) out.push_back(scores[i].sentence_index);
  return out;
}

}  // namespace asds
