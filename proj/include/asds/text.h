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

// Pre-processing: sentence segmentation, tokenization, stopword flags and
// clause splitting around a connective.

#ifndef ASDS_TEXT_H_
#define ASDS_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace asds {

// Half-open character range [begin, end).
struct CharSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool operator==(const CharSpan &) const = default;
};

// Half-open token index range [begin, end) within one sentence.
struct TokenRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return begin == end; }
  bool operator==(const TokenRange &) const = default;
};

class StopwordSet {
 public:
  StopwordSet() = default;
  explicit StopwordSet(std::unordered_set<std::string> words);

  // One word per line, '#' starts a comment line, blank lines are skipped.
  // Words are case-folded on load.
  static StopwordSet Parse(std::string_view text);
  static StopwordSet LoadFile(const std::string &path);

  bool Contains(std::string_view normalized) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

struct Token {
  std::string surface;
  std::string normalized;
  bool is_stopword = false;
  // Offsets of the surface form in the text the token came from.
  CharSpan span;

  bool operator==(const Token &) const = default;
};

struct Sentence {
  std::size_t index = 0;
  CharSpan span;
  std::vector<Token> tokens;
};

struct Document {
  std::string raw_text;
  std::vector<Sentence> sentences;

  std::string_view Text(const Sentence &sentence) const {
    return std::string_view(raw_text).substr(sentence.span.begin,
                                             sentence.span.size());
  }
};

// ASCII case folding; bytes outside ASCII pass through unchanged.
std::string Normalize(std::string_view word);

// Splits on whitespace and punctuation. A word is a run of ASCII letters,
// digits and non-ASCII bytes; an apostrophe between two word characters stays
// inside the word ("don't"). Offsets are relative to `text`.
std::vector<Token> Tokenize(std::string_view text,
                            const StopwordSet &stopwords);

// Sentences end at '.', '!' or '?' followed by whitespace or end of input.
// Trailing text without a terminator forms a final sentence. Tokens are
// produced with `stopwords` applied and their spans are absolute offsets
// into raw_text.
Document SegmentSentences(std::string raw_text,
                          const StopwordSet &stopwords = {});

struct ConnectiveMatch;

struct ClauseSplit {
  TokenRange argument;
  TokenRange connective;
  TokenRange conclusion;
  // Sentence-initial connective: the argument lies in a previous sentence.
  bool inter_sentential = false;
};

// Throws Error(kTrailingConnective) when no tokens follow the match and
// Error(kInvalidArgument) when the match does not lie within the sentence.
ClauseSplit SplitOnConnective(const Sentence &sentence,
                              const ConnectiveMatch &match);

}  // namespace asds

#endif  // ASDS_TEXT_H_
