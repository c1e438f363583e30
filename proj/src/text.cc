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

#include "asds/text.h"

#include <utility>

#include "asds/error.h"
#include "asds/lexicon.h"
#include "util.h"

namespace asds {
namespace {

bool IsWordByte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c >= 0x80;
}

bool IsTerminator(char c) { return c == '.' || c == '!' || c == '?'; }

}  // namespace

StopwordSet::StopwordSet(std::unordered_set<std::string> words) {
  for (const auto &w : words) words_.insert(Normalize(w));
}

StopwordSet StopwordSet::Parse(std::string_view text) {
  StopwordSet set;
  for (std::string_view line : internal::SplitLines(text)) {
    line = internal::Trim(line);
    if (line.empty() || line.front() == '#') continue;
    set.words_.insert(Normalize(line));
  }
  return set;
}

StopwordSet StopwordSet::LoadFile(const std::string &path) {
  return Parse(internal::ReadFile(path));
}

bool StopwordSet::Contains(std::string_view normalized) const {
  return words_.count(std::string(normalized)) > 0;
}

std::string Normalize(std::string_view word) {
  std::string out(word);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<Token> Tokenize(std::string_view text,
                            const StopwordSet &stopwords) {
  std::vector<Token> tokens;
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    if (!IsWordByte(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n) {
      auto c = static_cast<unsigned char>(text[j]);
      if (IsWordByte(c)) {
        ++j;
      } else if (c == '\'' && j + 1 < n &&
                 IsWordByte(static_cast<unsigned char>(text[j + 1]))) {
        j += 2;
      } else {
        break;
      }
    }
    Token t;
    t.surface = std::string(text.substr(i, j - i));
    t.normalized = Normalize(t.surface);
    t.is_stopword = stopwords.Contains(t.normalized);
    t.span = {i, j};
    tokens.push_back(std::move(t));
    i = j;
  }
  return tokens;
}

Document SegmentSentences(std::string raw_text, const StopwordSet &stopwords) {
  Document doc;
  doc.raw_text = std::move(raw_text);
  std::string_view raw = doc.raw_text;
  const std::size_t n = raw.size();
  std::size_t i = 0;
  while (i < n) {
    while (i < n && internal::IsSpace(raw[i])) ++i;
    if (i == n) break;
    const std::size_t start = i;
    std::size_t end = n;
    for (std::size_t j = start; j < n; ++j) {
      if (IsTerminator(raw[j]) && (j + 1 == n || internal::IsSpace(raw[j + 1]))) {
        end = j + 1;
        break;
      }
    }
    if (end == n) {
      while (end > start && internal::IsSpace(raw[end - 1])) --end;
    }
    Sentence s;
    s.index = doc.sentences.size();
    s.span = {start, end};
    s.tokens = Tokenize(raw.substr(start, end - start), stopwords);
    for (Token &t : s.tokens) {
      t.span.begin += start;
      t.span.end += start;
    }
    doc.sentences.push_back(std::move(s));
    i = end;
  }
  return doc;
}

ClauseSplit SplitOnConnective(const Sentence &sentence,
                              const ConnectiveMatch &match) {
  const std::size_t n = sentence.tokens.size();
  if (match.tokens.empty() || match.tokens.end > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "connective match lies outside the sentence");
  }
  if (match.tokens.end == n) {
    throw Error(ErrorCode::kTrailingConnective,
                "no tokens follow the connective in sentence " +
                    std::to_string(sentence.index));
  }
  ClauseSplit split;
  split.argument = {0, match.tokens.begin};
  split.connective = match.tokens;
  split.conclusion = {match.tokens.end, n};
  split.inter_sentential = match.tokens.begin == 0;
  return split;
}

}  // namespace asds
