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

#ifndef ASDS_LEXICON_H_
#define ASDS_LEXICON_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "asds/text.h"

namespace asds {

// opposition: "but"-type, argument / anti-argument relation.
// consequence: "therefore"-type, argument / conclusion relation.
// scalar: "little", "even"; detected and weighted, does not split by default.
enum class ConnectiveKind { kOpposition, kConsequence, kScalar };

// Which clause carries the orientation of the whole sentence.
enum class GoverningClause { kConclusion, kArgument };

std::string_view KindName(ConnectiveKind kind);
std::optional<ConnectiveKind> ParseKind(std::string_view name);

// Weight used for a kind when the lexicon weights are overridden.
double DefaultWeight(ConnectiveKind kind);
bool DefaultSplits(ConnectiveKind kind);

using WordSequence = std::vector<std::string>;

struct ConnectiveEntry {
  std::vector<WordSequence> surface_forms;
  ConnectiveKind kind = ConnectiveKind::kOpposition;
  GoverningClause orientation_source = GoverningClause::kConclusion;
  double weight = 1.0;
  bool splits = true;

  bool operator==(const ConnectiveEntry &) const = default;
};

struct ConnectiveMatch {
  std::size_t entry = 0;  // index into Lexicon::entries()
  TokenRange tokens;

  bool operator==(const ConnectiveMatch &) const = default;
};

class Lexicon {
 public:
  Lexicon() = default;

  // Validates entries and builds the lookup index. Throws kDuplicateForm if
  // two entries (or one entry twice) claim the same surface form, and
  // kInvalidArgument for empty forms or non-positive weights.
  explicit Lexicon(std::vector<ConnectiveEntry> entries);

  // Grammar, one record per line:
  //   connective "<form>" ["<form>"...] kind=<opposition|consequence|scalar>
  //       weight=<decimal> [splits=<true|false>]
  static Lexicon Parse(std::string_view text,
                       std::string_view source = "<text>");
  static Lexicon LoadFile(const std::string &path);

  // Inverse of Parse; Parse(Serialize()) reproduces the same entries.
  std::string Serialize() const;

  const std::vector<ConnectiveEntry> &entries() const { return entries_; }
  const ConnectiveEntry &entry(const ConnectiveMatch &m) const {
    return entries_[m.entry];
  }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Copy with every weight replaced by DefaultWeight(kind).
  Lexicon WithDefaultWeights() const;

  // Leftmost-longest, non-overlapping matching over normalized tokens.
  std::vector<ConnectiveMatch> Detect(const std::vector<Token> &tokens) const;
  std::vector<ConnectiveMatch> Detect(const Sentence &sentence) const {
    return Detect(sentence.tokens);
  }

 private:
  struct Form {
    std::size_t entry;
    std::size_t form;
    std::size_t length;
  };

  void BuildIndex();

  std::vector<ConnectiveEntry> entries_;
  // First word -> forms starting with it, longest first.
  std::unordered_map<std::string, std::vector<Form>> by_first_word_;
};

}  // namespace asds

#endif  // ASDS_LEXICON_H_
