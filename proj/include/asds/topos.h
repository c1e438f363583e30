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

// Topoi: gradual inference rules //±P, ±Q// linking an antecedent scale to a
// consequent scale. A base holds scales (with the lexemes that evoke them)
// and topoi over those scales.

#ifndef ASDS_TOPOS_H_
#define ASDS_TOPOS_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "asds/lexicon.h"
#include "asds/text.h"

namespace asds {

enum class Sign { kPlus, kMinus };

constexpr Sign Negate(Sign s) {
  return s == Sign::kPlus ? Sign::kMinus : Sign::kPlus;
}
constexpr char SignChar(Sign s) { return s == Sign::kPlus ? '+' : '-'; }

struct Scale {
  std::string id;
  // Normalized words or multiword phrases, in declaration order.
  std::vector<WordSequence> lexemes;

  bool operator==(const Scale &) const = default;
};

struct SignedScale {
  std::string scale;
  Sign sign = Sign::kPlus;

  auto operator<=>(const SignedScale &) const = default;
};

struct Topos {
  std::string id;
  SignedScale antecedent;
  SignedScale consequent;

  bool operator==(const Topos &) const = default;
};

// Signs relative to a topos's P and Q.
struct TopicalForm {
  Sign p_sign = Sign::kPlus;
  Sign q_sign = Sign::kPlus;

  auto operator<=>(const TopicalForm &) const = default;
};

// The forms a believer of `t` is committed to: the declared form and its
// simultaneous negation. The crossed pair is not entailed.
std::set<TopicalForm> DeriveTopicalForms(const Topos &t);

// Belief closure of an arbitrary set of forms under simultaneous negation.
std::set<TopicalForm> CloseForms(const std::set<TopicalForm> &forms);

enum class OrientationSource { kArgument, kConclusion, kWholeSentence };

std::string_view SourceName(OrientationSource source);

struct ArgOrientation {
  std::string scale;
  Sign sign = Sign::kPlus;
  std::string licensed_by;  // topos id
  OrientationSource source = OrientationSource::kWholeSentence;

  bool operator==(const ArgOrientation &) const = default;
};

// "<sign> <scale> (via <topos>)"
std::string Render(const ArgOrientation &o);

// Tokens that flip the sign of a following lexeme: not, no, never and any
// word ending in "n't".
bool IsNegator(std::string_view normalized);

inline constexpr std::size_t kNegationWindow = 3;

class ToposBase {
 public:
  ToposBase() = default;

  // Throws kDuplicateId, kUnknownScale or kInvalidArgument (a topos from a
  // scale to itself, a scale without lexemes).
  ToposBase(std::vector<Scale> scales, std::vector<Topos> topoi);

  // Grammar, one declaration per line, in any order:
  //   scale <id>: lexeme[, lexeme...]      multiword lexemes quoted
  //   topos <id>: <+|-><scale> -> <+|-><scale>
  static ToposBase Parse(std::string_view text,
                         std::string_view source = "<text>");
  static ToposBase LoadFile(const std::string &path);
  std::string Serialize() const;

  const std::vector<Scale> &scales() const { return scales_; }
  const std::vector<Topos> &topoi() const { return topoi_; }
  const Scale *FindScale(std::string_view id) const;
  const Topos *FindTopos(std::string_view id) const;

  // Scales evoked by the clause, in declaration order. A lexeme matches a
  // contiguous run of non-stopword tokens. The sign is flipped once if a
  // negator occurs in the kNegationWindow tokens before any matched
  // occurrence of the scale's lexemes.
  std::vector<SignedScale> MatchClause(const std::vector<Token> &tokens,
                                       TokenRange clause) const;
  std::vector<SignedScale> MatchClause(const std::vector<Token> &tokens) const {
    return MatchClause(tokens, {0, tokens.size()});
  }

  // Single-step conclusions licensed by the topoi whose antecedent scale is
  // the premise's, in topos declaration order.
  std::vector<ArgOrientation> Conclude(const SignedScale &premise) const;

  // Lexemes made unreachable because one of their words is a stopword.
  std::vector<std::string> StopwordLexemes(const StopwordSet &stopwords) const;

 private:
  std::vector<Scale> scales_;
  std::vector<Topos> topoi_;
  std::unordered_map<std::string, std::size_t> scale_index_;
  std::unordered_map<std::string, std::size_t> topos_index_;
};

}  // namespace asds

#endif  // ASDS_TOPOS_H_
