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

#include "asds/topos.h"

#include <algorithm>
#include <utility>

#include "asds/error.h"
#include "util.h"

namespace asds {
namespace {

bool IsIdChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
}

bool IsIdentifier(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), IsIdChar);
}

std::string JoinWords(const WordSequence &words) {
  std::string out;
  for (const auto &w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

class LineParser {
 public:
  LineParser(std::string_view source, std::size_t line)
      : source_(source), line_(line) {}

  [[noreturn]] void Fail(const std::string &what,
                         ErrorCode code = ErrorCode::kParse) const {
    throw Error(code, what, std::string(source_), line_);
  }

  // "<keyword> <id>: <body>" -> id, body
  std::pair<std::string, std::string_view> Header(std::string_view rest) const {
    std::size_t colon = rest.find(':');
    if (colon == std::string_view::npos) Fail("expected ':' after identifier");
    std::string_view id = internal::Trim(rest.substr(0, colon));
    if (!IsIdentifier(id)) Fail("invalid identifier '" + std::string(id) + "'");
    return {std::string(id), internal::Trim(rest.substr(colon + 1))};
  }

  std::vector<WordSequence> Lexemes(std::string_view body) const {
    std::vector<WordSequence> lexemes;
    std::size_t i = 0;
    while (true) {
      while (i < body.size() && internal::IsSpace(body[i])) ++i;
      std::string_view item;
      bool quoted = i < body.size() && body[i] == '"';
      if (quoted) {
        std::size_t close = body.find('"', i + 1);
        if (close == std::string_view::npos) Fail("unterminated quoted lexeme");
        item = body.substr(i + 1, close - i - 1);
        i = close + 1;
        while (i < body.size() && internal::IsSpace(body[i])) ++i;
        if (i < body.size() && body[i] != ',')
          Fail("expected ',' after quoted lexeme");
      } else {
        std::size_t comma = body.find(',', i);
        if (comma == std::string_view::npos) comma = body.size();
        item = internal::Trim(body.substr(i, comma - i));
        i = comma;
        if (item.find_first_of(" \t") != std::string_view::npos)
          Fail("multiword lexeme must be quoted: '" + std::string(item) + "'");
      }
      WordSequence words;
      for (const Token &t : Tokenize(item, {})) words.push_back(t.normalized);
      if (words.empty()) Fail("empty lexeme");
      if (std::find(lexemes.begin(), lexemes.end(), words) == lexemes.end())
        lexemes.push_back(std::move(words));
      if (i >= body.size()) break;
      ++i;  // ','
    }
    return lexemes;
  }

  SignedScale Signed(std::string_view s) const {
    s = internal::Trim(s);
    if (s.empty() || (s.front() != '+' && s.front() != '-'))
      Fail("expected +scale or -scale, got '" + std::string(s) + "'");
    SignedScale out;
    out.sign = s.front() == '+' ? Sign::kPlus : Sign::kMinus;
    std::string_view id = internal::Trim(s.substr(1));
    if (!IsIdentifier(id)) Fail("invalid scale id '" + std::string(id) + "'");
    out.scale = std::string(id);
    return out;
  }

 private:
  std::string_view source_;
  std::size_t line_;
};

}  // namespace

std::set<TopicalForm> DeriveTopicalForms(const Topos &t) {
  TopicalForm declared{t.antecedent.sign, t.consequent.sign};
  return CloseForms({declared});
}

std::set<TopicalForm> CloseForms(const std::set<TopicalForm> &forms) {
  std::set<TopicalForm> out = forms;
  for (const TopicalForm &f : forms)
    out.insert({Negate(f.p_sign), Negate(f.q_sign)});
  return out;
}

std::string_view SourceName(OrientationSource source) {
  switch (source) {
    case OrientationSource::kArgument: return "argument_clause";
    case OrientationSource::kConclusion: return "conclusion_clause";
    case OrientationSource::kWholeSentence: return "whole_sentence";
  }
  return "whole_sentence";
}

std::string Render(const ArgOrientation &o) {
  std::string out(1, SignChar(o.sign));
  out += ' ';
  out += o.scale;
  out += " (via ";
  out += o.licensed_by;
  out += ')';
  return out;
}

bool IsNegator(std::string_view w) {
  if (w == "not" || w == "no" || w == "never") return true;
  return w.size() >= 3 && w.substr(w.size() - 3) == "n't";
}

ToposBase::ToposBase(std::vector<Scale> scales, std::vector<Topos> topoi)
    : scales_(std::move(scales)), topoi_(std::move(topoi)) {
  for (std::size_t i = 0; i < scales_.size(); ++i) {
    if (scales_[i].lexemes.empty())
      throw Error(ErrorCode::kInvalidArgument,
                  "scale '" + scales_[i].id + "' has no lexemes");
    if (!scale_index_.emplace(scales_[i].id, i).second)
      throw Error(ErrorCode::kDuplicateId,
                  "duplicate scale id '" + scales_[i].id + "'");
  }
  for (std::size_t i = 0; i < topoi_.size(); ++i) {
    const Topos &t = topoi_[i];
    if (!topos_index_.emplace(t.id, i).second)
      throw Error(ErrorCode::kDuplicateId, "duplicate topos id '" + t.id + "'");
    for (const auto *ref : {&t.antecedent.scale, &t.consequent.scale}) {
      if (!scale_index_.count(*ref))
        throw Error(ErrorCode::kUnknownScale, "topos '" + t.id +
                                                  "' references unknown scale '" +
                                                  *ref + "'");
    }
    if (t.antecedent.scale == t.consequent.scale)
      throw Error(ErrorCode::kInvalidArgument,
                  "topos '" + t.id + "' links a scale to itself");
  }
}

ToposBase ToposBase::Parse(std::string_view text, std::string_view source) {
  std::vector<Scale> scales;
  std::vector<std::size_t> scale_lines;
  std::vector<Topos> topoi;
  std::vector<std::size_t> topos_lines;

  const auto lines = internal::SplitLines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    std::string_view line = internal::Trim(lines[ln]);
    if (line.empty() || line.front() == '#') continue;
    LineParser p(source, ln + 1);
    std::size_t sp = line.find_first_of(" \t");
    std::string_view keyword = line.substr(0, sp);
    std::string_view rest =
        sp == std::string_view::npos ? std::string_view() : line.substr(sp);
    if (keyword == "scale") {
      auto [id, body] = p.Header(rest);
      if (body.empty()) p.Fail("scale '" + id + "' has no lexemes");
      scales.push_back({std::move(id), p.Lexemes(body)});
      scale_lines.push_back(ln + 1);
    } else if (keyword == "topos") {
      auto [id, body] = p.Header(rest);
      std::size_t arrow = body.find("->");
      if (arrow == std::string_view::npos) p.Fail("expected '->' in topos");
      Topos t;
      t.id = std::move(id);
      t.antecedent = p.Signed(body.substr(0, arrow));
      t.consequent = p.Signed(body.substr(arrow + 2));
      topoi.push_back(std::move(t));
      topos_lines.push_back(ln + 1);
    } else {
      p.Fail("expected 'scale' or 'topos', got '" + std::string(keyword) + "'");
    }
  }

  // Second pass: identifiers and references, reported at the offending line.
  std::unordered_map<std::string, std::size_t> scale_ids, topos_ids;
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (!scale_ids.emplace(scales[i].id, i).second)
      LineParser(source, scale_lines[i])
          .Fail("duplicate scale id '" + scales[i].id + "'",
                ErrorCode::kDuplicateId);
  }
  for (std::size_t i = 0; i < topoi.size(); ++i) {
    const Topos &t = topoi[i];
    LineParser p(source, topos_lines[i]);
    if (!topos_ids.emplace(t.id, i).second)
      p.Fail("duplicate topos id '" + t.id + "'", ErrorCode::kDuplicateId);
    for (const auto *ref : {&t.antecedent.scale, &t.consequent.scale}) {
      if (!scale_ids.count(*ref))
        p.Fail("unknown scale '" + *ref + "'", ErrorCode::kUnknownScale);
    }
    if (t.antecedent.scale == t.consequent.scale)
      p.Fail("topos '" + t.id + "' links a scale to itself");
  }
  return ToposBase(std::move(scales), std::move(topoi));
}

ToposBase ToposBase::LoadFile(const std::string &path) {
  return Parse(internal::ReadFile(path), path);
}

std::string ToposBase::Serialize() const {
  std::string out;
  for (const Scale &s : scales_) {
    out += "scale " + s.id + ":";
    for (std::size_t i = 0; i < s.lexemes.size(); ++i) {
      out += i == 0 ? " " : ", ";
      if (s.lexemes[i].size() > 1)
        out += '"' + JoinWords(s.lexemes[i]) + '"';
      else
        out += s.lexemes[i].front();
    }
    out += '\n';
  }
  for (const Topos &t : topoi_) {
    out += "topos " + t.id + ": ";
    out += SignChar(t.antecedent.sign);
    out += t.antecedent.scale + " -> ";
    out += SignChar(t.consequent.sign);
    out += t.consequent.scale + '\n';
  }
  return out;
}

const Scale *ToposBase::FindScale(std::string_view id) const {
  auto it = scale_index_.find(std::string(id));
  return it == scale_index_.end() ? nullptr : &scales_[it->second];
}

const Topos *ToposBase::FindTopos(std::string_view id) const {
  auto it = topos_index_.find(std::string(id));
  return it == topos_index_.end() ? nullptr : &topoi_[it->second];
}

std::vector<SignedScale> ToposBase::MatchClause(
    const std::vector<Token> &tokens, TokenRange clause) const {
  std::vector<SignedScale> out;
  clause.end = std::min(clause.end, tokens.size());
  if (clause.begin >= clause.end || scales_.empty()) return out;

  std::vector<std::size_t> content;  // non-stopword token positions
  for (std::size_t i = clause.begin; i < clause.end; ++i)
    if (!tokens[i].is_stopword) content.push_back(i);

  auto negated_before = [&](std::size_t first) {
    std::size_t from =
        first - clause.begin > kNegationWindow ? first - kNegationWindow
                                               : clause.begin;
    for (std::size_t i = from; i < first; ++i)
      if (IsNegator(tokens[i].normalized)) return true;
    return false;
  };

  for (const Scale &scale : scales_) {
    bool matched = false, negated = false;
    for (const WordSequence &lexeme : scale.lexemes) {
      if (lexeme.size() > content.size()) continue;
      for (std::size_t p = 0; p + lexeme.size() <= content.size(); ++p) {
        bool hit = true;
        for (std::size_t k = 0; k < lexeme.size() && hit; ++k)
          hit = tokens[content[p + k]].normalized == lexeme[k];
        if (!hit) continue;
        matched = true;
        negated = negated || negated_before(content[p]);
      }
    }
    if (matched)
      out.push_back({scale.id, negated ? Sign::kMinus : Sign::kPlus});
  }
  return out;
}

std::vector<ArgOrientation> ToposBase::Conclude(
    const SignedScale &premise) const {
  std::vector<ArgOrientation> out;
  for (const Topos &t : topoi_) {
    if (t.antecedent.scale != premise.scale) continue;
    for (const TopicalForm &f : DeriveTopicalForms(t)) {
      if (f.p_sign != premise.sign) continue;
      ArgOrientation o{t.consequent.scale, f.q_sign, t.id,
                       OrientationSource::kWholeSentence};
      if (std::find(out.begin(), out.end(), o) == out.end())
        out.push_back(std::move(o));
    }
  }
  return out;
}

std::vector<std::string> ToposBase::StopwordLexemes(
    const StopwordSet &stopwords) const {
  std::vector<std::string> out;
  for (const Scale &s : scales_) {
    for (const WordSequence &lexeme : s.lexemes) {
      if (std::any_of(lexeme.begin(), lexeme.end(),
                      [&](const std::string &w) { return stopwords.Contains(w); }))
        out.push_back(s.id + ":" + JoinWords(lexeme));
    }
  }
  return out;
}

}  // namespace asds
