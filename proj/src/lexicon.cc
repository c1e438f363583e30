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

#include "asds/lexicon.h"

#include <algorithm>
#include <charconv>
#include <set>
#include <utility>

#include "asds/error.h"
#include "util.h"

namespace asds {
namespace {

std::string JoinWords(const WordSequence &words) {
  std::string out;
  for (const auto &w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

// Cursor over one lexicon record.
class RecordReader {
 public:
  RecordReader(std::string_view line, std::string_view source, std::size_t n)
      : rest_(line), source_(source), line_(n) {}

  [[noreturn]] void Fail(const std::string &what) const {
    throw Error(ErrorCode::kParse, what, std::string(source_), line_);
  }

  void SkipSpace() {
    while (!rest_.empty() && internal::IsSpace(rest_.front()))
      rest_.remove_prefix(1);
  }
  bool AtEnd() {
    SkipSpace();
    return rest_.empty();
  }
  bool PeekQuote() {
    SkipSpace();
    return !rest_.empty() && rest_.front() == '"';
  }

  std::string_view Word() {
    SkipSpace();
    std::size_t n = 0;
    while (n < rest_.size() && !internal::IsSpace(rest_[n])) ++n;
    std::string_view w = rest_.substr(0, n);
    rest_.remove_prefix(n);
    return w;
  }

  std::string_view Quoted() {
    SkipSpace();
    rest_.remove_prefix(1);  // opening quote
    std::size_t close = rest_.find('"');
    if (close == std::string_view::npos) Fail("unterminated quoted form");
    std::string_view q = rest_.substr(0, close);
    rest_.remove_prefix(close + 1);
    return q;
  }

 private:
  std::string_view rest_;
  std::string_view source_;
  std::size_t line_;
};

bool ParseBool(std::string_view v, bool *out) {
  if (v == "true") {
    *out = true;
    return true;
  }
  if (v == "false") {
    *out = false;
    return true;
  }
  return false;
}

}  // namespace

std::string_view KindName(ConnectiveKind kind) {
  switch (kind) {
    case ConnectiveKind::kOpposition: return "opposition";
    case ConnectiveKind::kConsequence: return "consequence";
    case ConnectiveKind::kScalar: return "scalar";
  }
  return "opposition";
}

std::optional<ConnectiveKind> ParseKind(std::string_view name) {
  if (name == "opposition") return ConnectiveKind::kOpposition;
  if (name == "consequence") return ConnectiveKind::kConsequence;
  if (name == "scalar") return ConnectiveKind::kScalar;
  return std::nullopt;
}

double DefaultWeight(ConnectiveKind kind) {
  switch (kind) {
    case ConnectiveKind::kOpposition: return 2.0;
    case ConnectiveKind::kConsequence: return 1.5;
    case ConnectiveKind::kScalar: return 1.2;
  }
  return 1.0;
}

bool DefaultSplits(ConnectiveKind kind) {
  return kind != ConnectiveKind::kScalar;
}

Lexicon::Lexicon(std::vector<ConnectiveEntry> entries)
    : entries_(std::move(entries)) {
  std::set<WordSequence> seen;
  for (const auto &e : entries_) {
    if (e.surface_forms.empty())
      throw Error(ErrorCode::kInvalidArgument, "connective without forms");
    if (!(e.weight > 0.0))
      throw Error(ErrorCode::kInvalidArgument,
                  "connective weight must be positive");
    for (const auto &form : e.surface_forms) {
      if (form.empty() || std::any_of(form.begin(), form.end(),
                                      [](const auto &w) { return w.empty(); }))
        throw Error(ErrorCode::kInvalidArgument, "empty connective form");
      if (!seen.insert(form).second)
        throw Error(ErrorCode::kDuplicateForm,
                    "duplicate connective form \"" + JoinWords(form) + "\"");
    }
  }
  BuildIndex();
}

void Lexicon::BuildIndex() {
  by_first_word_.clear();
  for (std::size_t e = 0; e < entries_.size(); ++e) {
    const auto &forms = entries_[e].surface_forms;
    for (std::size_t f = 0; f < forms.size(); ++f)
      by_first_word_[forms[f].front()].push_back({e, f, forms[f].size()});
  }
  for (auto &[word, forms] : by_first_word_) {
    std::stable_sort(forms.begin(), forms.end(),
                     [](const Form &a, const Form &b) {
                       return a.length > b.length;
                     });
  }
}

Lexicon Lexicon::Parse(std::string_view text, std::string_view source) {
  std::vector<ConnectiveEntry> entries;
  std::set<WordSequence> seen;
  const auto lines = internal::SplitLines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    std::string_view line = internal::Trim(lines[ln]);
    if (line.empty() || line.front() == '#') continue;
    RecordReader r(line, source, ln + 1);
    if (r.Word() != "connective") r.Fail("expected 'connective'");

    ConnectiveEntry entry;
    if (!r.PeekQuote()) r.Fail("expected a quoted connective form");
    while (r.PeekQuote()) {
      WordSequence words;
      for (const Token &t : Tokenize(r.Quoted(), {}))
        words.push_back(t.normalized);
      if (words.empty()) r.Fail("empty connective form");
      if (!seen.insert(words).second) {
        throw Error(ErrorCode::kDuplicateForm,
                    "duplicate connective form \"" + JoinWords(words) + "\"",
                    std::string(source), ln + 1);
      }
      entry.surface_forms.push_back(std::move(words));
    }

    bool have_kind = false, have_weight = false, have_splits = false;
    while (!r.AtEnd()) {
      std::string_view field = r.Word();
      std::size_t eq = field.find('=');
      if (eq == std::string_view::npos)
        r.Fail("expected key=value, got '" + std::string(field) + "'");
      std::string_view key = field.substr(0, eq);
      std::string_view value = field.substr(eq + 1);
      if (key == "kind") {
        auto kind = ParseKind(value);
        if (!kind) r.Fail("unknown kind '" + std::string(value) + "'");
        entry.kind = *kind;
        have_kind = true;
      } else if (key == "weight") {
        double w = 0.0;
        auto [end, ec] =
            std::from_chars(value.data(), value.data() + value.size(), w);
        if (ec != std::errc() || end != value.data() + value.size())
          r.Fail("invalid weight '" + std::string(value) + "'");
        if (!(w > 0.0)) r.Fail("weight must be positive");
        entry.weight = w;
        have_weight = true;
      } else if (key == "splits") {
        if (!ParseBool(value, &entry.splits))
          r.Fail("splits must be true or false");
        have_splits = true;
      } else {
        r.Fail("unknown field '" + std::string(key) + "'");
      }
    }
    if (!have_kind) r.Fail("missing kind=");
    if (!have_weight) r.Fail("missing weight=");
    if (!have_splits) entry.splits = DefaultSplits(entry.kind);
    entries.push_back(std::move(entry));
  }
  return Lexicon(std::move(entries));
}

Lexicon Lexicon::LoadFile(const std::string &path) {
  return Parse(internal::ReadFile(path), path);
}

std::string Lexicon::Serialize() const {
  std::string out;
  for (const auto &e : entries_) {
    out += "connective";
    for (const auto &form : e.surface_forms) out += " \"" + JoinWords(form) + "\"";
    out += " kind=";
    out += KindName(e.kind);
    out += " weight=" + internal::FormatDecimal(e.weight);
    if (e.splits != DefaultSplits(e.kind))
      out += e.splits ? " splits=true" : " splits=false";
    out += '\n';
  }
  return out;
}

Lexicon Lexicon::WithDefaultWeights() const {
  std::vector<ConnectiveEntry> entries = entries_;
  for (auto &e : entries) e.weight = DefaultWeight(e.kind);
  return Lexicon(std::move(entries));
}

std::vector<ConnectiveMatch> Lexicon::Detect(
    const std::vector<Token> &tokens) const {
  std::vector<ConnectiveMatch> matches;
  std::size_t i = 0;
  while (i < tokens.size()) {
    auto it = by_first_word_.find(tokens[i].normalized);
    const Form *hit = nullptr;
    if (it != by_first_word_.end()) {
      for (const Form &f : it->second) {
        if (i + f.length > tokens.size()) continue;
        const WordSequence &words = entries_[f.entry].surface_forms[f.form];
        bool ok = true;
        for (std::size_t k = 1; k < f.length && ok; ++k)
          ok = tokens[i + k].normalized == words[k];
        if (ok) {
          hit = &f;
          break;
        }
      }
    }
    if (hit == nullptr) {
      ++i;
      continue;
    }
    matches.push_back({hit->entry, {i, i + hit->length}});
    i += hit->length;
  }
  return matches;
}

}  // namespace asds
