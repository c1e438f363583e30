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

#include "asds/orientation.h"

#include <algorithm>

namespace asds {
namespace {

std::size_t ToposOrder(const ToposBase &base, const std::string &id) {
  const Topos *t = base.FindTopos(id);
  return t == nullptr ? base.topoi().size()
                      : static_cast<std::size_t>(t - base.topoi().data());
}

}  // namespace

std::vector<ArgOrientation> OrientClause(const std::vector<Token> &tokens,
                                         TokenRange clause,
                                         const ToposBase &base,
                                         OrientationSource source) {
  std::vector<ArgOrientation> out;
  for (const SignedScale &premise : base.MatchClause(tokens, clause)) {
    for (ArgOrientation &o : base.Conclude(premise)) {
      o.source = source;
      if (std::find(out.begin(), out.end(), o) == out.end())
        out.push_back(std::move(o));
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [&](const ArgOrientation &a, const ArgOrientation &b) {
                     return ToposOrder(base, a.licensed_by) <
                            ToposOrder(base, b.licensed_by);
                   });
  return out;
}

SentenceAnnotation OrientSentence(const Sentence &sentence,
                                  const std::vector<ConnectiveMatch> &matches,
                                  const Lexicon &lexicon,
                                  const ToposBase &base) {
  SentenceAnnotation ann;
  ann.sentence_index = sentence.index;
  ann.matches = matches;
  const std::size_t n = sentence.tokens.size();

  // Rightmost splitting connective wins. A trailing one has no conclusion
  // clause and cannot govern.
  for (auto it = matches.rbegin(); it != matches.rend(); ++it) {
    if (lexicon.entry(*it).splits && it->tokens.end < n) {
      ann.connective = *it;
      break;
    }
  }

  if (!ann.connective) {
    ann.whole_orientations = OrientClause(sentence.tokens, {0, n}, base,
                                          OrientationSource::kWholeSentence);
    if (!ann.whole_orientations.empty())
      ann.sentence_orientation = ann.whole_orientations.front();
    return ann;
  }

  const ConnectiveEntry &entry = lexicon.entry(*ann.connective);
  ann.relation = entry.kind;
  ann.split = SplitOnConnective(sentence, *ann.connective);
  ann.argument_orientations = OrientClause(
      sentence.tokens, ann.split->argument, base, OrientationSource::kArgument);
  ann.conclusion_orientations =
      OrientClause(sentence.tokens, ann.split->conclusion, base,
                   OrientationSource::kConclusion);

  const auto &governing = entry.orientation_source == GoverningClause::kArgument
                              ? ann.argument_orientations
                              : ann.conclusion_orientations;
  if (!governing.empty()) ann.sentence_orientation = governing.front();

  if (entry.kind == ConnectiveKind::kOpposition) {
    for (const auto &a : ann.argument_orientations) {
      for (const auto &c : ann.conclusion_orientations) {
        if (a.scale == c.scale && a.sign == c.sign) ann.conflict = true;
      }
    }
  }
  return ann;
}

std::vector<SentenceAnnotation> GenerateConstraints(const Document &doc,
                                                    const Lexicon &lexicon,
                                                    const ToposBase &base) {
  std::vector<SentenceAnnotation> out;
  out.reserve(doc.sentences.size());
  for (const Sentence &s : doc.sentences)
    out.push_back(OrientSentence(s, lexicon.Detect(s), lexicon, base));
  return out;
}

}  // namespace asds
