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

#include "asds/summarizer.h"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "asds/error.h"
#include "util.h"

namespace asds {
namespace {

std::string Forms(const ConnectiveEntry &e) {
  std::string out;
  for (const auto &form : e.surface_forms) {
    if (!out.empty()) out += '|';
    for (std::size_t i = 0; i < form.size(); ++i) {
      if (i) out += ' ';
      out += form[i];
    }
  }
  return out;
}

std::string List(const std::vector<ArgOrientation> &os) {
  std::string out = "{";
  for (std::size_t i = 0; i < os.size(); ++i) {
    if (i) out += ", ";
    out += Render(os[i]);
  }
  return out + "}";
}

void ExplainText(const Summary &summary, const Lexicon &lexicon,
                 std::string &out) {
  std::vector<std::size_t> rank_of(summary.scores.size());
  for (std::size_t r = 0; r < summary.ranking.size(); ++r)
    rank_of[summary.ranking[r]] = r + 1;

  out += "\nscores:\n";
  for (const SentenceScore &s : summary.scores) {
    out += "  [" + std::to_string(s.sentence_index) + "]";
    out += " Ww=" + internal::FormatDecimal(s.keyword_weight);
    out += " Cw=" + internal::FormatDecimal(s.connective_weight);
    out += " score=" + internal::FormatDecimal(s.score);
    out += " rank=" + std::to_string(rank_of[s.sentence_index]) + "\n";
  }
  out += "\nannotations:\n";
  for (const SentenceAnnotation &a : summary.annotations) {
    out += "  [" + std::to_string(a.sentence_index) + "]";
    if (a.connective) {
      const ConnectiveEntry &e = lexicon.entry(*a.connective);
      out += " connective=\"" + Forms(e) + "\"";
      out += " relation=" + std::string(KindName(e.kind));
      if (a.split && a.split->inter_sentential) out += " inter_sentential";
      out += " argument=" + List(a.argument_orientations);
      out += " conclusion=" + List(a.conclusion_orientations);
    } else {
      out += " whole=" + List(a.whole_orientations);
    }
    if (a.matches.size() > (a.connective ? 1u : 0u))
      out += " matches=" + std::to_string(a.matches.size());
    out += " orientation=";
    out += a.sentence_orientation ? Render(*a.sentence_orientation) : "none";
    if (a.conflict) out += " conflict";
    out += '\n';
  }
}

}  // namespace

void SummaryConfig::Validate() const {
  if (!(ratio > 0.0 && ratio <= 1.0))
    throw Error(ErrorCode::kInvalidArgument, "ratio must lie in (0, 1]");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw Error(ErrorCode::kInvalidArgument, "alpha must lie in (0, 1]");
}

std::size_t SelectionSize(double ratio, std::size_t n) {
  if (n == 0) return 0;
  const auto k =
      static_cast<std::size_t>(std::floor(ratio * static_cast<double>(n)));
  return std::clamp<std::size_t>(k, 1, n);
}

Summary Summarize(const Document &doc, const Lexicon &lexicon,
                  const ToposBase &base, const SummaryConfig &config) {
  config.Validate();
  if (doc.sentences.empty())
    throw Error(ErrorCode::kEmptyDocument, "document has no sentences");

  const Lexicon weighted =
      config.paper_fidelity ? lexicon.WithDefaultWeights() : lexicon;
  const double alpha = config.paper_fidelity ? 1.0 : config.alpha;

  Summary summary;
  summary.annotations = GenerateConstraints(doc, weighted, base);
  const WordSentenceMatrix matrix = BuildMatrix(doc);
  const KeywordWeights keywords = ExtractKeywords(matrix, alpha);
  summary.scores = ScoreDocument(matrix, keywords, summary.annotations, weighted);
  summary.ranking = Rank(summary.scores);

  const std::size_t k = SelectionSize(config.ratio, doc.sentences.size());
  std::vector<std::size_t> chosen(summary.ranking.begin(),
                                  summary.ranking.begin() + k);
  std::sort(chosen.begin(), chosen.end());

  for (std::size_t index : chosen) {
    const Sentence &s = doc.sentences[index];
    summary.selected.push_back({index, std::string(doc.Text(s))});
    const auto &orientation = summary.annotations[index].sentence_orientation;
    if (orientation)
      summary.conclusions.push_back({index, *orientation, Render(*orientation)});
  }
  return summary;
}

std::string Render(const Summary &summary, const Lexicon &lexicon,
                   OutputFormat format, bool explain) {
  if (format == OutputFormat::kJson) {
    nlohmann::ordered_json j;
    j["summary"] = nlohmann::ordered_json::array();
    for (const auto &s : summary.selected)
      j["summary"].push_back({{"index", s.index}, {"text", s.text}});
    j["conclusions"] = nlohmann::ordered_json::array();
    for (const auto &c : summary.conclusions) {
      j["conclusions"].push_back(
          {{"index", c.sentence_index},
           {"scale", c.orientation.scale},
           {"sign", std::string(1, SignChar(c.orientation.sign))},
           {"topos", c.orientation.licensed_by}});
    }
    j["scores"] = nlohmann::ordered_json::array();
    if (explain) {
      for (const auto &s : summary.scores) {
        j["scores"].push_back({{"index", s.sentence_index},
                               {"Ww", s.keyword_weight},
                               {"Cw", s.connective_weight},
                               {"score", s.score}});
      }
    }
    return j.dump(2) + "\n";
  }

  std::string out;
  for (std::size_t i = 0; i < summary.selected.size(); ++i) {
    if (i) out += ' ';
    out += summary.selected[i].text;
  }
  out += '\n';
  if (!summary.conclusions.empty()) {
    out += '\n';
    for (const auto &c : summary.conclusions) out += c.rendered + '\n';
  }
  if (explain) ExplainText(summary, lexicon, out);
  return out;
}

}  // namespace asds
