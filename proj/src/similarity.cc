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

#include "asds/similarity.h"

#include <algorithm>
#include <cmath>

namespace asds {

BowVector MakeBowVector(std::string_view text, const StopwordSet &stopwords) {
  BowVector v;
  for (const Token &t : Tokenize(text, stopwords))
    if (!t.is_stopword) ++v[t.normalized];
  return v;
}

Cosine CosineSimilarity(const BowVector &a, const BowVector &b) {
  if (a.empty() || b.empty()) return {};
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (const auto &[w, c] : a) {
    na += static_cast<double>(c) * c;
    auto it = b.find(w);
    if (it != b.end()) dot += static_cast<double>(c) * it->second;
  }
  for (const auto &[w, c] : b) nb += static_cast<double>(c) * c;
  // Clamp rounding excursions so the result stays within [0, 1].
  double value = dot / (std::sqrt(na) * std::sqrt(nb));
  return {std::min(1.0, std::max(0.0, value)), true};
}

}  // namespace asds
