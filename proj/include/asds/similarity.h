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

// Order-insensitive bag-of-words similarity. Shows what a surface measure
// sees of two sentences that differ only in clause order around "but".

#ifndef ASDS_SIMILARITY_H_
#define ASDS_SIMILARITY_H_

#include <map>
#include <string>
#include <string_view>

#include "asds/text.h"

namespace asds {

// Normalized non-stopword word -> count > 0.
using BowVector = std::map<std::string, int, std::less<>>;

BowVector MakeBowVector(std::string_view text, const StopwordSet &stopwords);

struct Cosine {
  double value = 0.0;
  bool defined = false;  // false when either vector is empty
};

Cosine CosineSimilarity(const BowVector &a, const BowVector &b);

}  // namespace asds

#endif  // ASDS_SIMILARITY_H_
