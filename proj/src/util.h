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

// Helpers shared by the resource loaders. Not installed.

#ifndef ASDS_SRC_UTIL_H_
#define ASDS_SRC_UTIL_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace asds::internal {

// Throws Error(kIo) naming the path when the file cannot be read.
std::string ReadFile(const std::string &path);

std::string_view Trim(std::string_view s);

inline bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Physical lines without their terminators; "\r\n" is accepted.
std::vector<std::string_view> SplitLines(std::string_view text);

// Shortest decimal that reads back to the same double, always with a
// fractional part ("2.0", "1.25").
std::string FormatDecimal(double value);

}  // namespace asds::internal

#endif  // ASDS_SRC_UTIL_H_
