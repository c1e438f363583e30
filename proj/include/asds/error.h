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

#ifndef ASDS_ERROR_H_
#define ASDS_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace asds {

enum class ErrorCode {
  kParse,
  kDuplicateForm,
  kUnknownScale,
  kDuplicateId,
  kTrailingConnective,
  kEmptyDocument,
  kIo,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

// All failures raised by the library. Resource errors carry the 1-based line
// they were found on and the name of the source (file path or "<text>").
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string source = {},
        std::size_t line = 0);

  ErrorCode code() const { return code_; }
  const std::string &source() const { return source_; }
  std::size_t line() const { return line_; }

  // The bare message without the "source:line: " prefix.
  const std::string &detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string source_;
  std::size_t line_;
  std::string detail_;
};

}  // namespace asds

#endif  // ASDS_ERROR_H_
