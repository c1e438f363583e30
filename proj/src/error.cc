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

#include "asds/error.h"

#include <utility>

namespace asds {
namespace {

std::string Compose(const std::string &message, const std::string &source,
                    std::size_t line) {
  if (source.empty()) return message;
  if (line == 0) return source + ": " + message;
  return source + ":" + std::to_string(line) + ": " + message;
}

}  // namespace

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kDuplicateForm: return "DuplicateForm";
    case ErrorCode::kUnknownScale: return "UnknownScale";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kTrailingConnective: return "TrailingConnective";
    case ErrorCode::kEmptyDocument: return "EmptyDocument";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string message, std::string source,
             std::size_t line)
    : std::runtime_error(Compose(message, source, line)),
      code_(code),
      source_(std::move(source)),
      line_(line),
      detail_(std::move(message)) {}

}  // namespace asds
