// Copyright 2026 The idcode Authors.
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

#include "idcode/error.hpp"

namespace idcode {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kTwinsPresent: return "TwinsPresent";
    case ErrorCode::kGirthTooSmall: return "GirthTooSmall";
    case ErrorCode::kMinDegreeTooSmall: return "MinDegreeTooSmall";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kMaxTriesExhausted: return "MaxTriesExhausted";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

void Fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace idcode
