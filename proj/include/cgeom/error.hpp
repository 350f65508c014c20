// Copyright 2026 The Authors.
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

#ifndef CGEOM_ERROR_HPP
#define CGEOM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace cgeom {

enum class ErrorCode {
  kNotAPartialOrder,
  kNotALattice,
  kUnknownElement,
  kEmptyInterval,
  kElementOutOfGround,
  kPreconditionFailed,
  kBoundTooSmall,
  kNotACover,
  kBoundExceeded,
  kOracleInconsistent,
  kPropertyNeedsMeetOracle,
  kUnknownInstance,
  kParseError,
};

std::string_view error_code_name(ErrorCode code);

/// All library failures are reported as this exception; the code selects the kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::kNotALattice: return "NotALattice";
    case ErrorCode::kUnknownElement: return "UnknownElement";
    case ErrorCode::kEmptyInterval: return "EmptyInterval";
    case ErrorCode::kElementOutOfGround: return "ElementOutOfGround";
    case ErrorCode::kPreconditionFailed: return "PreconditionFailed";
    case ErrorCode::kBoundTooSmall: return "BoundTooSmall";
    case ErrorCode::kNotACover: return "NotACover";
    case ErrorCode::kBoundExceeded: return "BoundExceeded";
    case ErrorCode::kOracleInconsistent: return "OracleInconsistent";
    case ErrorCode::kPropertyNeedsMeetOracle: return "PropertyNeedsMeetOracle";
    case ErrorCode::kUnknownInstance: return "UnknownInstance";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace cgeom

#endif  // CGEOM_ERROR_HPP
