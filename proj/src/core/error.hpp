// Copyright 2026 The randsieve Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace randsieve {

enum class ErrorCode {
  invalid_argument,
  out_of_range,
  resource_limit,
};

/// Domain error with a machine-readable code. Messages always name the
/// offending parameter so callers can surface them verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_invalid(const std::string& msg) {
  throw Error(ErrorCode::invalid_argument, msg);
}

[[noreturn]] inline void throw_out_of_range(const std::string& msg) {
  throw Error(ErrorCode::out_of_range, msg);
}

[[noreturn]] inline void throw_resource_limit(const std::string& msg) {
  throw Error(ErrorCode::resource_limit, msg);
}

}  // namespace randsieve
