// Copyright 2026 The Hypermap Authors
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

#ifndef HYPERMAP_ERROR_H_
#define HYPERMAP_ERROR_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hypermap {

enum class ErrorCode {
  kNotInvolution,
  kNotTransitive,
  kBoundaryPresent,
  kOddFlagCount,
  kNotBipartite,
  kNotBipartiteRegular,
  kCapacityExceeded,
  kNoKernelRelators,
  kUnsatisfiable,
  kInvalidSpec,
  kParse,
};

const char* error_code_name(ErrorCode code);

// Every failure raised by the library. `value()` carries the numeric payload
// of the error where one exists: the offending generator for
// kNotInvolution, the reachable flag count for kNotTransitive, the capacity
// for kCapacityExceeded.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::int64_t value = 0)
      : std::runtime_error(message), code_(code), value_(value) {}

  ErrorCode code() const { return code_; }
  std::int64_t value() const { return value_; }

 private:
  ErrorCode code_;
  std::int64_t value_;
};

}  // namespace hypermap

#endif  // HYPERMAP_ERROR_H_
