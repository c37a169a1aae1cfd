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

#include "hypermap/error.h"

namespace hypermap {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotInvolution:
      return "NotInvolution";
    case ErrorCode::kNotTransitive:
      return "NotTransitive";
    case ErrorCode::kBoundaryPresent:
      return "BoundaryPresent";
    case ErrorCode::kOddFlagCount:
      return "OddFlagCount";
    case ErrorCode::kNotBipartite:
      return "NotBipartite";
    case ErrorCode::kNotBipartiteRegular:
      return "NotBipartiteRegular";
    case ErrorCode::kCapacityExceeded:
      return "CapacityExceeded";
    case ErrorCode::kNoKernelRelators:
      return "NoKernelRelators";
    case ErrorCode::kUnsatisfiable:
      return "Unsatisfiable";
    case ErrorCode::kInvalidSpec:
      return "InvalidSpec";
    case ErrorCode::kParse:
      return "Parse";
  }
  return "Unknown";
}

}  // namespace hypermap
