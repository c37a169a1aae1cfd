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

#ifndef HYPERMAP_VERIFY_H_
#define HYPERMAP_VERIFY_H_

#include <string>
#include <vector>

namespace hypermap {

struct ClaimResult {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
};

struct CriterionResult {
  int number = 0;
  std::string title;
  std::vector<ClaimResult> claims;

  bool passed() const;
};

// Runs the eight acceptance criteria. Every random input is drawn from a
// fixed seed, so two runs produce identical results.
std::vector<CriterionResult> run_acceptance();

// One line per claim followed by a PASS/FAIL line per criterion.
std::string format_acceptance_table(const std::vector<CriterionResult>& results);

}  // namespace hypermap

#endif  // HYPERMAP_VERIFY_H_
