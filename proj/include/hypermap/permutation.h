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

#ifndef HYPERMAP_PERMUTATION_H_
#define HYPERMAP_PERMUTATION_H_

#include <cstdint>
#include <numeric>
#include <vector>

namespace hypermap {

using Flag = std::int32_t;

// Image sequence: p[f] is the image of f. Permutations act on the right, so
// compose(p, q) applies p first.
using Permutation = std::vector<Flag>;

inline Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), Flag{0});
  return p;
}

inline Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t f = 0; f < p.size(); ++f) r[f] = q[p[f]];
  return r;
}

inline Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t f = 0; f < p.size(); ++f) r[p[f]] = static_cast<Flag>(f);
  return r;
}

inline bool is_identity(const Permutation& p) {
  for (std::size_t f = 0; f < p.size(); ++f) {
    if (p[f] != static_cast<Flag>(f)) return false;
  }
  return true;
}

}  // namespace hypermap

#endif  // HYPERMAP_PERMUTATION_H_
