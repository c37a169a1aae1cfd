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

#ifndef HYPERMAP_CONSTRUCT_H_
#define HYPERMAP_CONSTRUCT_H_

#include <cstddef>
#include <span>
#include <utility>

#include "hypermap/hypermap.h"
#include "hypermap/word.h"

namespace hypermap {

inline constexpr std::size_t kDefaultMonodromyCap = 1'000'000;

// The sigma-dual: generator i of `h` becomes generator sigma(i) of the
// result, so the hypermap subgroup is mapped by the automorphism R_i ->
// R_{sigma(i)}. Duals compose as sigma_dual(sigma_dual(h, s), t) ==
// sigma_dual(h, s.then(t)).
Hypermap sigma_dual(const Hypermap& h, const Sigma& sigma);

// The hypermap of the subgroup H intersected with the even-word subgroup.
// Returns `h` unchanged when it is orientable; otherwise flags are
// (f, e) -> f + e*n and every generator toggles e.
Hypermap double_cover(const Hypermap& h);

// The bipartite hypermap with subgroup H phi^-1; see construct.cc for the
// flag layout. Throws kInvalidSpec for images that are not involutions and
// kNotTransitive when the images do not act transitively, which happens
// only when `phi` is not onto.
Hypermap phi_construct(const Hypermap& h, const EpimorphismSpec& phi);

// Smallest regular cover: the right regular action of the monodromy group.
// Elements are numbered in breadth-first order from the identity. Throws
// kCapacityExceeded when the group has more than `cap` elements.
Hypermap covering_core(const Hypermap& h,
                       std::size_t cap = kDefaultMonodromyCap);

// Largest regular hypermap covered by `h`.
Hypermap closure_cover(const Hypermap& h);

// The quotient of `h` by the smallest monodromy congruence identifying each
// given pair of flags. Classes are numbered breadth-first from the class of
// flag 0, so the result is covered by `h` via flag -> class.
Hypermap congruence_quotient(const Hypermap& h,
                             std::span<const std::pair<Flag, Flag>> pairs);

}  // namespace hypermap

#endif  // HYPERMAP_CONSTRUCT_H_
