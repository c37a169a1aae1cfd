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

#ifndef HYPERMAP_PRESENTATION_H_
#define HYPERMAP_PRESENTATION_H_

#include <cstddef>
#include <span>
#include <vector>

#include "hypermap/hypermap.h"
#include "hypermap/permutation.h"
#include "hypermap/word.h"

namespace hypermap {

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

// A free product of `arity` copies of C2 modulo the normal closure of
// `relators`. Generator squares are implicit.
struct Presentation {
  int arity = 3;
  std::vector<std::vector<Letter>> relators;
  std::size_t max_cosets = kDefaultMaxCosets;

  static Presentation delta(std::span<const DeltaWord> relators,
                            std::size_t max_cosets = kDefaultMaxCosets);
  static Presentation bipartite(std::span<const BWord> relators,
                                std::size_t max_cosets = kDefaultMaxCosets);
};

// The right regular action of the presented group on itself: generators[g]
// maps coset c to c * g. Coset 0 is the identity and the remaining cosets
// are numbered in breadth-first discovery order over generators 0, 1, ....
struct CosetTable {
  std::vector<Permutation> generators;
  int size() const {
    return generators.empty() ? 0 : static_cast<int>(generators[0].size());
  }
};

// Haselgrove-Leech-Trotter style enumeration of the cosets of the trivial
// subgroup, with full coincidence processing. Throws kCapacityExceeded when more than
// `max_cosets` rows would be allocated; the count includes cosets later
// found to coincide.
CosetTable coset_enumerate(const Presentation& p);

// Flags are the elements of the quotient of the full group; h_i is right
// multiplication by R_i.
Hypermap regular_hypermap_from_delta_relators(
    std::span<const DeltaWord> relators,
    std::size_t max_cosets = kDefaultMaxCosets);

// Flags are Q x {0,1} for Q the quotient of the bipartite subgroup, with
// (q, e) numbered q + e|Q|. Since (q R0) R1 = (q c) R0 and (q R0) R2 =
// (q d) R0, h0 toggles e, and h1, h2 act on part 0 by a, b and on part 1 by
// c, d.
Hypermap bipartite_hypermap_from_b_relators(
    std::span<const BWord> relators,
    std::size_t max_cosets = kDefaultMaxCosets);

// Dispatches on arity.
Hypermap hypermap_from_presentation(const Presentation& p);

}  // namespace hypermap

#endif  // HYPERMAP_PRESENTATION_H_
