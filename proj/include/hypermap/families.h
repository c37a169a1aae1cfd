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

#ifndef HYPERMAP_FAMILIES_H_
#define HYPERMAP_FAMILIES_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hypermap/hypermap.h"
#include "hypermap/word.h"

namespace hypermap {

// Regular hypermap of type (2,2,2) on the sphere: the Cayley hypermap of
// C2^3 = <x0, x1, x2> with h_i right multiplication by x_i. Element
// x0^e0 x1^e1 x2^e2 is flag e0 + 2 e1 + 4 e2.
Hypermap p2();

// Regular hypermap of type (2,2,2k) on the projective plane: the Cayley
// hypermap of the dihedral group <r, s> of order 4k with h0 = s, h1 = rs,
// h2 = r^k. Element r^j s^e is flag 2j + e.
Hypermap pp2k(int k);

// Regular hypermap of type (2,2,2k) on the sphere: the Cayley hypermap of
// the dihedral group of order 4k times <z> = C2, with h0 = s, h1 = rs,
// h2 = z. Element (r^j s^e, z^c) is flag 2(2j + e) + c.
Hypermap sphere222k(int k);

// Relators of the bipartite subgroups of the Klein-bottle and torus
// examples: (uv)^2 over all pairs of b-generators, plus bdc for the Klein
// bottle.
std::vector<BWord> klein_relators();
std::vector<BWord> torus_relators();
// (12)^2, (20)^2, (01)^2: the derived subgroup.
std::vector<DeltaWord> derived_subgroup_relators();

Hypermap k_klein();
Hypermap t_torus();

// Deterministic for a given (n, seed). Involutions are fixed-point-free when
// `allow_boundary` is false, which requires even n (kUnsatisfiable
// otherwise); draws are rejected until transitive.
Hypermap random_hypermap(int n, std::uint64_t seed, bool allow_boundary);

// Family selectors as accepted by the command line: "p2", "pp2k:K",
// "sphere222k:K", "klein", "torus", "random:N:SEED".
struct FamilySpec {
  enum class Kind { kP2, kPP2k, kSphere222k, kKlein, kTorus, kRandom };
  Kind kind = Kind::kP2;
  int k = 1;
  std::uint64_t seed = 0;

  static FamilySpec parse(std::string_view text);
  Hypermap build() const;
};

}  // namespace hypermap

#endif  // HYPERMAP_FAMILIES_H_
