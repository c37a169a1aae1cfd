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

#ifndef HYPERMAP_HYPERMAP_H_
#define HYPERMAP_HYPERMAP_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypermap/error.h"
#include "hypermap/permutation.h"
#include "hypermap/word.h"

namespace hypermap {

// A finite hypermap: three involutions h0, h1, h2 on the flags 0..n-1
// generating a transitive group. Fixed points are allowed and encode
// boundary. Flag 0 is the base flag; its stabilizer stands for the hypermap
// subgroup.
//
// Construction validates; a Hypermap value always satisfies the invariants.
class Hypermap {
 public:
  Hypermap(Permutation h0, Permutation h1, Permutation h2);
  explicit Hypermap(std::array<Permutation, 3> generators);

  // The one-flag hypermap; every generator fixes the flag.
  static Hypermap trivial();

  int size() const { return static_cast<int>(gens_[0].size()); }
  const Permutation& generator(int i) const { return gens_[i]; }
  const std::array<Permutation, 3>& generators() const { return gens_; }
  Flag apply(Flag f, int i) const { return gens_[i][f]; }

  // Equality of flag numberings, not isomorphism.
  friend bool operator==(const Hypermap&, const Hypermap&) = default;

 private:
  std::array<Permutation, 3> gens_;
};

// Throws kNotInvolution (value = generator index) or kNotTransitive
// (value = number of flags reachable from flag 0).
void validate(const std::array<Permutation, 3>& generators);

enum class CellKind { kVertex, kEdge, kFace };

// Orbits of <h1,h2>, <h2,h0>, <h0,h1> respectively. Each cell is sorted and
// cells are ordered by their smallest flag.
std::vector<std::vector<Flag>> cells(const Hypermap& h, CellKind kind);
int cell_count(const Hypermap& h, CellKind kind);

// V + E + F - n/2. Throws kOddFlagCount when n is odd.
int euler_characteristic(const Hypermap& h);

// Throws kBoundaryPresent on hypermaps with boundary.
int genus(const Hypermap& h);

bool has_boundary(const Hypermap& h);

// A 2-colouring with flag 0 coloured 0 in which crossing h_i flips the colour
// iff R_i lies outside the subgroup. Absent iff the hypermap is not
// conservative for that subgroup.
std::optional<std::vector<std::uint8_t>> theta_coloring(const Hypermap& h,
                                                        ThetaClass t);
bool is_theta_conservative(const Hypermap& h, ThetaClass t);
bool is_orientable(const Hypermap& h);
bool is_bipartite(const Hypermap& h);

// `a` holds the part containing flag 0. Throws kNotBipartite.
struct BipartiteParts {
  std::vector<Flag> a;
  std::vector<Flag> b;
};
BipartiteParts bipartite_parts(const Hypermap& h);

struct UniformType {
  int vertex = 0;
  int edge = 0;
  int face = 0;
  friend bool operator==(const UniformType&, const UniformType&) = default;
};

// (l1, l2; m; n). `l1` is the vertex valency on the part containing flag 0.
struct BipartiteType {
  int l1 = 0;
  int l2 = 0;
  int m = 0;
  int n = 0;
  BipartiteType canonical() const;
  friend bool operator==(const BipartiteType&, const BipartiteType&) = default;
};

std::string to_string(const UniformType& t);
std::string to_string(const BipartiteType& t);

// Valency is half the number of flags of a cell; both throw
// kBoundaryPresent, and bipartite_type throws kNotBipartite.
std::optional<UniformType> uniform_type(const Hypermap& h);
std::optional<BipartiteType> bipartite_type(const Hypermap& h);

// The monodromy permutation of a word, composing generators left to right.
// The span overload accepts unreduced letter sequences.
Permutation evaluate(const Hypermap& h, std::span<const Letter> letters);
Permutation evaluate(const Hypermap& h, const DeltaWord& w);
Flag act(const Hypermap& h, Flag f, const DeltaWord& w);

struct InvariantReport {
  int n = 0;
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  std::optional<int> chi;  // absent for odd n
  bool orientable = false;
  bool has_boundary = false;
  bool bipartite = false;
  std::optional<int> genus;
  std::optional<UniformType> uniform_type;
  std::optional<BipartiteType> bipartite_type;
};

InvariantReport report(const Hypermap& h);

}  // namespace hypermap

#endif  // HYPERMAP_HYPERMAP_H_
