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

#include "hypermap/hypermap.h"

#include <algorithm>

namespace hypermap {

namespace {

std::array<int, 2> cell_generators(CellKind kind) {
  switch (kind) {
    case CellKind::kVertex:
      return {1, 2};
    case CellKind::kEdge:
      return {2, 0};
    case CellKind::kFace:
      return {0, 1};
  }
  return {0, 0};
}

// Orbits of the subgroup generated by `gens`, labelled by discovery order.
std::vector<int> orbit_labels(const Hypermap& h, std::span<const int> gens,
                              int* count) {
  const int n = h.size();
  std::vector<int> label(n, -1);
  std::vector<Flag> stack;
  int next = 0;
  for (Flag start = 0; start < n; ++start) {
    if (label[start] >= 0) continue;
    label[start] = next;
    stack.push_back(start);
    while (!stack.empty()) {
      Flag f = stack.back();
      stack.pop_back();
      for (int i : gens) {
        Flag g = h.apply(f, i);
        if (label[g] < 0) {
          label[g] = next;
          stack.push_back(g);
        }
      }
    }
    ++next;
  }
  *count = next;
  return label;
}

void require_no_boundary(const Hypermap& h, const char* what) {
  if (has_boundary(h)) {
    throw Error(ErrorCode::kBoundaryPresent,
                std::string(what) + " is undefined for hypermaps with boundary");
  }
}

// Common valency of the given cells, optionally only those whose flags have
// colour `wanted`; 0 if the valencies disagree.
int common_valency(const std::vector<std::vector<Flag>>& cs,
                   const std::vector<std::uint8_t>* colour, int wanted) {
  int valency = 0;
  for (const auto& cell : cs) {
    if (colour != nullptr && (*colour)[cell.front()] != wanted) continue;
    int v = static_cast<int>(cell.size()) / 2;
    if (valency == 0) {
      valency = v;
    } else if (valency != v) {
      return 0;
    }
  }
  return valency;
}

}  // namespace

Hypermap::Hypermap(Permutation h0, Permutation h1, Permutation h2)
    : Hypermap(std::array<Permutation, 3>{std::move(h0), std::move(h1),
                                          std::move(h2)}) {}

Hypermap::Hypermap(std::array<Permutation, 3> generators)
    : gens_(std::move(generators)) {
  validate(gens_);
}

Hypermap Hypermap::trivial() { return Hypermap({0}, {0}, {0}); }

void validate(const std::array<Permutation, 3>& generators) {
  const std::size_t n = generators[0].size();
  if (n == 0) throw Error(ErrorCode::kNotTransitive, "empty flag set", 0);
  for (int i = 0; i < 3; ++i) {
    const Permutation& p = generators[i];
    if (p.size() != n) {
      throw Error(ErrorCode::kNotInvolution,
                  "h" + std::to_string(i) + " has the wrong length", i);
    }
    for (std::size_t f = 0; f < n; ++f) {
      if (p[f] < 0 || static_cast<std::size_t>(p[f]) >= n ||
          static_cast<std::size_t>(p[p[f]]) != f) {
        throw Error(ErrorCode::kNotInvolution,
                    "h" + std::to_string(i) + " is not an involution", i);
      }
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<Flag> stack = {0};
  seen[0] = true;
  std::int64_t reached = 1;
  while (!stack.empty()) {
    Flag f = stack.back();
    stack.pop_back();
    for (const Permutation& p : generators) {
      if (!seen[p[f]]) {
        seen[p[f]] = true;
        ++reached;
        stack.push_back(p[f]);
      }
    }
  }
  if (static_cast<std::size_t>(reached) != n) {
    throw Error(ErrorCode::kNotTransitive,
                "generators are not transitive: " + std::to_string(reached) +
                    " of " + std::to_string(n) + " flags reachable",
                reached);
  }
}

std::vector<std::vector<Flag>> cells(const Hypermap& h, CellKind kind) {
  const auto gens = cell_generators(kind);
  int count = 0;
  const auto label = orbit_labels(h, gens, &count);
  std::vector<std::vector<Flag>> out(count);
  for (Flag f = 0; f < h.size(); ++f) out[label[f]].push_back(f);
  return out;
}

int cell_count(const Hypermap& h, CellKind kind) {
  const auto gens = cell_generators(kind);
  int count = 0;
  orbit_labels(h, gens, &count);
  return count;
}

int euler_characteristic(const Hypermap& h) {
  if (h.size() % 2 != 0) {
    throw Error(ErrorCode::kOddFlagCount,
                "Euler characteristic needs an even flag count", h.size());
  }
  return cell_count(h, CellKind::kVertex) + cell_count(h, CellKind::kEdge) +
         cell_count(h, CellKind::kFace) - h.size() / 2;
}

int genus(const Hypermap& h) {
  require_no_boundary(h, "genus");
  const int chi = euler_characteristic(h);
  return is_orientable(h) ? (2 - chi) / 2 : 2 - chi;
}

bool has_boundary(const Hypermap& h) {
  for (int i = 0; i < 3; ++i) {
    for (Flag f = 0; f < h.size(); ++f) {
      if (h.apply(f, i) == f) return true;
    }
  }
  return false;
}

std::optional<std::vector<std::uint8_t>> theta_coloring(const Hypermap& h,
                                                        ThetaClass t) {
  const auto flips = parity_vector(t);
  const int n = h.size();
  constexpr std::uint8_t kUnset = 2;
  std::vector<std::uint8_t> colour(n, kUnset);
  std::vector<Flag> queue = {0};
  colour[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Flag f = queue[head];
    for (int i = 0; i < 3; ++i) {
      Flag g = h.apply(f, i);
      if (colour[g] == kUnset) {
        colour[g] = colour[f] ^ flips[i];
        queue.push_back(g);
      }
    }
  }
  // Rescan every edge; this also catches fixed points of flipping generators.
  for (Flag f = 0; f < n; ++f) {
    for (int i = 0; i < 3; ++i) {
      if (colour[h.apply(f, i)] != (colour[f] ^ flips[i])) return std::nullopt;
    }
  }
  return colour;
}

bool is_theta_conservative(const Hypermap& h, ThetaClass t) {
  return theta_coloring(h, t).has_value();
}

bool is_orientable(const Hypermap& h) {
  return is_theta_conservative(h, ThetaClass::kPlus);
}

bool is_bipartite(const Hypermap& h) {
  return is_theta_conservative(h, ThetaClass::kHat0);
}

BipartiteParts bipartite_parts(const Hypermap& h) {
  auto colour = theta_coloring(h, ThetaClass::kHat0);
  if (!colour) throw Error(ErrorCode::kNotBipartite, "hypermap is not bipartite");
  BipartiteParts parts;
  for (Flag f = 0; f < h.size(); ++f) {
    ((*colour)[f] == 0 ? parts.a : parts.b).push_back(f);
  }
  return parts;
}

BipartiteType BipartiteType::canonical() const {
  return {std::min(l1, l2), std::max(l1, l2), m, n};
}

std::string to_string(const UniformType& t) {
  return "(" + std::to_string(t.vertex) + "," + std::to_string(t.edge) + "," +
         std::to_string(t.face) + ")";
}

std::string to_string(const BipartiteType& t) {
  return "(" + std::to_string(t.l1) + "," + std::to_string(t.l2) + ";" +
         std::to_string(t.m) + ";" + std::to_string(t.n) + ")";
}

std::optional<UniformType> uniform_type(const Hypermap& h) {
  require_no_boundary(h, "uniform type");
  UniformType t{common_valency(cells(h, CellKind::kVertex), nullptr, 0),
                common_valency(cells(h, CellKind::kEdge), nullptr, 0),
                common_valency(cells(h, CellKind::kFace), nullptr, 0)};
  if (t.vertex == 0 || t.edge == 0 || t.face == 0) return std::nullopt;
  return t;
}

std::optional<BipartiteType> bipartite_type(const Hypermap& h) {
  require_no_boundary(h, "bipartite type");
  auto colour = theta_coloring(h, ThetaClass::kHat0);
  if (!colour) throw Error(ErrorCode::kNotBipartite, "hypermap is not bipartite");
  // h1 and h2 preserve the colouring, so each vertex is monochromatic.
  const auto vertices = cells(h, CellKind::kVertex);
  BipartiteType t{common_valency(vertices, &*colour, 0),
                  common_valency(vertices, &*colour, 1),
                  common_valency(cells(h, CellKind::kEdge), nullptr, 0),
                  common_valency(cells(h, CellKind::kFace), nullptr, 0)};
  if (t.l1 == 0 || t.l2 == 0 || t.m == 0 || t.n == 0) return std::nullopt;
  return t;
}

Permutation evaluate(const Hypermap& h, std::span<const Letter> letters) {
  Permutation p = identity_permutation(h.size());
  for (Flag& f : p) {
    for (Letter l : letters) f = h.apply(f, l);
  }
  return p;
}

Permutation evaluate(const Hypermap& h, const DeltaWord& w) {
  return evaluate(h, w.letters());
}

Flag act(const Hypermap& h, Flag f, const DeltaWord& w) {
  for (Letter l : w.letters()) f = h.apply(f, l);
  return f;
}

InvariantReport report(const Hypermap& h) {
  InvariantReport r;
  r.n = h.size();
  r.vertices = cell_count(h, CellKind::kVertex);
  r.edges = cell_count(h, CellKind::kEdge);
  r.faces = cell_count(h, CellKind::kFace);
  if (r.n % 2 == 0) r.chi = euler_characteristic(h);
  r.orientable = is_orientable(h);
  r.has_boundary = has_boundary(h);
  r.bipartite = is_bipartite(h);
  if (!r.has_boundary) {
    r.genus = genus(h);
    r.uniform_type = uniform_type(h);
    if (r.bipartite) r.bipartite_type = bipartite_type(h);
  }
  return r;
}

}  // namespace hypermap
