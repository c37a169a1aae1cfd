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

// Brute-force reference computations used only by tests. None of these call
// into the library beyond reading generator permutations.

#ifndef HYPERMAP_TESTS_ORACLES_H_
#define HYPERMAP_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "hypermap/hypermap.h"

namespace hypermap::oracle {

inline std::vector<int> mul(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

inline std::vector<std::vector<int>> gens_of(const Hypermap& h) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < 3; ++i) {
    out.emplace_back(h.generator(i).begin(), h.generator(i).end());
  }
  return out;
}

// All elements of the group generated by `gens`.
inline std::set<std::vector<int>> closure(const std::vector<std::vector<int>>& gens,
                                          std::size_t n) {
  std::vector<int> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
  std::set<std::vector<int>> group = {id};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(group.begin(), group.end());
    for (const auto& x : snapshot) {
      for (const auto& g : gens) {
        if (group.insert(mul(x, g)).second) grew = true;
      }
    }
  }
  return group;
}

inline std::set<std::vector<int>> monodromy(const Hypermap& h) {
  return closure(gens_of(h), h.size());
}

// Number of orbits of <h_i, h_j> by fixed-point relabelling to the minimum.
inline int orbit_count(const Hypermap& h, int i, int j) {
  std::vector<int> label(h.size());
  for (int f = 0; f < h.size(); ++f) label[f] = f;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int f = 0; f < h.size(); ++f) {
      for (int g : {h.apply(f, i), h.apply(f, j)}) {
        const int m = std::min(label[f], label[g]);
        if (label[f] != m || label[g] != m) {
          label[f] = label[g] = m;
          changed = true;
        }
      }
    }
  }
  std::set<int> distinct(label.begin(), label.end());
  return static_cast<int>(distinct.size());
}

// Euler characteristic from orbit counts.
inline int chi(const Hypermap& h) {
  return orbit_count(h, 1, 2) + orbit_count(h, 2, 0) + orbit_count(h, 0, 1) -
         h.size() / 2;
}

// Flags t with Stab(0) == Stab(t) inside the monodromy group; these are
// exactly the images of flag 0 under automorphisms.
inline int automorphism_count(const Hypermap& h) {
  const auto mon = monodromy(h);
  int count = 0;
  for (int t = 0; t < h.size(); ++t) {
    bool same = true;
    for (const auto& g : mon) {
      if ((g[0] == 0) != (g[t] == t)) {
        same = false;
        break;
      }
    }
    if (same) ++count;
  }
  return count;
}

// Flag count of the closure cover: the index in the monodromy group of the
// normal closure of the base-flag stabilizer.
inline int closure_cover_size(const Hypermap& h) {
  const auto mon = monodromy(h);
  std::vector<std::vector<int>> conjugates;
  for (const auto& s : mon) {
    if (s[0] != 0) continue;
    for (const auto& g : mon) {
      std::vector<int> g_inv(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) g_inv[g[i]] = static_cast<int>(i);
      conjugates.push_back(mul(mul(g_inv, s), g));
    }
  }
  std::sort(conjugates.begin(), conjugates.end());
  conjugates.erase(std::unique(conjugates.begin(), conjugates.end()), conjugates.end());
  const auto normal = closure(conjugates, h.size());
  return static_cast<int>(mon.size() / normal.size());
}

// Rank over GF(2) of bit-vector rows.
inline int gf2_rank(std::vector<std::uint32_t> rows) {
  int rank = 0;
  for (int bit = 31; bit >= 0; --bit) {
    auto pivot = std::find_if(rows.begin(), rows.end(),
                              [&](std::uint32_t r) { return (r >> bit) & 1U; });
    if (pivot == rows.end()) continue;
    const std::uint32_t p = *pivot;
    rows.erase(pivot);
    for (auto& r : rows) {
      if ((r >> bit) & 1U) r ^= p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace hypermap::oracle

#endif  // HYPERMAP_TESTS_ORACLES_H_
