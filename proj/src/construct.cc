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

#include "hypermap/construct.h"

#include <numeric>
#include <string>
#include <unordered_map>

namespace hypermap {

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t seed = p.size();
    for (Flag f : p) {
      seed ^= static_cast<std::size_t>(f) + 0x9e3779b97f4a7c15ULL + (seed << 6) +
              (seed >> 2);
    }
    return seed;
  }
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x > y) std::swap(x, y);
    parent_[y] = x;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Merges each pair and closes under x ~ y => x.h_i ~ y.h_i.
Hypermap quotient_by_congruence(const Hypermap& h, UnionFind& classes,
                                std::vector<std::pair<Flag, Flag>> pending) {
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    if (!classes.unite(x, y)) continue;
    for (int i = 0; i < 3; ++i) pending.emplace_back(h.apply(x, i), h.apply(y, i));
  }
  const int n = h.size();
  std::vector<int> number(n, -1);
  std::vector<Flag> representatives = {classes.find(0)};
  number[classes.find(0)] = 0;
  for (std::size_t head = 0; head < representatives.size(); ++head) {
    for (int i = 0; i < 3; ++i) {
      const int c = classes.find(h.apply(representatives[head], i));
      if (number[c] < 0) {
        number[c] = static_cast<int>(representatives.size());
        representatives.push_back(c);
      }
    }
  }
  std::array<Permutation, 3> gens;
  for (int i = 0; i < 3; ++i) {
    gens[i].resize(representatives.size());
    for (std::size_t k = 0; k < representatives.size(); ++k) {
      gens[i][k] = number[classes.find(h.apply(representatives[k], i))];
    }
  }
  return Hypermap(std::move(gens));
}

}  // namespace

Hypermap sigma_dual(const Hypermap& h, const Sigma& sigma) {
  std::array<Permutation, 3> gens;
  for (Letter i = 0; i < 3; ++i) gens[sigma(i)] = h.generator(i);
  return Hypermap(std::move(gens));
}

Hypermap double_cover(const Hypermap& h) {
  if (is_orientable(h)) return h;
  const int n = h.size();
  std::array<Permutation, 3> gens;
  for (int i = 0; i < 3; ++i) {
    gens[i].resize(2 * n);
    for (Flag f = 0; f < n; ++f) {
      gens[i][f] = h.apply(f, i) + n;
      gens[i][f + n] = h.apply(f, i);
    }
  }
  return Hypermap(std::move(gens));
}

// Flags of phi(h) are the cosets of H phi^-1 in the full group. Every element
// of the full group is g or g R0 with g in the bipartite subgroup, so the
// cosets are the pairs (f, 0) ~ (H phi^-1) g and (f, 1) ~ (H phi^-1) g R0,
// where f = 0 . (g phi) is a flag of h. Right multiplication then reads
//   (f, 0) R0 = (f, 1),        (f, 1) R0 = (f, 0),
//   (f, 0) R1 = (f . a phi, 0),  (f, 0) R2 = (f . b phi, 0),
// and, from g R0 R1 = (g c) R0 and g R0 R2 = (g d) R0,
//   (f, 1) R1 = (f . c phi, 1),  (f, 1) R2 = (f . d phi, 1).
// Flag (f, e) is numbered f + e*n; part {(., 0)} holds the base flag.
Hypermap phi_construct(const Hypermap& h, const EpimorphismSpec& phi) {
  check_spec(phi);
  const int n = h.size();
  std::array<Permutation, 4> image;
  for (int g = 0; g < 4; ++g) image[g] = evaluate(h, phi.images[g]);
  std::array<Permutation, 3> gens;
  for (auto& g : gens) g.resize(2 * n);
  for (Flag f = 0; f < n; ++f) {
    gens[0][f] = f + n;
    gens[0][f + n] = f;
    gens[1][f] = image[0][f];
    gens[2][f] = image[1][f];
    gens[1][f + n] = image[2][f] + n;
    gens[2][f + n] = image[3][f] + n;
  }
  return Hypermap(std::move(gens));
}

Hypermap covering_core(const Hypermap& h, std::size_t cap) {
  std::unordered_map<Permutation, int, PermutationHash> index;
  std::vector<Permutation> elements = {identity_permutation(h.size())};
  index.emplace(elements[0], 0);
  std::array<Permutation, 3> gens;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (int i = 0; i < 3; ++i) {
      Permutation next = compose(elements[k], h.generator(i));
      auto [it, inserted] =
          index.emplace(std::move(next), static_cast<int>(elements.size()));
      if (inserted) {
        if (elements.size() >= cap) {
          throw Error(ErrorCode::kCapacityExceeded,
                      "monodromy group has more than " + std::to_string(cap) +
                          " elements",
                      static_cast<std::int64_t>(cap));
        }
        elements.push_back(it->first);
      }
      gens[i].push_back(it->second);
    }
  }
  return Hypermap(std::move(gens));
}

// The closure cover's subgroup is the normal closure of the stabilizer of
// flag 0. Its flags are the classes of the finest congruence in which every
// flag f is identified with f.s for each Schreier generator s of that
// stabilizer.
Hypermap closure_cover(const Hypermap& h) {
  const int n = h.size();
  // Spanning tree: transversal word to each flag, as parent links.
  std::vector<Flag> parent(n, -1);
  std::vector<int> via(n, -1);
  std::vector<Flag> order = {0};
  parent[0] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int i = 0; i < 3; ++i) {
      const Flag g = h.apply(order[head], i);
      if (parent[g] < 0) {
        parent[g] = order[head];
        via[g] = i;
        order.push_back(g);
      }
    }
  }
  auto path_to = [&](Flag f) {
    std::vector<Letter> w;
    while (f != 0) {
      w.push_back(static_cast<Letter>(via[f]));
      f = parent[f];
    }
    return std::vector<Letter>(w.rbegin(), w.rend());
  };

  UnionFind classes(n);
  std::vector<std::pair<Flag, Flag>> pending;
  for (Flag f = 0; f < n; ++f) {
    const auto to_f = path_to(f);
    for (int i = 0; i < 3; ++i) {
      const Flag g = h.apply(f, i);
      if (parent[g] == f && via[g] == i) continue;  // tree edge
      // s = t_f R_i t_g^-1; words are their own letters' inverses reversed.
      std::vector<Letter> s = to_f;
      s.push_back(static_cast<Letter>(i));
      const auto to_g = path_to(g);
      s.insert(s.end(), to_g.rbegin(), to_g.rend());
      const Permutation perm = evaluate(h, s);
      for (Flag x = 0; x < n; ++x) {
        if (perm[x] != x) pending.emplace_back(x, perm[x]);
      }
    }
  }
  return quotient_by_congruence(h, classes, std::move(pending));
}

Hypermap congruence_quotient(const Hypermap& h,
                             std::span<const std::pair<Flag, Flag>> pairs) {
  UnionFind classes(h.size());
  return quotient_by_congruence(
      h, classes, std::vector<std::pair<Flag, Flag>>(pairs.begin(), pairs.end()));
}

}  // namespace hypermap
