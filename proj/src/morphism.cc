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

#include "hypermap/morphism.h"

#include <algorithm>
#include <map>
#include <set>

#include "hypermap/construct.h"

namespace hypermap {

namespace {

constexpr int kMaxQuotientOrder = 64;
constexpr std::size_t kMaxPreimageLength = 7;

// Shortest reduced b-words mapping to R0, R1, R2 under phi, found by
// breadth-first search over reduced words.
std::optional<std::array<BWord, 3>> generator_preimages(
    const EpimorphismSpec& phi) {
  std::array<std::optional<BWord>, 3> found;
  int missing = 3;
  std::vector<BWord> layer = {BWord()};
  for (std::size_t len = 1; len <= kMaxPreimageLength && missing > 0; ++len) {
    std::vector<BWord> next;
    for (const BWord& w : layer) {
      for (Letter l = 0; l < 4; ++l) {
        if (!w.empty() && w[w.size() - 1] == l) continue;
        BWord x = w * BWord{l};
        const DeltaWord image = apply_phi(x, phi);
        if (image.size() == 1 && !found[image[0]]) {
          found[image[0]] = x;
          --missing;
        }
        next.push_back(std::move(x));
      }
    }
    layer = std::move(next);
  }
  if (missing > 0) return std::nullopt;
  return std::array<BWord, 3>{*found[0], *found[1], *found[2]};
}

// Which part's flags every kernel relator fixes: 0 for A, 1 for B.
std::optional<int> kernel_part(const Hypermap& b, const EpimorphismSpec& phi) {
  if (phi.kernel_relators.empty()) {
    throw Error(ErrorCode::kNoKernelRelators,
                "epimorphism '" + phi.name + "' has no kernel relators");
  }
  const BipartiteParts parts = bipartite_parts(b);
  bool fixes_a = true;
  bool fixes_b = true;
  for (const BWord& r : phi.kernel_relators) {
    const Permutation p = evaluate(b, embed(r));
    for (Flag f : parts.a) fixes_a = fixes_a && p[f] == f;
    for (Flag f : parts.b) fixes_b = fixes_b && p[f] == f;
  }
  if (fixes_a) return 0;
  if (fixes_b) return 1;
  return std::nullopt;
}

// Closure of `gens` under composition, as a set of permutations.
std::set<Permutation> generated_group(const std::vector<Permutation>& gens,
                                      std::size_t n) {
  std::set<Permutation> group = {identity_permutation(n)};
  std::vector<Permutation> frontier = {identity_permutation(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Permutation y = compose(x, g);
        if (group.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return group;
}

bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

}  // namespace

std::optional<FlagMap> covering_from_base(const Hypermap& g, const Hypermap& h,
                                          Flag target) {
  const int n = g.size();
  std::vector<Flag> images(n, -1);
  std::vector<Flag> queue = {0};
  images[0] = target;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Flag f = queue[head];
    for (int i = 0; i < 3; ++i) {
      const Flag next = g.apply(f, i);
      const Flag want = h.apply(images[f], i);
      if (images[next] < 0) {
        images[next] = want;
        queue.push_back(next);
      } else if (images[next] != want) {
        return std::nullopt;
      }
    }
  }
  return FlagMap{std::move(images)};
}

std::optional<FlagMap> find_covering(const Hypermap& g, const Hypermap& h) {
  if (h.size() > g.size() || g.size() % h.size() != 0) return std::nullopt;
  for (Flag t = 0; t < h.size(); ++t) {
    if (auto m = covering_from_base(g, h, t)) return m;
  }
  return std::nullopt;
}

bool covers(const Hypermap& g, const Hypermap& h) {
  return find_covering(g, h).has_value();
}

bool is_isomorphic(const Hypermap& g, const Hypermap& h) {
  return g.size() == h.size() && covers(g, h);
}

std::vector<FlagMap> automorphisms(const Hypermap& h) {
  std::vector<FlagMap> out;
  for (Flag t = 0; t < h.size(); ++t) {
    if (auto m = covering_from_base(h, h, t)) out.push_back(std::move(*m));
  }
  return out;
}

int automorphism_count(const Hypermap& h) {
  int count = 0;
  for (Flag t = 0; t < h.size(); ++t) {
    if (covering_from_base(h, h, t)) ++count;
  }
  return count;
}

bool is_regular(const Hypermap& h) {
  for (Flag t = 1; t < h.size(); ++t) {
    if (!covering_from_base(h, h, t)) return false;
  }
  return true;
}

bool is_theta_regular(const Hypermap& h, ThetaClass t) {
  const auto colour = theta_coloring(h, t);
  if (!colour) return false;
  for (Flag f = 1; f < h.size(); ++f) {
    if ((*colour)[f] == 0 && !covering_from_base(h, h, f)) return false;
  }
  return true;
}

bool is_bipartite_regular(const Hypermap& h) {
  return is_theta_regular(h, ThetaClass::kHat0);
}

bool in_image_of(const Hypermap& b, const EpimorphismSpec& phi) {
  return kernel_part(b, phi).has_value();
}

// The bipartite subgroup acts on the chosen part P through phi, because the
// kernel fixes P pointwise. Lifting R0, R1, R2 to b-words therefore gives a
// well-defined action of the full group on P whose base-flag stabilizer H
// satisfies H phi^-1 = Stab(base), i.e. phi(H) is `b`.
std::optional<Hypermap> recover_preimage(const Hypermap& b,
                                         const EpimorphismSpec& phi) {
  const auto part = kernel_part(b, phi);
  if (!part) return std::nullopt;
  const auto lifts = generator_preimages(phi);
  if (!lifts) return std::nullopt;
  const BipartiteParts parts = bipartite_parts(b);
  const std::vector<Flag>& flags = *part == 0 ? parts.a : parts.b;
  std::vector<Flag> number(b.size(), -1);
  for (std::size_t k = 0; k < flags.size(); ++k) {
    number[flags[k]] = static_cast<Flag>(k);
  }
  std::array<Permutation, 3> gens;
  for (int i = 0; i < 3; ++i) {
    const Permutation p = evaluate(b, embed((*lifts)[i]));
    gens[i].resize(flags.size());
    for (std::size_t k = 0; k < flags.size(); ++k) {
      gens[i][k] = number[p[flags[k]]];
    }
  }
  Hypermap h(std::move(gens));
  if (!is_isomorphic(phi_construct(h, phi), b)) return std::nullopt;
  return h;
}

int b_quotient_min_generators(const Hypermap& b) {
  if (!is_bipartite_regular(b)) {
    throw Error(ErrorCode::kNotBipartiteRegular,
                "hypermap is not bipartite-regular");
  }
  const BipartiteParts parts = bipartite_parts(b);
  const std::size_t order = parts.a.size();
  if (order > static_cast<std::size_t>(kMaxQuotientOrder)) {
    throw Error(ErrorCode::kCapacityExceeded,
                "quotient group too large for generator search",
                kMaxQuotientOrder);
  }
  std::vector<Flag> number(b.size(), -1);
  for (std::size_t k = 0; k < order; ++k) number[parts.a[k]] = static_cast<Flag>(k);
  std::vector<Permutation> abcd;
  for (Letter l = 0; l < 4; ++l) {
    const Permutation p = evaluate(b, embed(BWord{l}));
    Permutation restricted(order);
    for (std::size_t k = 0; k < order; ++k) restricted[k] = number[p[parts.a[k]]];
    abcd.push_back(std::move(restricted));
  }
  const std::set<Permutation> group_set = generated_group(abcd, order);
  const std::vector<Permutation> group(group_set.begin(), group_set.end());
  if (group.size() == 1) return 1;
  const int size = static_cast<int>(group.size());
  for (int k = 1; k <= 4; ++k) {
    std::vector<int> idx(k);
    for (int j = 0; j < k; ++j) idx[j] = j;
    if (k > size) break;
    do {
      std::vector<Permutation> gens;
      for (int j : idx) gens.push_back(group[j]);
      if (generated_group(gens, order).size() == group.size()) return k;
    } while (next_combination(idx, size));
  }
  return 4;
}

}  // namespace hypermap
