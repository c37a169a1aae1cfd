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

#include "hypermap/presentation.h"

#include <string>
#include <utility>

namespace hypermap {

namespace {

constexpr int kUndefined = -1;

// Coset table for a free product of C2's. Every generator is its own
// inverse, so an entry c.g = d is always stored together with d.g = c.
class Enumerator {
 public:
  Enumerator(int arity, std::size_t capacity)
      : arity_(arity), capacity_(capacity) {
    new_coset();
  }

  CosetTable run(const std::vector<std::vector<Letter>>& relators) {
    for (int alpha = 0; alpha < static_cast<int>(parent_.size()); ++alpha) {
      if (!alive(alpha)) continue;
      for (const auto& r : relators) {
        scan_and_fill(alpha, r);
        if (!alive(alpha)) break;
      }
      if (!alive(alpha)) continue;
      for (int g = 0; g < arity_; ++g) {
        if (entry(alpha, g) == kUndefined) define(alpha, g);
      }
    }
    return compact();
  }

 private:
  int& entry(int c, int g) { return table_[static_cast<std::size_t>(c) * arity_ + g]; }
  bool alive(int c) const { return parent_[c] == c; }

  int new_coset() {
    if (parent_.size() >= capacity_) {
      throw Error(ErrorCode::kCapacityExceeded,
                  "coset enumeration exceeded " + std::to_string(capacity_) +
                      " cosets",
                  static_cast<std::int64_t>(capacity_));
    }
    const int c = static_cast<int>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + arity_, kUndefined);
    return c;
  }

  void define(int c, int g) {
    const int d = new_coset();
    entry(c, g) = d;
    entry(d, g) = c;
  }

  int rep(int c) {
    int root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      int next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(int k, int l) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    queue_.push_back(l);
  }

  void coincidence(int alpha, int beta) {
    queue_.clear();
    merge(alpha, beta);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const int gamma = queue_[i];
      for (int g = 0; g < arity_; ++g) {
        const int delta = entry(gamma, g);
        if (delta == kUndefined) continue;
        entry(delta, g) = kUndefined;
        const int mu = rep(gamma);
        const int nu = rep(delta);
        if (entry(mu, g) != kUndefined) {
          merge(nu, entry(mu, g));
        } else if (entry(nu, g) != kUndefined) {
          merge(mu, entry(nu, g));
        } else {
          entry(mu, g) = nu;
          entry(nu, g) = mu;
        }
      }
    }
  }

  // Traces relator r from both ends at coset alpha, defining cosets until
  // the two scans meet, then records the deduction or coincidence.
  void scan_and_fill(int alpha, const std::vector<Letter>& r) {
    if (r.empty()) return;
    int f = alpha;
    int b = alpha;
    int i = 0;
    int j = static_cast<int>(r.size()) - 1;
    while (true) {
      while (i <= j && entry(f, r[i]) != kUndefined) f = entry(f, r[i++]);
      if (i > j) {
        if (f != alpha) coincidence(f, alpha);
        return;
      }
      while (j >= i && entry(b, r[j]) != kUndefined) b = entry(b, r[j--]);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        entry(f, r[i]) = b;
        entry(b, r[i]) = f;
        return;
      }
      define(f, r[i]);
    }
  }

  CosetTable compact() {
    std::vector<int> number(parent_.size(), kUndefined);
    std::vector<int> order = {0};
    number[0] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (int g = 0; g < arity_; ++g) {
        const int d = entry(order[head], g);
        if (number[d] == kUndefined) {
          number[d] = static_cast<int>(order.size());
          order.push_back(d);
        }
      }
    }
    CosetTable out;
    out.generators.assign(arity_, Permutation(order.size()));
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (int g = 0; g < arity_; ++g) {
        out.generators[g][k] = number[entry(order[k], g)];
      }
    }
    return out;
  }

  int arity_;
  std::size_t capacity_;
  std::vector<int> table_;
  std::vector<int> parent_;
  std::vector<int> queue_;
};

template <int Arity>
std::vector<std::vector<Letter>> raw_relators(
    std::span<const Word<Arity>> relators) {
  std::vector<std::vector<Letter>> out;
  for (const auto& r : relators) {
    if (!r.empty()) out.emplace_back(r.letters().begin(), r.letters().end());
  }
  return out;
}

}  // namespace

Presentation Presentation::delta(std::span<const DeltaWord> relators,
                                 std::size_t max_cosets) {
  return {3, raw_relators<3>(relators), max_cosets};
}

Presentation Presentation::bipartite(std::span<const BWord> relators,
                                     std::size_t max_cosets) {
  return {4, raw_relators<4>(relators), max_cosets};
}

CosetTable coset_enumerate(const Presentation& p) {
  if (p.arity < 2 || p.arity > 4) {
    throw Error(ErrorCode::kInvalidSpec, "presentation arity must be 2..4");
  }
  if (p.max_cosets < 1) {
    throw Error(ErrorCode::kInvalidSpec, "max_cosets must be positive");
  }
  for (const auto& r : p.relators) {
    for (Letter l : r) {
      if (l >= p.arity) throw Error(ErrorCode::kParse, "relator letter out of range");
    }
  }
  return Enumerator(p.arity, p.max_cosets).run(p.relators);
}

Hypermap regular_hypermap_from_delta_relators(
    std::span<const DeltaWord> relators, std::size_t max_cosets) {
  CosetTable t = coset_enumerate(Presentation::delta(relators, max_cosets));
  return Hypermap(std::move(t.generators[0]), std::move(t.generators[1]),
                  std::move(t.generators[2]));
}

Hypermap bipartite_hypermap_from_b_relators(std::span<const BWord> relators,
                                            std::size_t max_cosets) {
  const CosetTable t =
      coset_enumerate(Presentation::bipartite(relators, max_cosets));
  const int q = t.size();
  std::array<Permutation, 3> gens;
  for (auto& g : gens) g.resize(2 * q);
  for (Flag x = 0; x < q; ++x) {
    gens[0][x] = x + q;
    gens[0][x + q] = x;
    gens[1][x] = t.generators[0][x];
    gens[2][x] = t.generators[1][x];
    gens[1][x + q] = t.generators[2][x] + q;
    gens[2][x + q] = t.generators[3][x] + q;
  }
  return Hypermap(std::move(gens));
}

Hypermap hypermap_from_presentation(const Presentation& p) {
  if (p.arity == 3) {
    CosetTable t = coset_enumerate(p);
    return Hypermap(std::move(t.generators[0]), std::move(t.generators[1]),
                    std::move(t.generators[2]));
  }
  if (p.arity == 4) {
    std::vector<BWord> relators;
    for (const auto& r : p.relators) relators.emplace_back(r);
    return bipartite_hypermap_from_b_relators(relators, p.max_cosets);
  }
  throw Error(ErrorCode::kInvalidSpec, "hypermaps need arity 3 or 4");
}

}  // namespace hypermap
