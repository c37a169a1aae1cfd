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

#include "hypermap/families.h"

#include <random>

#include "hypermap/presentation.h"

namespace hypermap {

namespace {

// r^j s^e in the dihedral group of order 2*order_r.
struct Dihedral {
  int j;
  int e;
};

Dihedral multiply(Dihedral x, Dihedral y, int order_r) {
  // s r = r^-1 s
  const int j = x.e == 0 ? x.j + y.j : x.j - y.j;
  return {((j % order_r) + order_r) % order_r, x.e ^ y.e};
}

void require_positive(int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidSpec, "family parameter k must be >= 1");
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

Permutation random_involution(int n, std::mt19937_64& rng,
                              bool allow_fixed_points) {
  std::vector<Flag> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[i], order[draw(rng, static_cast<std::uint64_t>(i) + 1)]);
  }
  Permutation p(n);
  int i = 0;
  while (i < n) {
    if (i + 1 == n || (allow_fixed_points && draw(rng, 4) == 0)) {
      p[order[i]] = order[i];
      ++i;
    } else {
      p[order[i]] = order[i + 1];
      p[order[i + 1]] = order[i];
      i += 2;
    }
  }
  return p;
}

}  // namespace

Hypermap p2() {
  std::array<Permutation, 3> gens;
  for (int i = 0; i < 3; ++i) {
    gens[i].resize(8);
    for (Flag x = 0; x < 8; ++x) gens[i][x] = x ^ (1 << i);
  }
  return Hypermap(std::move(gens));
}

Hypermap pp2k(int k) {
  require_positive(k);
  const int order_r = 2 * k;
  const std::array<Dihedral, 3> g = {Dihedral{0, 1}, Dihedral{1, 1},
                                     Dihedral{k, 0}};
  std::array<Permutation, 3> gens;
  for (int i = 0; i < 3; ++i) {
    gens[i].resize(2 * order_r);
    for (int j = 0; j < order_r; ++j) {
      for (int e = 0; e < 2; ++e) {
        const Dihedral y = multiply({j, e}, g[i], order_r);
        gens[i][2 * j + e] = 2 * y.j + y.e;
      }
    }
  }
  return Hypermap(std::move(gens));
}

Hypermap sphere222k(int k) {
  require_positive(k);
  const int order_r = 2 * k;
  const std::array<Dihedral, 3> g = {Dihedral{0, 1}, Dihedral{1, 1},
                                     Dihedral{0, 0}};
  const std::array<int, 3> z = {0, 0, 1};
  std::array<Permutation, 3> gens;
  for (int i = 0; i < 3; ++i) {
    gens[i].resize(4 * order_r);
    for (int j = 0; j < order_r; ++j) {
      for (int e = 0; e < 2; ++e) {
        const Dihedral y = multiply({j, e}, g[i], order_r);
        for (int c = 0; c < 2; ++c) {
          gens[i][2 * (2 * j + e) + c] = 2 * (2 * y.j + y.e) + (c ^ z[i]);
        }
      }
    }
  }
  return Hypermap(std::move(gens));
}

std::vector<BWord> torus_relators() {
  std::vector<BWord> out;
  for (Letter u = 0; u < 4; ++u) {
    for (Letter v = u + 1; v < 4; ++v) out.push_back(BWord{u, v, u, v});
  }
  return out;
}

std::vector<BWord> klein_relators() {
  auto out = torus_relators();
  out.push_back(BWord::parse("bdc"));
  return out;
}

std::vector<DeltaWord> derived_subgroup_relators() {
  return {DeltaWord{1, 2, 1, 2}, DeltaWord{2, 0, 2, 0}, DeltaWord{0, 1, 0, 1}};
}

Hypermap k_klein() { return bipartite_hypermap_from_b_relators(klein_relators()); }

Hypermap t_torus() { return bipartite_hypermap_from_b_relators(torus_relators()); }

Hypermap random_hypermap(int n, std::uint64_t seed, bool allow_boundary) {
  if (n < 1) throw Error(ErrorCode::kUnsatisfiable, "need at least one flag");
  if (!allow_boundary && n % 2 != 0) {
    throw Error(ErrorCode::kUnsatisfiable,
                "fixed-point-free involutions need an even flag count", n);
  }
  std::mt19937_64 rng(seed);
  while (true) {
    std::array<Permutation, 3> gens;
    for (auto& g : gens) g = random_involution(n, rng, allow_boundary);
    try {
      return Hypermap(std::move(gens));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotTransitive) throw;
    }
  }
}

FamilySpec FamilySpec::parse(std::string_view text) {
  auto fail = [&]() {
    return Error(ErrorCode::kParse, "bad family '" + std::string(text) + "'");
  };
  auto number = [&](std::string_view s) -> std::uint64_t {
    if (s.empty()) throw fail();
    std::uint64_t v = 0;
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw fail();
      v = v * 10 + static_cast<std::uint64_t>(ch - '0');
      if (v > (1ULL << 40)) throw fail();
    }
    return v;
  };
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view rest =
      colon == std::string_view::npos ? std::string_view() : text.substr(colon + 1);
  FamilySpec spec;
  if (head == "p2" || head == "klein" || head == "torus") {
    if (colon != std::string_view::npos) throw fail();
    spec.kind = head == "p2" ? Kind::kP2 : head == "klein" ? Kind::kKlein : Kind::kTorus;
  } else if (head == "pp2k" || head == "sphere222k") {
    spec.kind = head == "pp2k" ? Kind::kPP2k : Kind::kSphere222k;
    spec.k = static_cast<int>(number(rest));
    if (spec.k < 1) throw fail();
  } else if (head == "random") {
    const auto colon2 = rest.find(':');
    if (colon2 == std::string_view::npos) throw fail();
    spec.kind = Kind::kRandom;
    spec.k = static_cast<int>(number(rest.substr(0, colon2)));
    spec.seed = number(rest.substr(colon2 + 1));
    if (spec.k < 1) throw fail();
  } else {
    throw fail();
  }
  return spec;
}

Hypermap FamilySpec::build() const {
  switch (kind) {
    case Kind::kP2:
      return p2();
    case Kind::kPP2k:
      return pp2k(k);
    case Kind::kSphere222k:
      return sphere222k(k);
    case Kind::kKlein:
      return k_klein();
    case Kind::kTorus:
      return t_torus();
    case Kind::kRandom:
      return random_hypermap(k, seed, false);
  }
  return p2();
}

}  // namespace hypermap
