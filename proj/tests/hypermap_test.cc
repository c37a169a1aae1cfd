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

#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "hypermap/construct.h"
#include "hypermap/families.h"
#include "oracles.h"

namespace hypermap {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kParse;
}

// Exhaustive search for a consistent colouring, trying all 2^n assignments.
bool colouring_exists(const Hypermap& h, ThetaClass t) {
  const auto flips = parity_vector(t);
  const int n = h.size();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool ok = true;
    for (int f = 0; f < n && ok; ++f) {
      for (int i = 0; i < 3 && ok; ++i) {
        const int g = h.apply(f, i);
        ok = (((mask >> f) ^ (mask >> g)) & 1U) == static_cast<std::uint32_t>(flips[i]);
      }
    }
    if (ok) return true;
  }
  return false;
}

TEST(HypermapTest, ValidateExamples) {
  EXPECT_NO_THROW(Hypermap::trivial());
  EXPECT_NO_THROW(Hypermap({1, 0}, {1, 0}, {1, 0}));
  try {
    Hypermap({0, 1}, {0, 1}, {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotTransitive);
    EXPECT_EQ(e.value(), 1);
  }
  try {
    Hypermap({1, 2, 0}, {0, 1, 2}, {0, 1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotInvolution);
    EXPECT_EQ(e.value(), 0);
  }
  EXPECT_EQ(code_of([] { Hypermap({1, 0}, {0, 1}, {0}); }), ErrorCode::kNotInvolution);
  EXPECT_EQ(code_of([] { Hypermap({1, 0}, {0, 5}, {1, 0}); }), ErrorCode::kNotInvolution);
}

TEST(HypermapTest, CellsOfNamedHypermaps) {
  const Hypermap p = p2();
  EXPECT_EQ(cell_count(p, CellKind::kVertex), 2);
  EXPECT_EQ(cell_count(p, CellKind::kEdge), 2);
  EXPECT_EQ(cell_count(p, CellKind::kFace), 2);

  const Hypermap k = k_klein();
  int total = 0;
  for (const auto& v : cells(k, CellKind::kVertex)) {
    EXPECT_EQ(v.size(), 4u);  // valency 2
    total += static_cast<int>(v.size());
  }
  EXPECT_EQ(total, 16);

  for (int kk = 1; kk <= 5; ++kk) {
    const Hypermap pp = pp2k(kk);
    EXPECT_EQ(cell_count(pp, CellKind::kVertex), kk);
    EXPECT_EQ(cell_count(pp, CellKind::kEdge), kk);
    EXPECT_EQ(cell_count(pp, CellKind::kFace), 1);
  }
}

TEST(HypermapTest, CellsPartitionFlagsAndMatchOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Hypermap h = random_hypermap(2 + 2 * (seed % 6), seed, seed % 3 == 0);
    const std::array<std::pair<CellKind, std::array<int, 2>>, 3> kinds = {
        {{CellKind::kVertex, {1, 2}}, {CellKind::kEdge, {2, 0}}, {CellKind::kFace, {0, 1}}}};
    for (const auto& [kind, pair] : kinds) {
      const auto cs = cells(h, kind);
      EXPECT_EQ(static_cast<int>(cs.size()), oracle::orbit_count(h, pair[0], pair[1]));
      std::size_t total = 0;
      for (const auto& c : cs) total += c.size();
      EXPECT_EQ(total, static_cast<std::size_t>(h.size()));
      if (!has_boundary(h)) {
        for (const auto& c : cs) EXPECT_EQ(c.size() % 2, 0u);
      }
    }
  }
}

TEST(HypermapTest, EulerCharacteristicAndGenus) {
  EXPECT_EQ(euler_characteristic(p2()), 2);
  EXPECT_EQ(genus(p2()), 0);
  const Hypermap k = k_klein();
  EXPECT_EQ(euler_characteristic(k), 0);
  EXPECT_FALSE(is_orientable(k));
  EXPECT_EQ(genus(k), 2);
  EXPECT_EQ(euler_characteristic(t_torus()), 0);
  EXPECT_EQ(genus(t_torus()), 1);
  EXPECT_EQ(code_of([] { genus(Hypermap::trivial()); }), ErrorCode::kBoundaryPresent);
  EXPECT_EQ(code_of([] { euler_characteristic(Hypermap::trivial()); }), ErrorCode::kOddFlagCount);
}

TEST(HypermapTest, OrientableEulerCharacteristicIsEven) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Hypermap h = random_hypermap(2 + 2 * (seed % 7), seed, false);
    EXPECT_EQ(euler_characteristic(h), oracle::chi(h));
    if (is_orientable(h)) EXPECT_EQ(euler_characteristic(h) % 2, 0);
  }
}

TEST(HypermapTest, Boundary) {
  EXPECT_FALSE(has_boundary(k_klein()));
  EXPECT_TRUE(has_boundary(Hypermap::trivial()));
  EXPECT_TRUE(has_boundary(Hypermap({1, 0}, {0, 1}, {1, 0})));
}

TEST(HypermapTest, ThetaColouring) {
  EXPECT_TRUE(theta_coloring(t_torus(), ThetaClass::kPlus).has_value());
  EXPECT_FALSE(theta_coloring(k_klein(), ThetaClass::kPlus).has_value());
  EXPECT_TRUE(theta_coloring(k_klein(), ThetaClass::kHat0).has_value());
  EXPECT_TRUE(is_orientable(t_torus()));
}

TEST(HypermapTest, ThetaColouringMatchesExhaustiveSearch) {
  std::vector<Hypermap> hs = {p2(), pp2k(1), pp2k(2), sphere222k(1), Hypermap::trivial()};
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    hs.push_back(random_hypermap(1 + static_cast<int>(seed % 10), seed, true));
  }
  for (const auto& h : hs) {
    for (ThetaClass t : kAllThetaClasses) {
      const auto c = theta_coloring(h, t);
      EXPECT_EQ(c.has_value(), colouring_exists(h, t)) << theta_name(t);
      if (c) {
        EXPECT_EQ((*c)[0], 0);
      }
    }
  }
}

// The derived subgroup lies in every index-2 subgroup, so P2 is conservative
// for all seven classes, bipartite included.
TEST(HypermapTest, P2IsBipartite) {
  EXPECT_TRUE(colouring_exists(p2(), ThetaClass::kHat0));
  EXPECT_TRUE(is_bipartite(p2()));
  for (ThetaClass t : kAllThetaClasses) EXPECT_TRUE(is_theta_conservative(p2(), t));
  EXPECT_EQ(bipartite_type(p2()), (BipartiteType{2, 2, 2, 2}));
}

TEST(HypermapTest, BipartitePartsHaveEqualSize) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Hypermap h = random_hypermap(2 + 2 * (seed % 5), seed, false);
    if (!is_bipartite(h)) {
      EXPECT_EQ(code_of([&] { bipartite_parts(h); }), ErrorCode::kNotBipartite);
      continue;
    }
    const auto parts = bipartite_parts(h);
    EXPECT_EQ(parts.a.size(), parts.b.size());
    EXPECT_EQ(parts.a.front(), 0);
  }
  const auto parts = bipartite_parts(phi_construct(p2(), builtin_phi(1)));
  EXPECT_EQ(parts.a.size(), 8u);
}

TEST(HypermapTest, Types) {
  EXPECT_EQ(uniform_type(k_klein()), (UniformType{2, 4, 4}));
  EXPECT_EQ(uniform_type(p2()), (UniformType{2, 2, 2}));
  const auto bt = bipartite_type(phi_construct(p2(), builtin_phi(2)));
  ASSERT_TRUE(bt.has_value());
  EXPECT_EQ(bt->canonical(), (BipartiteType{1, 2, 4, 4}));
  EXPECT_EQ(to_string(*bt), "(2,1;4;4)");
  EXPECT_FALSE(uniform_type(phi_construct(p2(), builtin_phi(2))).has_value());
  EXPECT_EQ(code_of([] { uniform_type(Hypermap::trivial()); }), ErrorCode::kBoundaryPresent);
  EXPECT_EQ(code_of([] { bipartite_type(pp2k(3)); }), ErrorCode::kNotBipartite);
}

TEST(HypermapTest, Evaluate) {
  const Hypermap k = k_klein();
  EXPECT_TRUE(is_identity(evaluate(k, DeltaWord())));
  for (Letter i = 0; i < 3; ++i) {
    const std::vector<Letter> ii = {i, i};
    EXPECT_TRUE(is_identity(evaluate(k, ii)));
  }
  EXPECT_EQ(act(k, 0, embed(BWord::parse("bdc"))), 0);
  EXPECT_EQ(act(k, 3, DeltaWord({0, 1})), k.apply(k.apply(3, 0), 1));
}

TEST(HypermapTest, EvaluateIgnoresReduction) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const Hypermap h = random_hypermap(1 + static_cast<int>(rng() % 12), rng(), true);
    std::vector<Letter> raw(rng() % 25);
    for (auto& l : raw) l = static_cast<Letter>(rng() % 3);
    EXPECT_EQ(evaluate(h, DeltaWord(raw)), evaluate(h, raw));
  }
}

TEST(HypermapTest, Report) {
  const auto r = report(k_klein());
  EXPECT_EQ(r.n, 16);
  EXPECT_EQ(r.chi, 0);
  EXPECT_FALSE(r.orientable);
  EXPECT_TRUE(r.bipartite);
  EXPECT_FALSE(r.has_boundary);
  EXPECT_EQ(r.genus, 2);
  EXPECT_EQ(r.uniform_type, (UniformType{2, 4, 4}));
  ASSERT_TRUE(r.bipartite_type.has_value());
  EXPECT_EQ(r.bipartite_type->canonical(), (BipartiteType{2, 2, 4, 4}));

  const auto t = report(Hypermap::trivial());
  EXPECT_FALSE(t.chi.has_value());
  EXPECT_FALSE(t.genus.has_value());
  EXPECT_TRUE(t.has_boundary);
}

}  // namespace
}  // namespace hypermap
