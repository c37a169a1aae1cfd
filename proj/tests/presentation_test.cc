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

#include "gtest/gtest.h"
#include "hypermap/families.h"
#include "hypermap/morphism.h"
#include "oracles.h"

namespace hypermap {
namespace {

std::vector<DeltaWord> delta_words(std::initializer_list<const char*> texts) {
  std::vector<DeltaWord> out;
  for (const char* t : texts) out.push_back(DeltaWord::parse(t));
  return out;
}

// Every relator must act trivially at every coset, and generators must be
// involutions generating a regular (hence transitive) action.
void expect_valid_table(const CosetTable& t, const Presentation& p) {
  const int n = t.size();
  for (const auto& g : t.generators) {
    for (int c = 0; c < n; ++c) EXPECT_EQ(g[g[c]], c);
  }
  for (const auto& r : p.relators) {
    for (int c = 0; c < n; ++c) {
      int x = c;
      for (Letter l : r) x = t.generators[l][x];
      EXPECT_EQ(x, c);
    }
  }
  std::vector<std::vector<int>> gens;
  for (const auto& g : t.generators) gens.emplace_back(g.begin(), g.end());
  EXPECT_EQ(oracle::closure(gens, n).size(), static_cast<std::size_t>(n));
}

int enumerate_size(const std::vector<DeltaWord>& relators) {
  const auto p = Presentation::delta(relators, 100000);
  const auto t = coset_enumerate(p);
  expect_valid_table(t, p);
  return t.size();
}

TEST(PresentationTest, ElementaryAbelianOfRankThree) {
  EXPECT_EQ(enumerate_size(delta_words({"0101", "1212", "2020"})), 8);
}

TEST(PresentationTest, BipartiteQuotients) {
  const auto torus = Presentation::bipartite(torus_relators());
  const auto t = coset_enumerate(torus);
  expect_valid_table(t, torus);
  EXPECT_EQ(t.size(), 16);

  const auto klein = Presentation::bipartite(klein_relators());
  const auto k = coset_enumerate(klein);
  expect_valid_table(k, klein);
  // Oracle: the group is elementary abelian of rank 4 minus the rank of the
  // relator letter-parity vectors.
  std::vector<std::uint32_t> rows;
  for (const auto& r : klein.relators) {
    std::uint32_t v = 0;
    for (Letter l : r) v ^= 1U << l;
    rows.push_back(v);
  }
  EXPECT_EQ(k.size(), 1 << (4 - oracle::gf2_rank(rows)));
  EXPECT_EQ(k.size(), 8);
}

// Orders of finite reflection triangle groups: 4 / (1/p + 1/q + 1/r - 1).
TEST(PresentationTest, TriangleGroups) {
  EXPECT_EQ(enumerate_size(delta_words({"0101", "121212", "202020"})), 24);
  EXPECT_EQ(enumerate_size(delta_words({"0101", "121212", "20202020"})), 48);
  EXPECT_EQ(enumerate_size(delta_words({"0101", "121212", "2020202020"})), 120);
  EXPECT_EQ(enumerate_size(delta_words({"2020202020", "121212", "0101"})), 120);
  // Dihedral groups from two generators.
  EXPECT_EQ(enumerate_size(delta_words({"2", "0101010101"})), 10);
}

TEST(PresentationTest, CollapsingPresentations) {
  EXPECT_EQ(enumerate_size(delta_words({"0", "1212"})), 4);
  EXPECT_EQ(enumerate_size(delta_words({"01", "12"})), 2);
  EXPECT_EQ(enumerate_size(delta_words({"012"})), 4);
  EXPECT_EQ(enumerate_size(delta_words({"0", "1", "2"})), 1);
  // R0 = R1 R2 R1 together with a dihedral relation of order 6.
  EXPECT_EQ(enumerate_size(delta_words({"0121", "121212"})), 6);
}

TEST(PresentationTest, InfiniteGroupsExceedCapacity) {
  try {
    coset_enumerate(Presentation::delta({}, 100));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapacityExceeded);
    EXPECT_EQ(e.value(), 100);
  }
  EXPECT_THROW(coset_enumerate(Presentation::delta(delta_words({"01"}), 500)), Error);
  EXPECT_THROW(bipartite_hypermap_from_b_relators({}, 100), Error);
  EXPECT_THROW(regular_hypermap_from_delta_relators({}, 100), Error);
}

TEST(PresentationTest, Deterministic) {
  const auto p = Presentation::delta(delta_words({"0101", "121212", "20202020"}));
  const auto a = coset_enumerate(p);
  const auto b = coset_enumerate(p);
  EXPECT_EQ(a.generators, b.generators);
  // Breadth-first numbering: coset 0 . R0 is coset 1.
  EXPECT_EQ(a.generators[0][0], 1);
}

TEST(PresentationTest, DerivedSubgroupGivesP2) {
  const Hypermap h = regular_hypermap_from_delta_relators(derived_subgroup_relators());
  EXPECT_EQ(h.size(), 8);
  EXPECT_TRUE(is_isomorphic(h, p2()));
  EXPECT_TRUE(is_regular(h));
}

TEST(PresentationTest, BipartiteHypermaps) {
  const Hypermap k = bipartite_hypermap_from_b_relators(klein_relators());
  const Hypermap t = bipartite_hypermap_from_b_relators(torus_relators());
  EXPECT_EQ(k.size(), 16);
  EXPECT_EQ(t.size(), 32);
  for (const Hypermap& h : {k, t}) {
    const auto colour = theta_coloring(h, ThetaClass::kHat0);
    ASSERT_TRUE(colour.has_value());
    for (Flag f = 0; f < h.size(); ++f) {
      EXPECT_EQ((*colour)[f], f < h.size() / 2 ? 0 : 1);
    }
    EXPECT_TRUE(is_bipartite_regular(h));
  }
}

TEST(PresentationTest, DispatchOnArity) {
  Presentation p = Presentation::bipartite(klein_relators());
  EXPECT_EQ(hypermap_from_presentation(p), k_klein());
  Presentation q = Presentation::delta(derived_subgroup_relators());
  EXPECT_EQ(hypermap_from_presentation(q).size(), 8);
}

}  // namespace
}  // namespace hypermap
