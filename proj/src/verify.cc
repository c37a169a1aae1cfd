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

#include "hypermap/verify.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "hypermap/construct.h"
#include "hypermap/families.h"
#include "hypermap/hypermap.h"
#include "hypermap/morphism.h"
#include "hypermap/presentation.h"
#include "hypermap/word.h"

namespace hypermap {

bool CriterionResult::passed() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const ClaimResult& c) { return c.passed; });
}

namespace {

// Independent reference computations. None of these call into the library
// beyond reading generator tables.

Hypermap cayley_p2() {
  std::array<Permutation, 3> gens;
  for (int i = 0; i < 3; ++i) {
    gens[i].resize(8);
    for (Flag f = 0; f < 8; ++f) gens[i][f] = f ^ (1 << i);
  }
  return Hypermap(gens);
}

int orbit_count(const Hypermap& h, int i, int j) {
  std::vector<int> parent(h.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  int count = h.size();
  for (Flag f = 0; f < h.size(); ++f) {
    for (int g : {i, j}) {
      const int a = find(f);
      const int b = find(h.apply(f, g));
      if (a != b) {
        parent[a] = b;
        --count;
      }
    }
  }
  return count;
}

int direct_chi(const Hypermap& h) {
  return orbit_count(h, 1, 2) + orbit_count(h, 2, 0) + orbit_count(h, 0, 1) - h.size() / 2;
}

using Perm = std::vector<int>;

Perm mul(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm inv(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

std::set<Perm> generate(const std::vector<Perm>& gens, std::size_t n) {
  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> group = {id};
  std::vector<Perm> frontier = {id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Perm y = mul(x, g);
        if (group.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return group;
}

// Flags of the smallest regular hypermap covered by h: the index in Mon(h)
// of the normal closure of the stabiliser of flag 0.
int normal_closure_quotient_size(const Hypermap& h) {
  std::vector<Perm> gens;
  for (int i = 0; i < 3; ++i) gens.emplace_back(h.generator(i).begin(), h.generator(i).end());
  const auto mon = generate(gens, h.size());
  std::vector<Perm> conjugates;
  for (const auto& s : mon) {
    if (s[0] != 0) continue;
    for (const auto& g : mon) conjugates.push_back(mul(mul(inv(g), s), g));
  }
  std::sort(conjugates.begin(), conjugates.end());
  conjugates.erase(std::unique(conjugates.begin(), conjugates.end()), conjugates.end());
  const auto normal = generate(conjugates, h.size());
  return static_cast<int>(mon.size() / normal.size());
}

std::vector<Hypermap> random_batch(int count, int max_n, std::uint64_t base_seed) {
  std::vector<Hypermap> out;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
    const bool boundary = i % 3 == 0;
    int n = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(max_n));
    if (!boundary && n % 2 != 0) ++n;
    if (n > max_n) n -= 2;
    out.push_back(random_hypermap(n, seed, boundary));
  }
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

class Builder {
 public:
  Builder(int number, std::string title) {
    result_.number = number;
    result_.title = std::move(title);
  }

  // `check` returns an empty string on success and a failure detail otherwise.
  void claim(std::string id, std::string description,
             const std::function<std::string()>& check) {
    ClaimResult c{std::move(id), std::move(description), false, ""};
    try {
      c.detail = check();
      c.passed = c.detail.empty();
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    result_.claims.push_back(std::move(c));
  }

  CriterionResult done() { return std::move(result_); }

 private:
  CriterionResult result_;
};

std::string expect_eq(long long got, long long want, const std::string& what) {
  if (got == want) return "";
  return what + " = " + std::to_string(got) + ", expected " + std::to_string(want);
}

std::string expect(bool ok, const std::string& what) { return ok ? "" : what; }

CriterionResult flag_counts() {
  Builder b(1, "Flag counts");
  b.claim("1.p2", "P2 has 8 flags", [] { return expect_eq(p2().size(), 8, "|P2|"); });
  b.claim("1.k", "K has 16 flags", [] { return expect_eq(k_klein().size(), 16, "|K|"); });
  b.claim("1.t", "T has 32 flags", [] { return expect_eq(t_torus().size(), 32, "|T|"); });
  b.claim("1.pp2k", "PP2k has 4k flags for k = 1..5", [] {
    std::vector<std::string> bad;
    for (int k = 1; k <= 5; ++k) {
      if (auto e = expect_eq(pp2k(k).size(), 4 * k, "|PP2k| at k=" + std::to_string(k));
          !e.empty()) {
        bad.push_back(e);
      }
    }
    return join(bad);
  });
  b.claim("1.double", "phi_i(h) has twice the flags of h on 50 random hypermaps", [] {
    std::vector<std::string> bad;
    for (const auto& h : random_batch(50, 12, 1000)) {
      for (const auto& phi : builtin_phis()) {
        const int got = phi_construct(h, phi).size();
        if (got != 2 * h.size()) {
          bad.push_back(phi.name + " on " + std::to_string(h.size()) + " flags gave " +
                        std::to_string(got));
        }
      }
    }
    return join(bad);
  });
  return b.done();
}

CriterionResult klein_torus_examples() {
  Builder b(2, "Klein bottle and torus examples");
  const Hypermap k = k_klein();
  const Hypermap t = t_torus();
  b.claim("2.k.bipartite-regular", "K is bipartite-regular",
          [&] { return expect(is_bipartite_regular(k), "K not bipartite-regular"); });
  b.claim("2.k.not-regular", "K is not regular",
          [&] { return expect(!is_regular(k), "K is regular"); });
  b.claim("2.k.type", "K is uniform of type (2,4,4)", [&] {
    const auto type = uniform_type(k);
    return expect(type == UniformType{2, 4, 4},
                  "type " + (type ? to_string(*type) : std::string("none")));
  });
  b.claim("2.k.chi", "K has Euler characteristic 0",
          [&] { return expect_eq(euler_characteristic(k), 0, "chi(K)"); });
  b.claim("2.k.nonorientable", "K is non-orientable",
          [&] { return expect(!is_orientable(k), "K orientable"); });
  b.claim("2.t.double-cover", "T is isomorphic to the orientable double cover of K",
          [&] { return expect(is_isomorphic(double_cover(k), t), "K+ not isomorphic to T"); });
  b.claim("2.t.regular", "T is regular, orientable, Euler characteristic 0", [&] {
    return join({expect(is_regular(t), "T not regular"),
                 expect(is_orientable(t), "T not orientable"),
                 expect_eq(euler_characteristic(t), 0, "chi(T)")});
  });
  b.claim("2.dual-map", "The (01)-dual of T satisfies (h2 h0)^2 = 1", [&] {
    const Hypermap d = sigma_dual(t, Sigma::parse("01"));
    return expect(is_identity(evaluate(d, DeltaWord::parse("2020"))),
                  "(h2 h0)^2 is not the identity");
  });
  b.claim("2.core", "covering_core(K) is isomorphic to T",
          [&] { return expect(is_isomorphic(covering_core(k), t), "core of K differs from T"); });
  b.claim("2.order-of-operations", "(K+)^closure is not isomorphic to (K^closure)+", [&] {
    const Hypermap lhs = closure_cover(double_cover(k));
    const Hypermap rhs = double_cover(closure_cover(k));
    return expect(!is_isomorphic(lhs, rhs), "the two are isomorphic");
  });
  b.claim("2.order-size", "|(K+)^closure| = 2 |(K^closure)+|", [&] {
    const int lhs = closure_cover(double_cover(k)).size();
    const int rhs = double_cover(closure_cover(k)).size();
    return expect_eq(lhs, 2 * rhs, "|(K+)^closure|");
  });
  return b.done();
}

CriterionResult phi2_of_p2() {
  Builder b(3, "phi2 applied to P2");
  const Hypermap h = phi_construct(p2(), builtin_phi(2));
  b.claim("3.type", "phi2(P2) has bipartite type (1,2;4;4)", [&] {
    const auto type = bipartite_type(h);
    return expect(type && type->canonical() == BipartiteType{1, 2, 4, 4},
                  "type " + (type ? to_string(*type) : std::string("none")));
  });
  b.claim("3.core", "covering_core(phi2(P2)) is isomorphic to T", [&] {
    return expect(is_isomorphic(covering_core(h), t_torus()), "core differs from T");
  });
  return b.done();
}

CriterionResult membership() {
  Builder b(4, "Image membership");
  b.claim("4.members", "phi_i(h) lies in im phi_i for h in {P2, PP2, PP4, sphere222k(2)}", [] {
    std::vector<std::string> bad;
    const std::vector<std::pair<std::string, Hypermap>> inputs = {
        {"P2", p2()}, {"PP2", pp2k(1)}, {"PP4", pp2k(2)}, {"sphere222k(2)", sphere222k(2)}};
    for (const auto& [name, h] : inputs) {
      for (const auto& phi : builtin_phis()) {
        if (!in_image_of(phi_construct(h, phi), phi)) bad.push_back(phi.name + "(" + name + ")");
      }
    }
    return join(bad);
  });
  b.claim("4.t", "T is in no im phi_i", [] {
    std::vector<std::string> bad;
    for (const auto& phi : builtin_phis()) {
      if (in_image_of(t_torus(), phi)) bad.push_back(phi.name);
    }
    return join(bad);
  });
  b.claim("4.k", "K is in no im phi_i", [] {
    std::vector<std::string> bad;
    for (const auto& phi : builtin_phis()) {
      if (in_image_of(k_klein(), phi)) bad.push_back(phi.name);
    }
    return join(bad);
  });
  b.claim("4.generators", "The quotient group of T needs 4 generators",
          [] { return expect_eq(b_quotient_min_generators(t_torus()), 4, "rank"); });
  return b.done();
}

CriterionResult chi_formulas() {
  Builder b(5, "Euler characteristic formulas");
  b.claim("5.pp2k", "phi3, phi4, phi5 on PP2k: chi 0, 2-2k, 3-2k; genus 2k, 2k-1", [] {
    std::vector<std::string> bad;
    for (int k = 1; k <= 5; ++k) {
      const std::string at = " at k=" + std::to_string(k);
      const Hypermap b3 = phi_construct(pp2k(k), builtin_phi(3));
      const Hypermap b4 = phi_construct(pp2k(k), builtin_phi(4));
      const Hypermap b5 = phi_construct(pp2k(k), builtin_phi(5));
      for (auto e : {expect_eq(euler_characteristic(b3), 0, "chi(phi3)" + at),
                     expect_eq(euler_characteristic(b4), 2 - 2 * k, "chi(phi4)" + at),
                     expect_eq(euler_characteristic(b5), 3 - 2 * k, "chi(phi5)" + at),
                     expect(!is_orientable(b4), "phi4 orientable" + at),
                     expect(!is_orientable(b5), "phi5 orientable" + at),
                     expect_eq(genus(b4), 2 * k, "genus(phi4)" + at),
                     expect_eq(genus(b5), 2 * k - 1, "genus(phi5)" + at),
                     expect_eq(direct_chi(b4), 2 - 2 * k, "orbit chi(phi4)" + at),
                     expect_eq(direct_chi(b5), 3 - 2 * k, "orbit chi(phi5)" + at)}) {
        if (!e.empty()) bad.push_back(e);
      }
    }
    return join(bad);
  });
  b.claim("5.sphere", "On sphere222k(k) the characteristics double and match orbit counts", [] {
    std::vector<std::string> bad;
    for (int k = 1; k <= 5; ++k) {
      const std::string at = " at k=" + std::to_string(k);
      const std::array<int, 3> want = {0, 2 * (2 - 2 * k), 2 * (3 - 2 * k)};
      for (int i = 3; i <= 5; ++i) {
        const Hypermap h = phi_construct(sphere222k(k), builtin_phi(i));
        const std::string name = "phi" + std::to_string(i);
        for (auto e : {expect_eq(euler_characteristic(h), want[i - 3], "chi(" + name + ")" + at),
                       expect_eq(direct_chi(h), want[i - 3], "orbit chi(" + name + ")" + at),
                       expect(is_orientable(h), name + " not orientable" + at)}) {
          if (!e.empty()) bad.push_back(e);
        }
      }
    }
    return join(bad);
  });
  return b.done();
}

std::string certify(const Hypermap& h, int want_genus, bool want_orientable,
                    const std::string& label) {
  std::vector<std::string> bad;
  if (!is_theta_regular(h, ThetaClass::kHat0)) bad.push_back(label + " not bipartite-regular");
  if (is_orientable(h) != want_orientable) bad.push_back(label + " has the wrong orientability");
  if (genus(h) != want_genus) {
    bad.push_back(label + " genus " + std::to_string(genus(h)) + ", expected " +
                  std::to_string(want_genus));
  }
  return join(bad);
}

CriterionResult genus_sweep() {
  Builder b(6, "Bipartite-regular hypermaps on every surface in range");
  b.claim("6.nonorientable", "Non-orientable genus 1..10 from phi4 and phi5 on PP2k", [] {
    std::vector<std::string> bad;
    for (int g = 1; g <= 10; ++g) {
      const int k = (g + 1) / 2;
      const int index = g % 2 == 0 ? 4 : 5;
      const Hypermap h = phi_construct(pp2k(k), builtin_phi(index));
      auto e = certify(h, g, false, "genus " + std::to_string(g));
      if (!e.empty()) bad.push_back(e);
    }
    return join(bad);
  });
  b.claim("6.orientable", "Orientable genus 0..6 from phi1(P2), T, and phi4, phi5 on spheres",
          [] {
            std::vector<std::string> bad;
            for (int g = 0; g <= 6; ++g) {
              Hypermap h = Hypermap::trivial();
              if (g == 0) {
                h = phi_construct(p2(), builtin_phi(1));
              } else if (g == 1) {
                h = t_torus();
              } else if (g % 2 == 1) {
                h = phi_construct(sphere222k((g + 1) / 2), builtin_phi(4));
              } else {
                h = phi_construct(sphere222k((g + 2) / 2), builtin_phi(5));
              }
              auto e = certify(h, g, true, "genus " + std::to_string(g));
              if (!e.empty()) bad.push_back(e);
            }
            return join(bad);
          });
  return b.done();
}

// A random hypermap with at most `max_n` flags that is not orientable.
Hypermap random_nonorientable(int max_n, std::uint64_t& seed) {
  while (true) {
    const int n = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(max_n));
    Hypermap h = random_hypermap(n, seed++, true);
    if (!is_orientable(h)) return h;
  }
}

CriterionResult properties() {
  Builder b(7, "Property suite on random hypermaps");
  // The covering cores appended here are regular.
  std::vector<Hypermap> inputs = random_batch(100, 8, 5000);
  for (const auto& h : random_batch(20, 4, 7000)) inputs.push_back(covering_core(h));
  const std::vector<Hypermap> small = random_batch(20, 4, 9000);

  b.claim("7.regular", "h regular iff phi(h) bipartite-regular, for all built-ins", [&] {
    std::vector<std::string> bad;
    int regular = 0;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      const bool r = is_regular(inputs[i]);
      regular += r;
      for (const auto& phi : builtin_phis()) {
        if (is_bipartite_regular(phi_construct(inputs[i], phi)) != r) {
          bad.push_back(phi.name + " on input " + std::to_string(i));
        }
      }
    }
    if (regular == 0 || regular == static_cast<int>(inputs.size())) {
      bad.push_back("inputs do not cover both cases");
    }
    return join(bad);
  });
  b.claim("7.covering", "phi preserves coverings on 20 core/hypermap pairs", [&] {
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < small.size(); ++i) {
      const Hypermap core = covering_core(small[i]);
      for (const auto& phi : builtin_phis()) {
        if (!covers(phi_construct(core, phi), phi_construct(small[i], phi))) {
          bad.push_back(phi.name + " on pair " + std::to_string(i));
        }
      }
    }
    return join(bad);
  });
  b.claim("7.automorphisms", "|Aut phi(h)| / |Aut h| is 1 or 2", [&] {
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      const int base = automorphism_count(inputs[i]);
      for (const auto& phi : builtin_phis()) {
        const int got = automorphism_count(phi_construct(inputs[i], phi));
        if (got != base && got != 2 * base) {
          bad.push_back(phi.name + " on input " + std::to_string(i) + ": " +
                        std::to_string(got) + " vs " + std::to_string(base));
        }
      }
    }
    return join(bad);
  });
  b.claim("7.chain", "Covering chain from phi(h)_core down to phi(h)^closure", [&] {
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < small.size(); ++i) {
      const Hypermap& h = small[i];
      for (const auto& phi : builtin_phis()) {
        const Hypermap image = phi_construct(h, phi);
        const std::array<Hypermap, 5> chain = {
            covering_core(image), phi_construct(covering_core(h), phi), image,
            phi_construct(closure_cover(h), phi), closure_cover(image)};
        for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
          if (!covers(chain[j], chain[j + 1])) {
            bad.push_back(phi.name + " on input " + std::to_string(i) + " link " +
                          std::to_string(j));
          }
        }
      }
    }
    return join(bad);
  });
  b.claim("7.consequences",
          "phi preserves orientability and boundary, and phi(h+) = phi(h)+", [&] {
            std::vector<std::string> bad;
            for (std::size_t i = 0; i < inputs.size(); ++i) {
              const Hypermap& h = inputs[i];
              const Hypermap plus = double_cover(h);
              for (const auto& phi : builtin_phis()) {
                const Hypermap image = phi_construct(h, phi);
                const std::string at = phi.name + " on input " + std::to_string(i);
                if (is_orientable(image) != is_orientable(h)) bad.push_back(at + " orientability");
                if (has_boundary(image) != has_boundary(h)) bad.push_back(at + " boundary");
                if (!is_isomorphic(phi_construct(plus, phi), double_cover(image))) {
                  bad.push_back(at + " double cover");
                }
              }
            }
            return join(bad);
          });
  b.claim("7.core-double-cover", "(h+)_core = (h_core)+ on 20 random non-orientable hypermaps", [] {
    std::vector<std::string> bad;
    std::uint64_t seed = 11000;
    for (int i = 0; i < 20; ++i) {
      const Hypermap h = random_nonorientable(4, seed);
      if (!is_isomorphic(covering_core(double_cover(h)), double_cover(covering_core(h)))) {
        bad.push_back("input " + std::to_string(i));
      }
    }
    return join(bad);
  });
  return b.done();
}

CriterionResult oracles() {
  Builder b(8, "Agreement with independent constructions");
  b.claim("8.p2", "Coset enumeration of the derived subgroup gives the Cayley P2", [] {
    const Hypermap enumerated = regular_hypermap_from_delta_relators(derived_subgroup_relators());
    return expect(is_isomorphic(enumerated, cayley_p2()), "not isomorphic");
  });
  b.claim("8.k", "Coset enumeration of the K relators gives 16 flags", [] {
    return expect_eq(bipartite_hypermap_from_b_relators(klein_relators()).size(), 16, "|K|");
  });
  b.claim("8.t", "Coset enumeration of the T relators gives 32 flags", [] {
    return expect_eq(bipartite_hypermap_from_b_relators(torus_relators()).size(), 32, "|T|");
  });
  b.claim("8.closure", "closure_cover(K) matches the normal-closure index in Mon(K)", [] {
    const Hypermap k = k_klein();
    const Hypermap c = closure_cover(k);
    return join({expect_eq(c.size(), normal_closure_quotient_size(k), "|K^closure|"),
                 expect(is_regular(c), "closure cover not regular"),
                 expect(covers(k, c), "K does not cover its closure")});
  });
  b.claim("8.words", "Reducing 1000 random words does not change their action", [] {
    std::vector<std::string> bad;
    std::mt19937_64 rng(424242);
    const Hypermap h = random_hypermap(9, 17, true);
    for (int i = 0; i < 1000; ++i) {
      std::vector<Letter> raw(rng() % 24);
      for (auto& l : raw) l = static_cast<Letter>(rng() % 3);
      const DeltaWord w = reduce<3>(raw);
      for (std::size_t j = 1; j < w.size(); ++j) {
        if (w[j] == w[j - 1]) bad.push_back("word " + std::to_string(i) + " not reduced");
      }
      if (reduce<3>(w.letters()) != w) bad.push_back("word " + std::to_string(i) + " unstable");
      Permutation naive(h.size());
      for (Flag f = 0; f < h.size(); ++f) {
        Flag x = f;
        for (Letter l : raw) x = h.apply(x, l);
        naive[f] = x;
      }
      if (naive != evaluate(h, w) || naive != evaluate(h, raw)) {
        bad.push_back("word " + std::to_string(i) + " acts differently");
      }
      if (bad.size() > 5) break;
    }
    return join(bad);
  });
  return b.done();
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
  return {flag_counts(), klein_torus_examples(), phi2_of_p2(), membership(),
          chi_formulas(), genus_sweep(),         properties(), oracles()};
}

std::string format_acceptance_table(const std::vector<CriterionResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    for (const auto& c : r.claims) {
      out << "  " << (c.passed ? "ok  " : "FAIL") << "  " << c.id << "  " << c.description;
      if (!c.passed) out << "  [" << c.detail << "]";
      out << "\n";
    }
  }
  for (const auto& r : results) {
    out << (r.passed() ? "PASS" : "FAIL") << "  criterion " << r.number << ": " << r.title
        << "\n";
  }
  return out.str();
}

}  // namespace hypermap
