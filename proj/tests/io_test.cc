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

#include "hypermap/io.h"

#include "gtest/gtest.h"
#include "hypermap/construct.h"
#include "hypermap/families.h"
#include "hypermap/morphism.h"
#include "json.hpp"

namespace hypermap {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kParse;
}

TEST(TextFormatTest, Example) {
  EXPECT_EQ(to_text(random_hypermap(2, 0, false)), "2\n1 0\n1 0\n1 0\n");
}

TEST(TextFormatTest, RoundTripIsBitExact) {
  std::vector<Hypermap> hs = {p2(), pp2k(3), k_klein(), t_torus()};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    hs.push_back(random_hypermap(1 + static_cast<int>(seed % 17), seed, true));
  }
  for (const auto& h : hs) {
    const std::string text = to_text(h);
    EXPECT_EQ(hypermap_from_text(text), h);
    EXPECT_EQ(to_text(hypermap_from_text(text)), text);
    EXPECT_EQ(parse_hypermap(text), h);
    const std::string js = to_json(h);
    EXPECT_EQ(hypermap_from_json(js), h);
    EXPECT_EQ(parse_hypermap(js), h);
    EXPECT_EQ(to_json(parse_hypermap(js)), js);
  }
}

TEST(TextFormatTest, Errors) {
  EXPECT_EQ(code_of([] { hypermap_from_text("2\n1 0\n1 0\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { hypermap_from_text("2\n1 0\n1 0\n1 2\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { hypermap_from_text("2\n1 0\n1 0\n1 x\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { hypermap_from_text("3\n1 0 2\n1 0 2\n1 0 2\n"); }),
            ErrorCode::kNotTransitive);
  EXPECT_EQ(code_of([] { hypermap_from_text("3\n1 2 0\n0 1 2\n0 1 2\n"); }),
            ErrorCode::kNotInvolution);
  EXPECT_EQ(code_of([] { hypermap_from_json(R"({"n":2,"h0":[1,0],"h1":[1,0]})"); }),
            ErrorCode::kParse);
  EXPECT_EQ(code_of([] { hypermap_from_json("{"); }), ErrorCode::kParse);
}

TEST(PresentationFormatTest, Parse) {
  const Presentation d = parse_presentation("delta\n# torus-like\n0101\n\n1212\n2020\n", 99);
  EXPECT_EQ(d.arity, 3);
  EXPECT_EQ(d.max_cosets, 99u);
  EXPECT_EQ(d.relators.size(), 3u);
  EXPECT_TRUE(is_isomorphic(hypermap_from_presentation(d), p2()));
  const Presentation b = parse_presentation("b\nab\n");
  EXPECT_EQ(b.arity, 4);
  EXPECT_EQ(code_of([] { parse_presentation("gamma\n01\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_presentation("delta\n013\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_presentation(""); }), ErrorCode::kParse);
}

TEST(SpecFormatTest, Parse) {
  const EpimorphismSpec s = parse_epimorphism_spec("1\n2\n0\n2\nkernel: bd\n", "mine");
  EXPECT_EQ(s.name, "mine");
  EXPECT_EQ(s.images, builtin_phi(1).images);
  EXPECT_EQ(s.kernel_relators, builtin_phi(1).kernel_relators);
  EXPECT_EQ(code_of([] { parse_epimorphism_spec("1\n2\n0\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_epimorphism_spec("1\n2\n0\n01\n"); }), ErrorCode::kInvalidSpec);
  EXPECT_EQ(code_of([] { parse_epimorphism_spec("1\n2\n0\n2\nkernel: ab\n"); }),
            ErrorCode::kInvalidSpec);
  EXPECT_EQ(load_epimorphism_spec("phi5").images, builtin_phi(5).images);
}

TEST(ReportFormatTest, TextAndJsonAgree) {
  const auto r = report(k_klein());
  EXPECT_EQ(report_text(r),
            "n 16\nvertices 4\nedges 2\nfaces 2\nchi 0\norientable false\n"
            "boundary false\nbipartite true\ngenus 2\ntype (2,4,4)\n"
            "bipartite_type (2,2;4;4)\nbipartite_type_canonical (2,2;4;4)\n");
  const auto j = nlohmann::ordered_json::parse(report_json(r));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"n", "vertices", "edges", "faces", "chi",
                                            "orientable", "boundary", "bipartite", "genus",
                                            "type", "bipartite_type",
                                            "bipartite_type_canonical"}));
  EXPECT_EQ(j["chi"], 0);
  EXPECT_EQ(j["type"], nlohmann::json({2, 4, 4}));
  const auto b = report(phi_construct(p2(), builtin_phi(2)));
  EXPECT_NE(report_text(b).find("bipartite_type (2,1;4;4)\n"), std::string::npos);
  EXPECT_NE(report_text(b).find("bipartite_type_canonical (1,2;4;4)\n"), std::string::npos);
  const auto odd = report(random_hypermap(3, 1, true));
  EXPECT_TRUE(nlohmann::json::parse(report_json(odd))["chi"].is_null());
  EXPECT_NE(report_text(odd).find("chi none\n"), std::string::npos);
}

}  // namespace
}  // namespace hypermap
