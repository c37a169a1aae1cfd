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

// Command-line workbench for hypermaps.
//
//   hypermap build --family pp2k:3 -o pp6.txt
//   hypermap apply phi --spec phi2 p2.txt -o b.txt
//   hypermap info b.txt --format json
//   hypermap check in-im --spec phi2 b.txt
//   hypermap compare --covering big.txt small.txt
//   hypermap verify-paper
//
// Exit status: 0 success, 1 a requested check is false, 2 usage or input
// error, 3 a capacity limit was hit.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hypermap/construct.h"
#include "hypermap/families.h"
#include "hypermap/io.h"
#include "hypermap/morphism.h"
#include "hypermap/presentation.h"
#include "hypermap/verify.h"

namespace hypermap {
namespace {

constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kCapacity = 3;

struct Options {
  std::string family;
  std::string presentation;
  std::size_t max_cosets = kDefaultMaxCosets;
  std::size_t cap = kDefaultMonodromyCap;
  std::string input;
  std::string second;
  std::string output;
  std::string format = "text";
  std::string op;
  std::string property;
  std::string sigma = "id";
  std::string spec;
  std::string theta;
  bool covering = false;
  bool iso = false;
};

Hypermap load(const std::string& path) {
  return parse_hypermap(path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                    : read_file(path));
}

void emit(const Hypermap& h, const Options& o) {
  const std::string text = o.format == "json" ? to_json(h) : to_text(h);
  if (o.output.empty() || o.output == "-") {
    std::cout << text;
  } else {
    write_file(o.output, text);
  }
}

EpimorphismSpec require_spec(const Options& o) {
  if (o.spec.empty()) throw Error(ErrorCode::kParse, "--spec is required");
  return load_epimorphism_spec(o.spec);
}

int run_build(const Options& o) {
  if (o.family.empty() == o.presentation.empty()) {
    throw Error(ErrorCode::kParse, "give exactly one of --family and --presentation");
  }
  if (!o.family.empty()) {
    emit(FamilySpec::parse(o.family).build(), o);
  } else {
    emit(hypermap_from_presentation(parse_presentation(read_file(o.presentation), o.max_cosets)),
         o);
  }
  return 0;
}

int run_info(const Options& o) {
  const InvariantReport r = report(load(o.input));
  std::cout << (o.format == "json" ? report_json(r) : report_text(r));
  return 0;
}

int run_apply(const Options& o) {
  const Hypermap h = load(o.input);
  if (o.op == "dual") {
    emit(sigma_dual(h, Sigma::parse(o.sigma)), o);
  } else if (o.op == "phi") {
    emit(phi_construct(h, require_spec(o)), o);
  } else if (o.op == "double-cover") {
    emit(double_cover(h), o);
  } else if (o.op == "core") {
    emit(covering_core(h, o.cap), o);
  } else {
    emit(closure_cover(h), o);
  }
  return 0;
}

int run_check(const Options& o) {
  const Hypermap h = load(o.input);
  bool result = false;
  if (o.property == "regular") {
    result = is_regular(h);
  } else if (o.property == "bipartite-regular") {
    result = is_bipartite_regular(h);
  } else if (o.property == "theta-regular") {
    if (o.theta.empty()) throw Error(ErrorCode::kParse, "--theta is required");
    result = is_theta_regular(h, parse_theta(o.theta));
  } else if (o.property == "orientable") {
    result = is_orientable(h);
  } else if (o.property == "boundary") {
    result = has_boundary(h);
  } else if (o.property == "bipartite") {
    result = is_bipartite(h);
  } else {
    result = in_image_of(h, require_spec(o));
  }
  std::cout << o.property << " " << (result ? "true" : "false") << "\n";
  return result ? 0 : kCheckFailed;
}

int run_compare(const Options& o) {
  const Hypermap g = load(o.input);
  const Hypermap h = load(o.second);
  bool result = false;
  if (o.iso) {
    result = is_isomorphic(g, h);
    std::cout << "isomorphic " << (result ? "true" : "false") << "\n";
  } else {
    const auto map = find_covering(g, h);
    result = map.has_value();
    std::cout << "covers " << (result ? "true" : "false") << "\n";
    if (map) {
      std::cout << "map";
      for (Flag f : map->images) std::cout << " " << f;
      std::cout << "\n";
    }
  }
  return result ? 0 : kCheckFailed;
}

int run_verify() {
  const auto results = run_acceptance();
  std::cout << format_acceptance_table(results);
  for (const auto& r : results) {
    if (!r.passed()) return kCheckFailed;
  }
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Hypermaps as triples of involutions: constructions, coverings, invariants."};
  app.require_subcommand(1, 1);
  Options o;
  const auto formats = CLI::IsMember({"text", "json"});

  auto* build = app.add_subcommand("build", "Build a hypermap from a family or a presentation");
  build->add_option("--family", o.family,
                    "p2, pp2k:K, sphere222k:K, klein, torus or random:N:SEED");
  build->add_option("--presentation", o.presentation,
                    "File whose first line is 'delta' or 'b', then one relator per line");
  build->add_option("--max-cosets", o.max_cosets, "Coset table capacity");
  build->add_option("-o,--output", o.output, "Output file (default stdout)");
  build->add_option("--format", o.format, "Hypermap file format")->transform(formats);

  auto* info = app.add_subcommand("info", "Print the invariant report of a hypermap file");
  info->add_option("file", o.input, "Hypermap file, or - for stdin")->required();
  info->add_option("--format", o.format, "Report format")->transform(formats);

  auto* apply = app.add_subcommand("apply", "Apply a construction and write the result");
  apply->add_option("op", o.op, "dual, phi, double-cover, core or closure")
      ->required()
      ->check(CLI::IsMember({"dual", "phi", "double-cover", "core", "closure"}));
  apply->add_option("file", o.input, "Hypermap file, or - for stdin")->required();
  apply->add_option("--sigma", o.sigma, "Permutation of {0,1,2} for dual: id, 01, 02, 12, 012, 021");
  apply->add_option("--spec", o.spec, "phi1..phi5 or an epimorphism spec file");
  apply->add_option("--cap", o.cap, "Monodromy group size limit for core");
  apply->add_option("-o,--output", o.output, "Output file (default stdout)");
  apply->add_option("--format", o.format, "Hypermap file format")->transform(formats);

  auto* check = app.add_subcommand("check", "Test a property; exit status 1 when false");
  check->add_option("property", o.property,
                    "regular, bipartite-regular, theta-regular, orientable, boundary, bipartite "
                    "or in-im")
      ->required()
      ->check(CLI::IsMember({"regular", "bipartite-regular", "theta-regular", "orientable",
                             "boundary", "bipartite", "in-im"}));
  check->add_option("file", o.input, "Hypermap file, or - for stdin")->required();
  check->add_option("--spec", o.spec, "phi1..phi5 or an epimorphism spec file (in-im)");
  check->add_option("--theta", o.theta, "plus, hat0, hat1, hat2, sub0, sub1 or sub2");

  auto* compare = app.add_subcommand("compare", "Look for a covering or an isomorphism");
  compare->add_option("first", o.input, "Covering hypermap file")->required();
  compare->add_option("second", o.second, "Covered hypermap file")->required();
  auto* by_cover = compare->add_flag("--covering", o.covering, "Does first cover second");
  auto* by_iso = compare->add_flag("--iso", o.iso, "Are the two isomorphic");
  by_cover->excludes(by_iso);
  by_iso->excludes(by_cover);

  auto* verify = app.add_subcommand("verify-paper", "Run the acceptance suite and print a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*build) return run_build(o);
    if (*info) return run_info(o);
    if (*apply) return run_apply(o);
    if (*check) return run_check(o);
    if (*compare) return run_compare(o);
    if (*verify) return run_verify();
  } catch (const Error& e) {
    std::cerr << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::kCapacityExceeded ? kCapacity : kUsage;
  }
  return kUsage;
}

}  // namespace
}  // namespace hypermap

int main(int argc, char** argv) { return hypermap::run(argc, argv); }
