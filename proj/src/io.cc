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

#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace hypermap {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in{std::string(text)};
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& line : split_lines(text)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    out.push_back(std::move(t));
  }
  return out;
}

Permutation parse_images(const std::string& line, int n) {
  std::istringstream in(line);
  Permutation p;
  long long v = 0;
  while (in >> v) {
    if (v < 0 || v >= n) throw Error(ErrorCode::kParse, "flag out of range: " + std::to_string(v));
    p.push_back(static_cast<Flag>(v));
  }
  if (!in.eof()) throw Error(ErrorCode::kParse, "non-numeric token in '" + line + "'");
  if (static_cast<int>(p.size()) != n) {
    throw Error(ErrorCode::kParse, "expected " + std::to_string(n) + " images, got " +
                                       std::to_string(p.size()));
  }
  return p;
}

json optional_json(const std::optional<int>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

std::string to_text(const Hypermap& h) {
  std::string out = std::to_string(h.size()) + "\n";
  for (int i = 0; i < 3; ++i) {
    for (Flag f = 0; f < h.size(); ++f) {
      if (f > 0) out.push_back(' ');
      out += std::to_string(h.apply(f, i));
    }
    out.push_back('\n');
  }
  return out;
}

Hypermap hypermap_from_text(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.size() < 4) throw Error(ErrorCode::kParse, "hypermap file needs 4 lines");
  for (std::size_t i = 4; i < lines.size(); ++i) {
    if (!trim(lines[i]).empty()) throw Error(ErrorCode::kParse, "trailing content in hypermap file");
  }
  long long n = 0;
  try {
    std::size_t used = 0;
    n = std::stoll(lines[0], &used);
    if (trim(lines[0].substr(used)) != "") throw Error(ErrorCode::kParse, "bad flag count");
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kParse, "bad flag count '" + lines[0] + "'");
  }
  if (n < 1 || n > (1LL << 30)) throw Error(ErrorCode::kParse, "flag count out of range");
  const int count = static_cast<int>(n);
  return Hypermap(parse_images(lines[1], count), parse_images(lines[2], count),
                  parse_images(lines[3], count));
}

std::string to_json(const Hypermap& h) {
  json j;
  j["n"] = h.size();
  j["h0"] = h.generator(0);
  j["h1"] = h.generator(1);
  j["h2"] = h.generator(2);
  return j.dump() + "\n";
}

Hypermap hypermap_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    const int n = j.at("n").get<int>();
    std::array<Permutation, 3> gens;
    for (int i = 0; i < 3; ++i) {
      gens[i] = j.at("h" + std::to_string(i)).get<Permutation>();
      if (static_cast<int>(gens[i].size()) != n) {
        throw Error(ErrorCode::kParse, "h" + std::to_string(i) + " has the wrong length");
      }
    }
    return Hypermap(std::move(gens));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad hypermap JSON: ") + e.what());
  }
}

Hypermap parse_hypermap(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return hypermap_from_json(text);
  return hypermap_from_text(text);
}

Presentation parse_presentation(std::string_view text, std::size_t max_cosets) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::kParse, "empty presentation");
  Presentation p;
  p.max_cosets = max_cosets;
  if (lines[0] == "delta") {
    p.arity = 3;
  } else if (lines[0] == "b") {
    p.arity = 4;
  } else {
    throw Error(ErrorCode::kParse, "presentation must start with 'delta' or 'b'");
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<Letter> r;
    if (p.arity == 3) {
      const auto w = DeltaWord::parse(lines[i]);
      r.assign(w.letters().begin(), w.letters().end());
    } else {
      const auto w = BWord::parse(lines[i]);
      r.assign(w.letters().begin(), w.letters().end());
    }
    if (!r.empty()) p.relators.push_back(std::move(r));
  }
  return p;
}

EpimorphismSpec parse_epimorphism_spec(std::string_view text, std::string name) {
  const auto lines = content_lines(text);
  EpimorphismSpec spec;
  spec.name = std::move(name);
  int images = 0;
  for (const auto& line : lines) {
    if (line.rfind("kernel:", 0) == 0) {
      spec.kernel_relators.push_back(BWord::parse(trim(line.substr(7))));
    } else if (images < 4) {
      spec.images[images++] = DeltaWord::parse(line);
    } else {
      throw Error(ErrorCode::kParse, "unexpected line '" + line + "' in epimorphism spec");
    }
  }
  if (images != 4) throw Error(ErrorCode::kParse, "epimorphism spec needs four images");
  check_spec(spec);
  for (const auto& r : spec.kernel_relators) {
    if (!apply_phi(r, spec).empty()) {
      throw Error(ErrorCode::kInvalidSpec,
                  "kernel relator " + r.str() + " does not map to the identity");
    }
  }
  return spec;
}

EpimorphismSpec load_epimorphism_spec(const std::string& selector) {
  if (selector.size() == 4 && selector.rfind("phi", 0) == 0 && selector[3] >= '1' &&
      selector[3] <= '5') {
    return builtin_phi(selector[3] - '0');
  }
  return parse_epimorphism_spec(read_file(selector), selector);
}

std::string report_text(const InvariantReport& r) {
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("none"); };
  auto flag = [](bool b) { return b ? std::string("true") : std::string("false"); };
  std::string out;
  out += "n " + std::to_string(r.n) + "\n";
  out += "vertices " + std::to_string(r.vertices) + "\n";
  out += "edges " + std::to_string(r.edges) + "\n";
  out += "faces " + std::to_string(r.faces) + "\n";
  out += "chi " + opt(r.chi) + "\n";
  out += "orientable " + flag(r.orientable) + "\n";
  out += "boundary " + flag(r.has_boundary) + "\n";
  out += "bipartite " + flag(r.bipartite) + "\n";
  out += "genus " + opt(r.genus) + "\n";
  out += "type " + (r.uniform_type ? to_string(*r.uniform_type) : std::string("none")) + "\n";
  out += "bipartite_type " +
         (r.bipartite_type ? to_string(*r.bipartite_type) : std::string("none")) + "\n";
  out += "bipartite_type_canonical " +
         (r.bipartite_type ? to_string(r.bipartite_type->canonical()) : std::string("none")) +
         "\n";
  return out;
}

std::string report_json(const InvariantReport& r) {
  json j = json::object();
  j["n"] = r.n;
  j["vertices"] = r.vertices;
  j["edges"] = r.edges;
  j["faces"] = r.faces;
  j["chi"] = optional_json(r.chi);
  j["orientable"] = r.orientable;
  j["boundary"] = r.has_boundary;
  j["bipartite"] = r.bipartite;
  j["genus"] = optional_json(r.genus);
  if (r.uniform_type) {
    j["type"] = {r.uniform_type->vertex, r.uniform_type->edge, r.uniform_type->face};
  } else {
    j["type"] = nullptr;
  }
  if (r.bipartite_type) {
    const auto& t = *r.bipartite_type;
    const auto c = t.canonical();
    j["bipartite_type"] = {t.l1, t.l2, t.m, t.n};
    j["bipartite_type_canonical"] = {c.l1, c.l2, c.m, c.n};
  } else {
    j["bipartite_type"] = nullptr;
    j["bipartite_type_canonical"] = nullptr;
  }
  return j.dump() + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParse, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace hypermap
