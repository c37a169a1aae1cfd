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

#include "hypermap/word.h"

#include <algorithm>

namespace hypermap {

namespace {

// Parity vectors in enumerator order of ThetaClass.
constexpr std::array<std::array<int, 3>, 7> kParityVectors = {{
    {1, 1, 1},  // plus: even words
    {1, 0, 0},  // hat0: generated by conjugates of R1, R2
    {0, 1, 0},
    {0, 0, 1},
    {0, 1, 1},  // sub0: generated by conjugates of R0 and R1R2
    {1, 0, 1},
    {1, 1, 0},
}};

constexpr std::array<std::string_view, 7> kThetaNames = {
    "plus", "hat0", "hat1", "hat2", "sub0", "sub1", "sub2"};

EpimorphismSpec make_builtin(const std::string& name,
                             std::array<const char*, 4> images,
                             const char* relator) {
  EpimorphismSpec spec;
  spec.name = name;
  for (int i = 0; i < 4; ++i) spec.images[i] = DeltaWord::parse(images[i]);
  spec.kernel_relators.push_back(BWord::parse(relator));
  return spec;
}

}  // namespace

std::array<int, 3> parity_vector(ThetaClass t) {
  return kParityVectors[static_cast<int>(t)];
}

std::string_view theta_name(ThetaClass t) {
  return kThetaNames[static_cast<int>(t)];
}

ThetaClass parse_theta(std::string_view name) {
  for (ThetaClass t : kAllThetaClasses) {
    if (theta_name(t) == name) return t;
  }
  throw Error(ErrorCode::kParse, "unknown subgroup class '" +
                                     std::string(name) + "'");
}

int theta_parity(const DeltaWord& w, ThetaClass t) {
  const auto v = parity_vector(t);
  int parity = 0;
  for (Letter l : w.letters()) parity ^= v[l];
  return parity;
}

Sigma::Sigma(std::array<Letter, 3> image) : image_(image) {
  std::array<Letter, 3> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<Letter, 3>{0, 1, 2}) {
    throw Error(ErrorCode::kParse, "not a permutation of {0,1,2}");
  }
}

Sigma Sigma::parse(std::string_view cycle) {
  if (cycle == "id" || cycle == "e" || cycle.empty()) return Sigma();
  std::array<Letter, 3> image = {0, 1, 2};
  if (cycle.size() > 3) throw Error(ErrorCode::kParse, "bad cycle");
  std::vector<Letter> points;
  for (char ch : cycle) {
    if (ch < '0' || ch > '2') {
      throw Error(ErrorCode::kParse,
                  "bad cycle '" + std::string(cycle) + "'");
    }
    Letter p = static_cast<Letter>(ch - '0');
    if (std::find(points.begin(), points.end(), p) != points.end()) {
      throw Error(ErrorCode::kParse,
                  "repeated point in cycle '" + std::string(cycle) + "'");
    }
    points.push_back(p);
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    image[points[i]] = points[(i + 1) % points.size()];
  }
  return Sigma(image);
}

Sigma Sigma::then(const Sigma& next) const {
  return Sigma({next(image_[0]), next(image_[1]), next(image_[2])});
}

Sigma Sigma::inverse() const {
  std::array<Letter, 3> inv{};
  for (Letter i = 0; i < 3; ++i) inv[image_[i]] = i;
  return Sigma(inv);
}

std::string Sigma::str() const {
  if (*this == Sigma()) return "id";
  // A permutation of three points is a single cycle.
  Letter start = 0;
  while (image_[start] == start) ++start;
  std::string s;
  Letter p = start;
  do {
    s.push_back(static_cast<char>('0' + p));
    p = image_[p];
  } while (p != start);
  return s;
}

DeltaWord apply_sigma(const DeltaWord& w, const Sigma& sigma) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w.letters()) out.push_back(sigma(l));
  return DeltaWord(out);
}

DeltaWord embed(const BWord& bw) {
  static const std::array<DeltaWord, 4> kImages = {
      DeltaWord{1}, DeltaWord{2}, DeltaWord{0, 1, 0}, DeltaWord{0, 2, 0}};
  DeltaWord w;
  for (Letter l : bw.letters()) w *= kImages[l];
  return w;
}

const std::array<EpimorphismSpec, 5>& builtin_phis() {
  static const std::array<EpimorphismSpec, 5> kPhis = {
      make_builtin("phi1", {"1", "2", "0", "2"}, "bd"),
      make_builtin("phi2", {"1", "2", "0", "0"}, "cd"),
      make_builtin("phi3", {"1", "2", "2", "0"}, "bc"),
      make_builtin("phi4", {"1", "2", "0", "1"}, "ad"),
      make_builtin("phi5", {"1", "2", "010", "0"}, "cdad"),
  };
  return kPhis;
}

const EpimorphismSpec& builtin_phi(int index) {
  if (index < 1 || index > 5) {
    throw Error(ErrorCode::kInvalidSpec,
                "built-in epimorphisms are phi1..phi5");
  }
  return builtin_phis()[index - 1];
}

void check_spec(const EpimorphismSpec& spec) {
  for (int i = 0; i < 4; ++i) {
    if (spec.images[i] != spec.images[i].inverse()) {
      throw Error(ErrorCode::kInvalidSpec,
                  "image of " + std::string(1, BWord::symbol(i)) + " (" +
                      spec.images[i].str() + ") is not an involution");
    }
  }
}

DeltaWord apply_phi(const BWord& bw, const EpimorphismSpec& phi) {
  DeltaWord w;
  for (Letter l : bw.letters()) w *= phi.images[l];
  return w;
}

}  // namespace hypermap
