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

#ifndef HYPERMAP_WORD_H_
#define HYPERMAP_WORD_H_

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypermap/error.h"

namespace hypermap {

using Letter = std::uint8_t;

// An element of the free product of `Arity` copies of C2, kept in reduced
// form: no two adjacent letters are equal. Every constructor reduces, so two
// words are equal as group elements iff they compare equal.
//
// Arity 3 words are written with the digits 0, 1, 2 (letter i is the
// generator R_i). Arity 4 words are written with a, b, c, d, the free
// generators R_1, R_2, R_1^{R_0}, R_2^{R_0} of the bipartite subgroup. The
// identity is written "e".
template <int Arity>
class Word {
  static_assert(Arity >= 2 && Arity <= 4);

 public:
  static constexpr int kArity = Arity;

  Word() = default;
  explicit Word(std::span<const Letter> letters) {
    for (Letter l : letters) push(l);
  }
  Word(std::initializer_list<int> letters) {
    for (int l : letters) push(static_cast<Letter>(l));
  }

  static char symbol(Letter l) {
    return Arity == 4 ? static_cast<char>('a' + l) : static_cast<char>('0' + l);
  }

  static Word parse(std::string_view text) {
    Word w;
    if (text == "e") return w;
    if (text.empty()) throw Error(ErrorCode::kParse, "empty word text");
    for (char ch : text) {
      int l = Arity == 4 ? ch - 'a' : ch - '0';
      if (l < 0 || l >= Arity) {
        throw Error(ErrorCode::kParse,
                    "bad letter '" + std::string(1, ch) + "' in word '" +
                        std::string(text) + "'");
      }
      w.push(static_cast<Letter>(l));
    }
    return w;
  }

  std::string str() const {
    if (letters_.empty()) return "e";
    std::string s;
    for (Letter l : letters_) s.push_back(symbol(l));
    return s;
  }

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word& operator*=(const Word& other) {
    for (Letter l : other.letters_) push(l);
    return *this;
  }
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  // Each letter is its own inverse.
  Word inverse() const {
    Word w;
    w.letters_.assign(letters_.rbegin(), letters_.rend());
    return w;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  void push(Letter l) {
    if (l >= Arity) {
      throw Error(ErrorCode::kParse,
                  "letter " + std::to_string(l) + " out of range");
    }
    if (!letters_.empty() && letters_.back() == l) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }

  std::vector<Letter> letters_;
};

using DeltaWord = Word<3>;
using BWord = Word<4>;

template <int Arity>
Word<Arity> reduce(std::span<const Letter> letters) {
  return Word<Arity>(letters);
}

// The seven index-2 normal subgroups of the free product of three C2's. Each
// is the kernel of a homomorphism onto C2 given by a nonzero parity vector:
// a word maps to the dot product of its letter counts with the vector, mod 2.
enum class ThetaClass { kPlus, kHat0, kHat1, kHat2, kSub0, kSub1, kSub2 };

inline constexpr std::array<ThetaClass, 7> kAllThetaClasses = {
    ThetaClass::kPlus, ThetaClass::kHat0, ThetaClass::kHat1, ThetaClass::kHat2,
    ThetaClass::kSub0, ThetaClass::kSub1, ThetaClass::kSub2};

std::array<int, 3> parity_vector(ThetaClass t);
std::string_view theta_name(ThetaClass t);
ThetaClass parse_theta(std::string_view name);

// 0 iff `w` lies in the subgroup named by `t`.
int theta_parity(const DeltaWord& w, ThetaClass t);

// A permutation of {0,1,2}; image[i] is the image of i. Composition follows
// the right-action convention: i(st) = (is)t.
class Sigma {
 public:
  Sigma() : image_{0, 1, 2} {}
  explicit Sigma(std::array<Letter, 3> image);

  // Cycle notation without parentheses: "id", "01", "02", "12", "012", "021".
  static Sigma parse(std::string_view cycle);
  static Sigma identity() { return Sigma(); }

  Letter operator()(Letter i) const { return image_[i]; }
  Sigma then(const Sigma& next) const;
  Sigma inverse() const;
  std::string str() const;

  friend bool operator==(const Sigma&, const Sigma&) = default;

 private:
  std::array<Letter, 3> image_;
};

DeltaWord apply_sigma(const DeltaWord& w, const Sigma& sigma);

// a -> 1, b -> 2, c -> 010, d -> 020.
DeltaWord embed(const BWord& bw);

// A homomorphism from the bipartite subgroup onto the full group, given by
// the images of a, b, c, d, together with relators whose normal closure is
// its kernel.
struct EpimorphismSpec {
  std::string name;
  std::array<DeltaWord, 4> images;
  std::vector<BWord> kernel_relators;
};

// The five tabulated epimorphisms, index 1..5.
const EpimorphismSpec& builtin_phi(int index);
const std::array<EpimorphismSpec, 5>& builtin_phis();

// Throws kInvalidSpec unless every image squares to the identity (reduced
// words that are palindromes), which is required for a, b, c, d to map
// homomorphically.
void check_spec(const EpimorphismSpec& spec);

DeltaWord apply_phi(const BWord& bw, const EpimorphismSpec& phi);

}  // namespace hypermap

#endif  // HYPERMAP_WORD_H_
