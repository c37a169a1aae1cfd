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

#ifndef HYPERMAP_MORPHISM_H_
#define HYPERMAP_MORPHISM_H_

#include <optional>
#include <vector>

#include "hypermap/hypermap.h"
#include "hypermap/word.h"

namespace hypermap {

// An equivariant map of flags: images[f . g_i] == images[f] . h_i.
struct FlagMap {
  std::vector<Flag> images;
};

// The unique covering sending flag 0 of `g` to `target`, if one exists.
std::optional<FlagMap> covering_from_base(const Hypermap& g, const Hypermap& h,
                                          Flag target);

// The covering with the lowest image of flag 0, if any.
std::optional<FlagMap> find_covering(const Hypermap& g, const Hypermap& h);

bool covers(const Hypermap& g, const Hypermap& h);
bool is_isomorphic(const Hypermap& g, const Hypermap& h);

// Automorphisms act freely, so each is determined by the image of flag 0;
// the list is ordered by that image.
std::vector<FlagMap> automorphisms(const Hypermap& h);
int automorphism_count(const Hypermap& h);

bool is_regular(const Hypermap& h);

// True iff `h` is t-conservative and automorphisms act transitively on the
// colour class of flag 0. False, not an error, when not t-conservative.
bool is_theta_regular(const Hypermap& h, ThetaClass t);
bool is_bipartite_regular(const Hypermap& h);

// Whether `b` is phi(H) for some hypermap H: the kernel of phi must fix
// every flag of part A, or every flag of part B. Throws kNotBipartite and
// kNoKernelRelators.
bool in_image_of(const Hypermap& b, const EpimorphismSpec& phi);

// A hypermap H with phi_construct(H, phi) isomorphic to `b`, built on the
// part whose flags the kernel fixes. Absent when `b` is not in the image.
std::optional<Hypermap> recover_preimage(const Hypermap& b,
                                         const EpimorphismSpec& phi);

// The least k such that k elements generate the group induced on part A by
// a, b, c, d. Throws kNotBipartiteRegular, and kCapacityExceeded when that
// group has more than 64 elements.
int b_quotient_min_generators(const Hypermap& b);

}  // namespace hypermap

#endif  // HYPERMAP_MORPHISM_H_
