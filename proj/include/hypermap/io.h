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

#ifndef HYPERMAP_IO_H_
#define HYPERMAP_IO_H_

#include <string>
#include <string_view>

#include "hypermap/hypermap.h"
#include "hypermap/presentation.h"
#include "hypermap/word.h"

namespace hypermap {

// Text format: line 1 is n, lines 2-4 list the n images of h0, h1, h2
// separated by single spaces. Every line ends in '\n'.
std::string to_text(const Hypermap& h);
Hypermap hypermap_from_text(std::string_view text);

// {"n": ..., "h0": [...], "h1": [...], "h2": [...]}
std::string to_json(const Hypermap& h);
Hypermap hypermap_from_json(std::string_view text);

// Picks the JSON reader when the first non-blank character is '{'.
Hypermap parse_hypermap(std::string_view text);

// First line "delta" or "b", then one relator per line in word notation.
// Blank lines and lines starting with '#' are ignored.
Presentation parse_presentation(std::string_view text,
                                std::size_t max_cosets = kDefaultMaxCosets);

// Four lines holding the images of a, b, c, d as words in 0, 1, 2, then any
// number of "kernel: <b-word>" lines.
EpimorphismSpec parse_epimorphism_spec(std::string_view text,
                                       std::string name = "custom");

// Resolves "phi1".."phi5"; anything else is read as a spec file.
EpimorphismSpec load_epimorphism_spec(const std::string& selector);

std::string report_text(const InvariantReport& r);
std::string report_json(const InvariantReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace hypermap

#endif  // HYPERMAP_IO_H_
