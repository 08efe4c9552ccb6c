// Copyright 2026 the convseg authors
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

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "convseg/boundary.hpp"
#include "convseg/raster.hpp"

namespace convseg {

/// Loads P1/P4 PBM or P2/P5 PGM. PBM: sample 1 is foreground. PGM:
/// intensity >= 128/255 of maxval is foreground. `invert` flips polarity.
RasterMask load_pnm(const std::filesystem::path& path, bool invert = false);

/// One "x,y" pair per line, '#' starts a comment line.
std::vector<Point> read_point_list(const std::filesystem::path& path);
std::vector<Point> parse_point_list(const std::string& text);

/// Shortest round-trip formatting; reading the output reproduces the exact
/// double values.
std::string format_point_list(std::span<const Point> pts);
void write_point_list(const std::filesystem::path& path, std::span<const Point> pts);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

/// Binary (P5) PGM with maxval 255; foreground pixels are 255.
void write_pgm(const std::filesystem::path& path, const RasterMask& mask);

}  // namespace convseg
