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

#include <array>
#include <string>

#include "convseg/approx.hpp"
#include "convseg/boundary.hpp"
#include "convseg/convexdec.hpp"

namespace convseg {

/// Fixed stroke palette cycled per segment; renders are reproducible.
extern const std::array<const char*, 12> kSegmentPalette;

/// Boundary as one grey path plus one colored path per landmark-to-landmark
/// piece of the approximation polygon.
std::string svg_segments(const NormalizedBoundary& nb, const LandmarkSequence& landmarks);

/// Boundary as one grey path plus one colored path per approximately convex
/// segment, drawn along the segment's boundary arc.
std::string svg_decomposition(const NormalizedBoundary& nb, const ConvexDecomposition& dec);

}  // namespace convseg
