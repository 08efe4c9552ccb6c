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

#include <cstddef>
#include <string>
#include <vector>

#include "convseg/approx.hpp"
#include "convseg/boundary.hpp"

namespace convseg {

/// Run of landmarks with no concave interior vertex. Delimiting landmarks
/// are concave except in the 0/1-concave degenerate cases, where a single
/// closed segment spans the whole cycle.
struct ApproxConvexSegment {
    std::size_t start_lm{0};    // position in the landmark list
    std::size_t end_lm{0};
    std::size_t start_bidx{0};  // boundary index of the delimiting landmarks
    std::size_t end_bidx{0};
    std::size_t size{0};        // boundary points in the half-open range [start, end)
    bool closed{false};         // spans the whole cycle
};

struct ConvexDecomposition {
    std::vector<ApproxConvexSegment> segments;
    LandmarkSequence landmark_source;
};

/// z-component of (S_a - S_b) x (S_b - S_c); negative marks S_b concave on
/// a counterclockwise cycle.
double turn_z(const Point& s_a, const Point& s_b, const Point& s_c);

/// Positions in the landmark list whose turn is strictly negative.
std::vector<std::size_t> concave_points(const NormalizedBoundary& nb,
                                        const LandmarkSequence& landmarks);

/// Splits the landmark cycle at every concave point. Zero or one concave
/// points produce a single closed segment.
ConvexDecomposition decompose(const NormalizedBoundary& nb, const LandmarkSequence& landmarks);

/// One "seg=<k> lm_start=<i> lm_end=<j> size=<n_k>" line per segment.
std::string format_decomposition(const ConvexDecomposition& dec);

}  // namespace convseg
