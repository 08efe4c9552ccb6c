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

#include <cstdint>
#include <string>
#include <vector>

#include "convseg/boundary.hpp"
#include "convseg/convexdec.hpp"

namespace convseg {

/// Five descriptors of an approximately convex segment. Counts (n, x) are
/// raw; lengths and area (b, h, a) are in unit-perimeter coordinates.
struct SegmentFeatures {
    std::uint32_t n{0};  // segment size: boundary points in the half-open range
    std::uint32_t x{0};  // extreme-point count
    double a{0.0};       // chord-closed area
    double b{0.0};       // base width
    double h{0.0};       // height over the base
};

/// Per-shape segment descriptors, sorted descending by n (ties: descending
/// a, then descending b).
struct FeatureProfile {
    std::vector<SegmentFeatures> segments;
    std::string shape_id;
};

std::size_t segment_size(const ApproxConvexSegment& segment);

/// Boundary points of a segment: the closed arc start..end inclusive, or the
/// full cycle from the anchor for closed segments.
std::vector<Point> segment_points(const NormalizedBoundary& nb,
                                  const ApproxConvexSegment& segment);

/// Strict local minima and maxima of point distance to the segment centroid,
/// after compressing consecutive equal distances into runs. Closed segments
/// use cyclic neighbors; open segments never count their first or last run.
/// Segments under 3 points count 0.
std::uint32_t extreme_point_count(const NormalizedBoundary& nb,
                                  const ApproxConvexSegment& segment);

/// Absolute shoelace area of the segment arc closed by the base chord.
double segment_area(const NormalizedBoundary& nb, const ApproxConvexSegment& segment);

/// Distance between the segment endpoints; 0 for closed segments and for
/// endpoints within 1e-12 of each other.
double base_width(const NormalizedBoundary& nb, const ApproxConvexSegment& segment);

/// Maximum distance of the segment arc from its base chord; closed segments
/// use the maximum distance from the shared endpoint.
double segment_height(const NormalizedBoundary& nb, const ApproxConvexSegment& segment);

FeatureProfile profile(const NormalizedBoundary& nb, const ConvexDecomposition& dec,
                       std::string shape_id = {});

/// CSV with header "segment,n,x,a,b,h".
std::string format_profile_csv(const FeatureProfile& prof);

}  // namespace convseg
