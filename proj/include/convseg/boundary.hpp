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
#include <span>
#include <vector>

#include "convseg/error.hpp"
#include "convseg/geom.hpp"

namespace convseg {

/// Ordered cyclic list of 2D points tracing a closed contour.
/// Consecutive points (including the wrap pair) are distinct and n >= 3.
class ClosedBoundary {
public:
    /// Builds a boundary from raw points, dropping consecutive duplicates
    /// (including the wrap pair). Throws `reject` if fewer than 3 points
    /// survive.
    static ClosedBoundary from_points(const std::vector<Point>& pts,
                                      errc reject = errc::degenerate_boundary);

    std::size_t size() const { return points_.size(); }
    std::span<const Point> points() const { return points_; }

    /// Point at index i with cyclic wrap-around.
    const Point& point(std::size_t i) const { return points_[i % points_.size()]; }

    std::vector<Point> take_points() && { return std::move(points_); }

private:
    explicit ClosedBoundary(std::vector<Point> pts) : points_(std::move(pts)) {}
    std::vector<Point> points_;
};

/// Boundary translated to its centroid and scaled to unit perimeter.
struct NormalizedBoundary {
    std::vector<Point> points;
    Point centroid_original{0.0, 0.0};
    double sigma{0.0};  // object scale, reciprocal of the raw perimeter
    std::size_t start_index_original{0};

    std::size_t size() const { return points.size(); }
    const Point& point(std::size_t i) const { return points[i % points.size()]; }
};

/// Arithmetic mean of the boundary coordinates.
Point centroid(const ClosedBoundary& boundary);

/// Sum of consecutive edge lengths around the cycle, closing edge included.
double perimeter(const ClosedBoundary& boundary);

/// Forces positive shoelace area, reversing the point order if needed.
/// Throws ZeroArea when the signed area is exactly zero.
ClosedBoundary orient_ccw(ClosedBoundary boundary);

/// Maps each point to ((p - centroid) * sigma) with sigma = 1 / perimeter.
NormalizedBoundary normalize(const ClosedBoundary& boundary);

/// Rotates the point list so index 0 is the point farthest from the origin
/// (ties: lowest original index). Idempotent.
NormalizedBoundary canonical_start(NormalizedBoundary nb);

}  // namespace convseg
