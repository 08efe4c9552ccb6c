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
#include <random>
#include <vector>

#include "convseg/boundary.hpp"
#include "convseg/raster.hpp"

namespace convseg::fixtures {

// --- analytic outlines -----------------------------------------------------

std::vector<Point> square_outline(Point center, double side, double angle_rad);
std::vector<Point> triangle_outline(Point center, double side, double angle_rad);
std::vector<Point> star_outline(Point center, double outer_r, double inner_r,
                                int spikes, double angle_rad);
std::vector<Point> ellipse_outline(Point center, double a, double b, double angle_rad,
                                   int samples);
std::vector<Point> circle_outline(Point center, double radius, int samples);

/// Star-shaped polygon with random radii over sorted random angles; always a
/// simple closed curve.
std::vector<Point> random_blob(std::mt19937& rng, int min_points, int max_points,
                               double min_r = 1.0, double max_r = 10.0);

// --- rasterization ----------------------------------------------------------

/// Fills pixel centers strictly inside the polygon (even-odd rule).
RasterMask rasterize_polygon(const std::vector<Point>& poly, int width, int height);

/// Rotates the grid by 90 degrees counterclockwise k times.
RasterMask rotate_mask(const RasterMask& mask, int quarter_turns);

/// Embeds the mask in a larger canvas at the given offset.
RasterMask translate_mask(const RasterMask& mask, int dx, int dy, int width, int height);

// --- common test boundaries -------------------------------------------------

ClosedBoundary unit_square_boundary();          // 4 corners, side 4, ccw
ClosedBoundary circle_boundary(int samples);    // unit radius at origin
ClosedBoundary random_blob_boundary(std::mt19937& rng, int min_points, int max_points);

/// Inclusive point-in-polygon: points on an edge count as inside.
bool point_in_polygon(const Point& p, std::span<const Point> poly);

}  // namespace convseg::fixtures
