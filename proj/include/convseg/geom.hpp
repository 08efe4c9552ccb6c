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

#include <cmath>
#include <span>

namespace convseg {

struct Point {
    double x{0.0};
    double y{0.0};

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }
    friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }

/// z-component of the 2D cross product a x b.
inline double cross_z(Point a, Point b) { return a.x * b.y - a.y * b.x; }

inline double squared_norm(Point a) { return dot(a, a); }
inline double norm(Point a) { return std::sqrt(squared_norm(a)); }
inline double distance(Point a, Point b) { return norm(a - b); }

/// Shoelace signed area of the polygon given by `pts` (implicit closing
/// edge from last back to first). Positive for counterclockwise order.
inline double signed_area(std::span<const Point> pts) {
    double sum = 0.0;
    const std::size_t n = pts.size();
    for (std::size_t k = 0; k < n; ++k) {
        const Point& p = pts[k];
        const Point& q = pts[(k + 1) % n];
        sum += cross_z(p, q);
    }
    return 0.5 * sum;
}

}  // namespace convseg
