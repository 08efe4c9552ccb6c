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

#include "convseg/boundary.hpp"

#include <algorithm>
#include <utility>

namespace convseg {

ClosedBoundary ClosedBoundary::from_points(const std::vector<Point>& pts, errc reject) {
    std::vector<Point> clean;
    clean.reserve(pts.size());
    for (const Point& p : pts) {
        if (clean.empty() || !(clean.back() == p)) {
            clean.push_back(p);
        }
    }
    // wrap pair
    while (clean.size() > 1 && clean.front() == clean.back()) {
        clean.pop_back();
    }
    if (clean.size() < 3) {
        throw Error(reject, "boundary has fewer than 3 distinct points");
    }
    return ClosedBoundary(std::move(clean));
}

Point centroid(const ClosedBoundary& boundary) {
    double sx = 0.0;
    double sy = 0.0;
    for (const Point& p : boundary.points()) {
        sx += p.x;
        sy += p.y;
    }
    const double n = static_cast<double>(boundary.size());
    return {sx / n, sy / n};
}

double perimeter(const ClosedBoundary& boundary) {
    double sum = 0.0;
    const std::size_t n = boundary.size();
    for (std::size_t i = 0; i < n; ++i) {
        sum += distance(boundary.point(i), boundary.point(i + 1));
    }
    return sum;
}

ClosedBoundary orient_ccw(ClosedBoundary boundary) {
    const double area = signed_area(boundary.points());
    if (area == 0.0) {
        throw Error(errc::zero_area, "boundary encloses no area");
    }
    if (area > 0.0) {
        return boundary;
    }
    std::vector<Point> pts = std::move(boundary).take_points();
    std::reverse(pts.begin(), pts.end());
    return ClosedBoundary::from_points(pts);
}

NormalizedBoundary normalize(const ClosedBoundary& boundary) {
    const double p = perimeter(boundary);
    if (!(p > 0.0)) {
        throw Error(errc::zero_perimeter);
    }
    const Point c = centroid(boundary);
    const double sigma = 1.0 / p;

    NormalizedBoundary nb;
    nb.centroid_original = c;
    nb.sigma = sigma;
    nb.start_index_original = 0;
    nb.points.reserve(boundary.size());
    for (const Point& q : boundary.points()) {
        nb.points.push_back((q - c) * sigma);
    }
    return nb;
}

NormalizedBoundary canonical_start(NormalizedBoundary nb) {
    const std::size_t n = nb.points.size();
    std::size_t best = 0;
    double best_d2 = squared_norm(nb.points[0]);
    for (std::size_t i = 1; i < n; ++i) {
        const double d2 = squared_norm(nb.points[i]);
        if (d2 > best_d2) {
            best_d2 = d2;
            best = i;
        }
    }
    if (best == 0) {
        return nb;
    }
    std::rotate(nb.points.begin(), nb.points.begin() + static_cast<std::ptrdiff_t>(best),
                nb.points.end());
    nb.start_index_original = (nb.start_index_original + best) % n;
    return nb;
}

}  // namespace convseg
