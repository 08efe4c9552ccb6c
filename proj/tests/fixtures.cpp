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

#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace convseg::fixtures {

namespace {

Point rotated(Point p, Point center, double angle_rad) {
    const double c = std::cos(angle_rad);
    const double s = std::sin(angle_rad);
    const Point d = p - center;
    return {center.x + c * d.x - s * d.y, center.y + s * d.x + c * d.y};
}

}  // namespace

std::vector<Point> square_outline(Point center, double side, double angle_rad) {
    const double h = side / 2.0;
    std::vector<Point> pts = {{center.x - h, center.y - h},
                              {center.x + h, center.y - h},
                              {center.x + h, center.y + h},
                              {center.x - h, center.y + h}};
    for (Point& p : pts) p = rotated(p, center, angle_rad);
    return pts;
}

std::vector<Point> triangle_outline(Point center, double side, double angle_rad) {
    const double r = side / std::numbers::sqrt3;  // circumradius
    std::vector<Point> pts;
    for (int k = 0; k < 3; ++k) {
        const double a = angle_rad + 2.0 * std::numbers::pi * k / 3.0;
        pts.push_back({center.x + r * std::cos(a), center.y + r * std::sin(a)});
    }
    return pts;
}

std::vector<Point> star_outline(Point center, double outer_r, double inner_r,
                                int spikes, double angle_rad) {
    std::vector<Point> pts;
    for (int k = 0; k < spikes; ++k) {
        const double a_out = angle_rad + 2.0 * std::numbers::pi * k / spikes;
        const double a_in = a_out + std::numbers::pi / spikes;
        pts.push_back({center.x + outer_r * std::cos(a_out),
                       center.y + outer_r * std::sin(a_out)});
        pts.push_back({center.x + inner_r * std::cos(a_in),
                       center.y + inner_r * std::sin(a_in)});
    }
    return pts;
}

std::vector<Point> ellipse_outline(Point center, double a, double b, double angle_rad,
                                   int samples) {
    std::vector<Point> pts;
    for (int k = 0; k < samples; ++k) {
        const double t = 2.0 * std::numbers::pi * k / samples;
        const Point p{center.x + a * std::cos(t), center.y + b * std::sin(t)};
        pts.push_back(rotated(p, center, angle_rad));
    }
    return pts;
}

std::vector<Point> circle_outline(Point center, double radius, int samples) {
    return ellipse_outline(center, radius, radius, 0.0, samples);
}

std::vector<Point> random_blob(std::mt19937& rng, int min_points, int max_points,
                               double min_r, double max_r) {
    std::uniform_int_distribution<int> count_dist(min_points, max_points);
    std::uniform_real_distribution<double> angle_dist(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> radius_dist(min_r, max_r);

    const int n = count_dist(rng);
    std::vector<double> angles(static_cast<std::size_t>(n));
    for (double& a : angles) a = angle_dist(rng);
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end()), angles.end());

    std::vector<Point> pts;
    for (const double a : angles) {
        const double r = radius_dist(rng);
        pts.push_back({r * std::cos(a), r * std::sin(a)});
    }
    return pts;
}

RasterMask rasterize_polygon(const std::vector<Point>& poly, int width, int height) {
    RasterMask mask = RasterMask::make(width, height);
    const std::size_t n = poly.size();
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            // even-odd crossing count for the pixel center
            const double px = c;
            const double py = r;
            bool inside = false;
            for (std::size_t k = 0; k < n; ++k) {
                const Point& a = poly[k];
                const Point& b = poly[(k + 1) % n];
                if ((a.y > py) != (b.y > py)) {
                    const double x_cross = a.x + (py - a.y) / (b.y - a.y) * (b.x - a.x);
                    if (px < x_cross) inside = !inside;
                }
            }
            if (inside) mask.set(r, c, true);
        }
    }
    return mask;
}

RasterMask rotate_mask(const RasterMask& mask, int quarter_turns) {
    RasterMask cur = mask;
    for (int t = 0; t < ((quarter_turns % 4) + 4) % 4; ++t) {
        RasterMask next = RasterMask::make(cur.height, cur.width);
        for (int r = 0; r < cur.height; ++r) {
            for (int c = 0; c < cur.width; ++c) {
                if (cur.at(r, c)) {
                    next.set(cur.width - 1 - c, r, true);
                }
            }
        }
        cur = std::move(next);
    }
    return cur;
}

RasterMask translate_mask(const RasterMask& mask, int dx, int dy, int width, int height) {
    RasterMask out = RasterMask::make(width, height);
    for (int r = 0; r < mask.height; ++r) {
        for (int c = 0; c < mask.width; ++c) {
            if (mask.at(r, c)) {
                const int nr = r + dy;
                const int nc = c + dx;
                if (nr >= 0 && nc >= 0 && nr < height && nc < width) {
                    out.set(nr, nc, true);
                }
            }
        }
    }
    return out;
}

ClosedBoundary unit_square_boundary() {
    return orient_ccw(ClosedBoundary::from_points({{0, 0}, {4, 0}, {4, 4}, {0, 4}}));
}

ClosedBoundary circle_boundary(int samples) {
    return orient_ccw(ClosedBoundary::from_points(circle_outline({0, 0}, 1.0, samples)));
}

ClosedBoundary random_blob_boundary(std::mt19937& rng, int min_points, int max_points) {
    return orient_ccw(ClosedBoundary::from_points(random_blob(rng, min_points, max_points)));
}

bool point_in_polygon(const Point& p, std::span<const Point> poly) {
    const std::size_t n = poly.size();
    // on-edge counts as inside
    for (std::size_t k = 0; k < n; ++k) {
        const Point& a = poly[k];
        const Point& b = poly[(k + 1) % n];
        const Point ab = b - a;
        const Point ap = p - a;
        if (cross_z(ab, ap) == 0.0 && dot(ap, b - p) >= 0.0 && dot(p - a, ab) >= 0.0) {
            return true;
        }
    }
    bool inside = false;
    for (std::size_t k = 0; k < n; ++k) {
        const Point& a = poly[k];
        const Point& b = poly[(k + 1) % n];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (p.x < x_cross) inside = !inside;
        }
    }
    return inside;
}

}  // namespace convseg::fixtures
