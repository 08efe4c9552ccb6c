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

#include "convseg/features.hpp"

#include <algorithm>
#include <cmath>

#include "convseg/io.hpp"

namespace convseg {

namespace {

constexpr double kClosedBaseEps = 1e-12;

bool effectively_closed(const NormalizedBoundary& nb, const ApproxConvexSegment& seg) {
    if (seg.closed) return true;
    return distance(nb.point(seg.start_bidx), nb.point(seg.end_bidx)) <= kClosedBaseEps;
}

struct Run {
    double value;
};

std::vector<Run> compress_runs(const std::vector<double>& values) {
    std::vector<Run> runs;
    for (const double v : values) {
        if (runs.empty() || runs.back().value != v) {
            runs.push_back({v});
        }
    }
    return runs;
}

}  // namespace

std::size_t segment_size(const ApproxConvexSegment& segment) { return segment.size; }

std::vector<Point> segment_points(const NormalizedBoundary& nb,
                                  const ApproxConvexSegment& segment) {
    std::vector<Point> pts;
    if (segment.closed) {
        pts.reserve(nb.size());
        for (std::size_t k = 0; k < nb.size(); ++k) {
            pts.push_back(nb.point(segment.start_bidx + k));
        }
    } else {
        pts.reserve(segment.size + 1);
        for (std::size_t k = 0; k <= segment.size; ++k) {
            pts.push_back(nb.point(segment.start_bidx + k));
        }
    }
    return pts;
}

std::uint32_t extreme_point_count(const NormalizedBoundary& nb,
                                  const ApproxConvexSegment& segment) {
    const std::vector<Point> pts = segment_points(nb, segment);
    if (pts.size() < 3) return 0;

    Point c{0.0, 0.0};
    for (const Point& p : pts) c = c + p;
    c = c * (1.0 / static_cast<double>(pts.size()));

    std::vector<double> dist(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) dist[k] = distance(pts[k], c);

    const bool closed = effectively_closed(nb, segment);
    std::vector<Run> runs = compress_runs(dist);
    if (closed && runs.size() > 1 && runs.front().value == runs.back().value) {
        runs.pop_back();  // wrap-adjacent equal runs merge cyclically
    }
    const std::size_t r = runs.size();
    if (r < 3 && !closed) return 0;
    if (r < 2) return 0;

    std::uint32_t count = 0;
    const std::size_t first = closed ? 0 : 1;
    const std::size_t last = closed ? r : r - 1;
    for (std::size_t k = first; k < last; ++k) {
        const double prev = runs[(k + r - 1) % r].value;
        const double cur = runs[k].value;
        const double next = runs[(k + 1) % r].value;
        if ((cur > prev && cur > next) || (cur < prev && cur < next)) {
            ++count;
        }
    }
    return count;
}

double segment_area(const NormalizedBoundary& nb, const ApproxConvexSegment& segment) {
    const std::vector<Point> pts = segment_points(nb, segment);
    if (pts.size() < 3) return 0.0;
    return std::abs(signed_area(pts));
}

double base_width(const NormalizedBoundary& nb, const ApproxConvexSegment& segment) {
    if (segment.closed) return 0.0;
    const double d = distance(nb.point(segment.start_bidx), nb.point(segment.end_bidx));
    return d <= kClosedBaseEps ? 0.0 : d;
}

double segment_height(const NormalizedBoundary& nb, const ApproxConvexSegment& segment) {
    const std::vector<Point> pts = segment_points(nb, segment);
    double h = 0.0;
    if (effectively_closed(nb, segment)) {
        const Point& anchor = nb.point(segment.start_bidx);
        for (const Point& p : pts) {
            h = std::max(h, distance(p, anchor));
        }
        return h;
    }
    const Chord base{0, 0, pts.front(), pts.back()};
    for (const Point& p : pts) {
        h = std::max(h, point_chord_distance(p, base));
    }
    return h;
}

FeatureProfile profile(const NormalizedBoundary& nb, const ConvexDecomposition& dec,
                       std::string shape_id) {
    FeatureProfile prof;
    prof.shape_id = std::move(shape_id);
    prof.segments.reserve(dec.segments.size());
    for (const ApproxConvexSegment& seg : dec.segments) {
        SegmentFeatures f;
        f.n = static_cast<std::uint32_t>(segment_size(seg));
        f.x = extreme_point_count(nb, seg);
        f.a = segment_area(nb, seg);
        f.b = base_width(nb, seg);
        f.h = segment_height(nb, seg);
        prof.segments.push_back(f);
    }
    std::stable_sort(prof.segments.begin(), prof.segments.end(),
                     [](const SegmentFeatures& lhs, const SegmentFeatures& rhs) {
                         if (lhs.n != rhs.n) return lhs.n > rhs.n;
                         if (lhs.a != rhs.a) return lhs.a > rhs.a;
                         return lhs.b > rhs.b;
                     });
    return prof;
}

std::string format_profile_csv(const FeatureProfile& prof) {
    std::string out = "segment,n,x,a,b,h\n";
    for (std::size_t k = 0; k < prof.segments.size(); ++k) {
        const SegmentFeatures& f = prof.segments[k];
        out += std::to_string(k);
        out += ',';
        out += std::to_string(f.n);
        out += ',';
        out += std::to_string(f.x);
        out += ',';
        out += format_double(f.a);
        out += ',';
        out += format_double(f.b);
        out += ',';
        out += format_double(f.h);
        out += '\n';
    }
    return out;
}

}  // namespace convseg
