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

#include "convseg/svg.hpp"

#include <algorithm>
#include <vector>

#include "convseg/io.hpp"

namespace convseg {

const std::array<const char*, 12> kSegmentPalette = {
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
    "#46f0f0", "#f032e6", "#bcf60c", "#008080", "#9a6324", "#800000",
};

namespace {

constexpr double kViewSize = 800.0;
constexpr double kMargin = 40.0;

struct Mapper {
    double scale{1.0};
    double ox{0.0};
    double oy{0.0};

    explicit Mapper(std::span<const Point> pts) {
        double min_x = pts[0].x, max_x = pts[0].x;
        double min_y = pts[0].y, max_y = pts[0].y;
        for (const Point& p : pts) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
        const double span = std::max(max_x - min_x, max_y - min_y);
        scale = span > 0.0 ? (kViewSize - 2.0 * kMargin) / span : 1.0;
        ox = min_x;
        oy = min_y;
    }

    std::string map(const Point& p) const {
        return format_double((p.x - ox) * scale + kMargin) + " " +
               format_double((p.y - oy) * scale + kMargin);
    }
};

std::string path_element(const Mapper& mapper, const std::vector<Point>& pts,
                         const char* stroke, const char* width, bool close) {
    std::string d = "M " + mapper.map(pts[0]);
    for (std::size_t k = 1; k < pts.size(); ++k) {
        d += " L " + mapper.map(pts[k]);
    }
    if (close) d += " Z";
    return "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + stroke +
           "\" stroke-width=\"" + width + "\"/>\n";
}

std::string document(const std::string& body) {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n" +
           body + "</svg>\n";
}

std::string boundary_path(const Mapper& mapper, const NormalizedBoundary& nb) {
    std::vector<Point> pts(nb.points.begin(), nb.points.end());
    return path_element(mapper, pts, "#bbbbbb", "1", true);
}

}  // namespace

std::string svg_segments(const NormalizedBoundary& nb, const LandmarkSequence& landmarks) {
    const Mapper mapper(nb.points);
    std::string body = boundary_path(mapper, nb);
    const std::vector<std::size_t>& lm = landmarks.indices;
    for (std::size_t pos = 0; pos < lm.size(); ++pos) {
        const std::vector<Point> edge{nb.point(lm[pos]),
                                      nb.point(lm[(pos + 1) % lm.size()])};
        body += path_element(mapper, edge, kSegmentPalette[pos % kSegmentPalette.size()],
                             "2", false);
    }
    return document(body);
}

std::string svg_decomposition(const NormalizedBoundary& nb, const ConvexDecomposition& dec) {
    const Mapper mapper(nb.points);
    std::string body = boundary_path(mapper, nb);
    const std::size_t n = nb.size();
    for (std::size_t k = 0; k < dec.segments.size(); ++k) {
        const ApproxConvexSegment& seg = dec.segments[k];
        std::vector<Point> arc;
        const std::size_t steps = seg.closed ? n : seg.size;
        arc.reserve(steps + 1);
        for (std::size_t t = 0; t <= steps; ++t) {
            arc.push_back(nb.point(seg.start_bidx + t));
        }
        body += path_element(mapper, arc, kSegmentPalette[k % kSegmentPalette.size()],
                             "2", false);
    }
    return document(body);
}

}  // namespace convseg
