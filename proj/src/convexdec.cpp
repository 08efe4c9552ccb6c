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

#include "convseg/convexdec.hpp"

namespace convseg {

double turn_z(const Point& s_a, const Point& s_b, const Point& s_c) {
    return cross_z(s_a - s_b, s_b - s_c);
}

std::vector<std::size_t> concave_points(const NormalizedBoundary& nb,
                                        const LandmarkSequence& landmarks) {
    const std::vector<std::size_t>& lm = landmarks.indices;
    const std::size_t m = lm.size();
    std::vector<std::size_t> concave;
    for (std::size_t pos = 0; pos < m; ++pos) {
        const Point& a = nb.point(lm[(pos + m - 1) % m]);
        const Point& b = nb.point(lm[pos]);
        const Point& c = nb.point(lm[(pos + 1) % m]);
        if (turn_z(a, b, c) < 0.0) {
            concave.push_back(pos);
        }
    }
    return concave;
}

ConvexDecomposition decompose(const NormalizedBoundary& nb,
                              const LandmarkSequence& landmarks) {
    const std::size_t n = nb.size();
    const std::vector<std::size_t>& lm = landmarks.indices;

    ConvexDecomposition dec;
    dec.landmark_source = landmarks;

    const std::vector<std::size_t> concave = concave_points(nb, landmarks);
    if (concave.size() <= 1) {
        const std::size_t anchor = concave.empty() ? 0 : concave.front();
        ApproxConvexSegment seg;
        seg.start_lm = anchor;
        seg.end_lm = anchor;
        seg.start_bidx = lm[anchor];
        seg.end_bidx = lm[anchor];
        seg.size = n;
        seg.closed = true;
        dec.segments.push_back(seg);
        return dec;
    }

    for (std::size_t k = 0; k < concave.size(); ++k) {
        const std::size_t from = concave[k];
        const std::size_t to = concave[(k + 1) % concave.size()];
        ApproxConvexSegment seg;
        seg.start_lm = from;
        seg.end_lm = to;
        seg.start_bidx = lm[from];
        seg.end_bidx = lm[to];
        seg.size = (lm[to] + n - lm[from]) % n;
        seg.closed = false;
        dec.segments.push_back(seg);
    }
    return dec;
}

std::string format_decomposition(const ConvexDecomposition& dec) {
    std::string out;
    for (std::size_t k = 0; k < dec.segments.size(); ++k) {
        const ApproxConvexSegment& seg = dec.segments[k];
        out += "seg=" + std::to_string(k);
        out += " lm_start=" + std::to_string(seg.start_bidx);
        out += " lm_end=" + std::to_string(seg.end_bidx);
        out += " size=" + std::to_string(seg.size);
        out += '\n';
    }
    return out;
}

}  // namespace convseg
