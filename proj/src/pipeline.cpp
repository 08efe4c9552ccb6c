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

#include "convseg/pipeline.hpp"

#include <algorithm>
#include <cctype>

#include "convseg/io.hpp"
#include "convseg/png_io.hpp"
#include "convseg/raster.hpp"

namespace convseg {

namespace {

std::string lower_extension(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext;
}

}  // namespace

bool is_raster_file(const std::filesystem::path& path) {
    const std::string ext = lower_extension(path);
    return ext == ".pbm" || ext == ".pgm" || ext == ".png";
}

ClosedBoundary load_boundary(const std::filesystem::path& path, bool invert) {
    if (is_raster_file(path)) {
        const std::string ext = lower_extension(path);
        const RasterMask mask =
            ext == ".png" ? load_png(path, invert) : load_pnm(path, invert);
        return orient_ccw(trace_boundary(mask));
    }
    return orient_ccw(ClosedBoundary::from_points(read_point_list(path)));
}

NormalizedBoundary prepare(const ClosedBoundary& boundary) {
    NormalizedBoundary nb = canonical_start(normalize(boundary));
    if (nb.start_index_original == 0) {
        return nb;
    }
    // Re-derive from the raw list rotated to the canonical start so every
    // accumulated sum runs in the same order no matter how the input was
    // cyclically shifted; the result is then bit-identical across shifts.
    const auto pts = boundary.points();
    std::vector<Point> rotated(pts.begin() + static_cast<std::ptrdiff_t>(nb.start_index_original),
                               pts.end());
    rotated.insert(rotated.end(), pts.begin(),
                   pts.begin() + static_cast<std::ptrdiff_t>(nb.start_index_original));
    NormalizedBoundary out = normalize(ClosedBoundary::from_points(rotated));
    out.start_index_original = nb.start_index_original;
    return out;
}

ShapeAnalysis analyze(const ClosedBoundary& boundary, const ApproxConfig& cfg,
                      std::string shape_id) {
    NormalizedBoundary nb = prepare(boundary);
    LandmarkSequence landmarks = approximate(nb, cfg);
    ConvexDecomposition dec = decompose(nb, landmarks);
    FeatureProfile prof = profile(nb, dec, std::move(shape_id));
    return ShapeAnalysis{std::move(nb), std::move(landmarks), std::move(dec),
                         std::move(prof)};
}

}  // namespace convseg
