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

#include <filesystem>

#include "convseg/approx.hpp"
#include "convseg/boundary.hpp"
#include "convseg/convexdec.hpp"
#include "convseg/features.hpp"

namespace convseg {

struct ShapeAnalysis {
    NormalizedBoundary nb;
    LandmarkSequence landmarks;
    ConvexDecomposition decomposition;
    FeatureProfile profile;
};

/// Extension dispatch: .pbm/.pgm/.png are traced rasters, anything else is
/// read as a point list. The returned boundary is oriented counterclockwise.
ClosedBoundary load_boundary(const std::filesystem::path& path, bool invert = false);

bool is_raster_file(const std::filesystem::path& path);

/// normalize + canonical_start.
NormalizedBoundary prepare(const ClosedBoundary& boundary);

/// Full per-shape pipeline from an oriented boundary.
ShapeAnalysis analyze(const ClosedBoundary& boundary, const ApproxConfig& cfg = {},
                      std::string shape_id = {});

}  // namespace convseg
