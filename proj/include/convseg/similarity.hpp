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
#include <utility>

#include "convseg/features.hpp"

namespace convseg {

/// Optional per-feature weights for experimentation; all 1 reproduces the
/// plain measure.
struct FeatureWeights {
    double n{1.0};
    double x{1.0};
    double a{1.0};
    double b{1.0};
    double h{1.0};
};

/// Copies of both profiles extended to s = max(s_i, s_j) with all-zero
/// segments; the originals are untouched.
struct PaddedProfiles {
    std::vector<SegmentFeatures> lhs;
    std::vector<SegmentFeatures> rhs;
    std::size_t s{0};
};

PaddedProfiles pad_profiles(const FeatureProfile& p_i, const FeatureProfile& p_j);

/// Sum of squared per-feature differences over rank-aligned segments.
/// This is a dissimilarity: 0 for identical profiles, larger means less
/// similar, and the nearest neighbor is the minimum value.
double similarity(const FeatureProfile& p_i, const FeatureProfile& p_j,
                  const FeatureWeights& weights = {});

}  // namespace convseg
