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

#include "convseg/similarity.hpp"

#include <algorithm>

namespace convseg {

PaddedProfiles pad_profiles(const FeatureProfile& p_i, const FeatureProfile& p_j) {
    PaddedProfiles out;
    out.s = std::max(p_i.segments.size(), p_j.segments.size());
    out.lhs = p_i.segments;
    out.rhs = p_j.segments;
    out.lhs.resize(out.s);  // value-initialized all-zero segments
    out.rhs.resize(out.s);
    return out;
}

double similarity(const FeatureProfile& p_i, const FeatureProfile& p_j,
                  const FeatureWeights& weights) {
    const std::size_t s = std::max(p_i.segments.size(), p_j.segments.size());
    static constexpr SegmentFeatures kZero{};

    double sum = 0.0;
    for (std::size_t k = 0; k < s; ++k) {
        const SegmentFeatures& fi = k < p_i.segments.size() ? p_i.segments[k] : kZero;
        const SegmentFeatures& fj = k < p_j.segments.size() ? p_j.segments[k] : kZero;
        const double dn = static_cast<double>(fi.n) - static_cast<double>(fj.n);
        const double dx = static_cast<double>(fi.x) - static_cast<double>(fj.x);
        const double da = fi.a - fj.a;
        const double db = fi.b - fj.b;
        const double dh = fi.h - fj.h;
        sum += weights.n * dn * dn + weights.x * dx * dx + weights.a * da * da +
               weights.b * db * db + weights.h * dh * dh;
    }
    return sum;
}

}  // namespace convseg
