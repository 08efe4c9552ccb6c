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
#include <optional>
#include <vector>

#include "convseg/boundary.hpp"

namespace convseg {

/// Line segment between two boundary points, i -> j in cyclic order.
struct Chord {
    std::size_t i{0};
    std::size_t j{0};
    Point pi;
    Point pj;
};

struct DeviationResult {
    double max_dev{0.0};
    std::optional<std::size_t> argmax;  // boundary index of the farthest point
};

/// Polygonal approximation: retained boundary indices in ascending order,
/// plus the error tolerance of the stage that produced it.
struct LandmarkSequence {
    std::vector<std::size_t> indices;
    double tolerance{0.0};
    double pass_threshold_final{0.0};
};

struct ApproxConfig {
    int lambda{5};             // object-scale multiplier for the phase-2 threshold
    double kappa{-0.9};        // cosine threshold for phase 3
    std::size_t max_passes{1000};
    std::size_t min_landmarks{3};
    // When true, a terminating SSE violation returns the violating pass's
    // landmarks instead of the last satisfying pass's.
    bool keep_violating_pass{false};
};

/// Perpendicular distance to the chord line when the foot of the
/// perpendicular lies on the closed chord, otherwise Euclidean distance to
/// the nearest endpoint. Throws ZeroLengthChord on coincident endpoints.
double point_chord_distance(const Point& p, const Chord& chord);

/// Maximum point-to-chord distance over boundary points strictly between i
/// and j in cyclic order. Zero with absent argmax when the chord spans no
/// interior points.
DeviationResult max_deviation(const NormalizedBoundary& nb, std::size_t i, std::size_t j);

/// One merging pass at threshold T: starting at index 0, points are merged
/// while the chord from the current start deviates from the curve by at most
/// T; the point before the first violation becomes the next landmark and
/// start. The scan wraps the cycle until a new start coincides with an
/// existing landmark; transient starts from before the periodic orbit are
/// dropped so every consecutive landmark chord satisfies the threshold.
LandmarkSequence scan_pass(const NormalizedBoundary& nb, double threshold,
                           std::size_t min_landmarks = 3);

/// Sum over every boundary point of the squared distance to the chord of the
/// landmark segment containing it. Landmark points contribute zero.
double sse(const NormalizedBoundary& nb, const LandmarkSequence& landmarks);

/// Threshold-escalation loop: passes at T = sigma, 2*sigma, ... continue
/// while sse <= T^2 * m / n (m landmarks, n boundary points). Stops on the
/// first violation, at max_passes, or once T exceeds half the unit
/// perimeter.
LandmarkSequence iterative_approximation(const NormalizedBoundary& nb,
                                         const ApproxConfig& cfg = {});

/// Repeatedly merges the weakest segment (minimum max-deviation) into a
/// neighbor by deleting one of its endpoint landmarks, keeping every merged
/// deviation within `tolerance`.
LandmarkSequence delete_phase1(const NormalizedBoundary& nb, LandmarkSequence landmarks,
                               double tolerance, std::size_t min_landmarks = 3);

/// Phase 1 with the relaxed threshold tolerance + lambda * sigma.
LandmarkSequence delete_phase2(const NormalizedBoundary& nb, LandmarkSequence landmarks,
                               double tolerance, double sigma, int lambda,
                               std::size_t min_landmarks = 3);

/// Cosine of the angle at q_m between the arms toward q_l and q_n, clamped
/// to [-1, 1]. Throws ZeroLengthArm when either arm has zero length.
double vertex_cosine(const Point& q_l, const Point& q_m, const Point& q_n);

/// Deletes the landmark with minimum vertex cosine while that cosine stays
/// at or below kappa (near-straight vertices first).
LandmarkSequence delete_phase3(const NormalizedBoundary& nb, LandmarkSequence landmarks,
                               double kappa, std::size_t min_landmarks = 3);

/// Full approximation pipeline: threshold escalation, then deletion phases
/// 1-3. The returned tolerance is the phase-2 threshold.
LandmarkSequence approximate(const NormalizedBoundary& nb, const ApproxConfig& cfg = {});

/// "# tolerance=<t>" header, then one "index,x,y" line per landmark.
std::string format_landmarks(const NormalizedBoundary& nb, const LandmarkSequence& landmarks);

}  // namespace convseg
