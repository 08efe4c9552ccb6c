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

#include "convseg/approx.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <set>
#include <utility>

#include "convseg/io.hpp"

namespace convseg {

namespace {

Chord chord_of(const NormalizedBoundary& nb, std::size_t i, std::size_t j) {
    const std::size_t n = nb.size();
    return Chord{i % n, j % n, nb.point(i), nb.point(j)};
}

// Deviation of the chord spanning `steps` boundary edges from `from`.
// Revisited pixels can give a chord with coincident endpoints; the
// deviation then degrades to plain distance from that point.
DeviationResult span_deviation(const NormalizedBoundary& nb, std::size_t from,
                               std::size_t steps) {
    const std::size_t n = nb.size();
    const Chord c = chord_of(nb, from, from + steps);
    const bool degenerate = c.pi == c.pj;
    DeviationResult res;
    for (std::size_t k = 1; k < steps; ++k) {
        const Point& p = nb.point(from + k);
        const double d = degenerate ? distance(p, c.pi) : point_chord_distance(p, c);
        if (!res.argmax.has_value() || d > res.max_dev) {
            res.max_dev = d;
            res.argmax = (from + k) % n;
        }
    }
    return res;
}

std::size_t cyclic_steps(std::size_t from, std::size_t to, std::size_t n) {
    return (to + n - from) % n;
}

// Sorted cyclic landmark cycle as (index, next_index) segment spans.
std::size_t segment_steps(const std::vector<std::size_t>& lm, std::size_t pos,
                          std::size_t n) {
    const std::size_t from = lm[pos];
    const std::size_t to = lm[(pos + 1) % lm.size()];
    const std::size_t steps = cyclic_steps(from, to, n);
    return steps == 0 ? n : steps;  // single-landmark degenerate span
}

// Splits segments whose chord deviation exceeds T at the farthest point
// until every consecutive pair complies. No-op for scans that completed
// their orbit normally.
void enforce_threshold(const NormalizedBoundary& nb, std::vector<std::size_t>& lm,
                       double threshold) {
    const std::size_t n = nb.size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t pos = 0; pos < lm.size(); ++pos) {
            const std::size_t steps = segment_steps(lm, pos, n);
            const DeviationResult dev = span_deviation(nb, lm[pos], steps);
            if (dev.max_dev > threshold && dev.argmax.has_value()) {
                lm.push_back(*dev.argmax);
                std::sort(lm.begin(), lm.end());
                lm.erase(std::unique(lm.begin(), lm.end()), lm.end());
                changed = true;
                break;
            }
        }
    }
}

void pad_to_min(const NormalizedBoundary& nb, std::vector<std::size_t>& lm,
                std::size_t min_landmarks) {
    const std::size_t n = nb.size();
    if (lm.empty()) lm.push_back(0);

    if (lm.size() == 1 && min_landmarks > 1) {
        // no chord exists yet; add the point farthest from the single landmark
        const Point& p0 = nb.point(lm[0]);
        std::size_t best = lm[0];
        double best_d = -1.0;
        for (std::size_t k = 1; k < n; ++k) {
            const std::size_t idx = (lm[0] + k) % n;
            const double d = distance(nb.point(idx), p0);
            if (d > best_d) {
                best_d = d;
                best = idx;
            }
        }
        if (best != lm[0]) lm.push_back(best);
        std::sort(lm.begin(), lm.end());
    }

    while (lm.size() < std::min(min_landmarks, n)) {
        // greedy re-split at the farthest-deviation index of the worst segment
        double worst = -1.0;
        std::optional<std::size_t> split;
        for (std::size_t pos = 0; pos < lm.size(); ++pos) {
            const DeviationResult dev = span_deviation(nb, lm[pos], segment_steps(lm, pos, n));
            if (dev.argmax.has_value() && dev.max_dev > worst) {
                worst = dev.max_dev;
                split = dev.argmax;
            }
        }
        if (!split.has_value()) {
            // all deviations are zero-interior; split the longest span midway
            std::size_t long_pos = 0;
            std::size_t long_steps = 0;
            for (std::size_t pos = 0; pos < lm.size(); ++pos) {
                const std::size_t steps = segment_steps(lm, pos, n);
                if (steps > long_steps) {
                    long_steps = steps;
                    long_pos = pos;
                }
            }
            if (long_steps < 2) break;
            split = (lm[long_pos] + long_steps / 2) % n;
        }
        lm.push_back(*split);
        std::sort(lm.begin(), lm.end());
        lm.erase(std::unique(lm.begin(), lm.end()), lm.end());
    }
}

struct SegmentPick {
    std::size_t pos{0};
    double dev{0.0};
};

// Weakest unfrozen segment: minimum max-deviation, ties to the lowest start
// index.
std::optional<SegmentPick> weakest_segment(const NormalizedBoundary& nb,
                                           const std::vector<std::size_t>& lm,
                                           const std::set<std::size_t>& frozen) {
    const std::size_t n = nb.size();
    std::optional<SegmentPick> best;
    for (std::size_t pos = 0; pos < lm.size(); ++pos) {
        if (frozen.count(lm[pos])) continue;
        const double dev = span_deviation(nb, lm[pos], segment_steps(lm, pos, n)).max_dev;
        if (!best.has_value() || dev < best->dev) {
            best = SegmentPick{pos, dev};
        }
    }
    return best;
}

LandmarkSequence merge_weakest(const NormalizedBoundary& nb, LandmarkSequence landmarks,
                               double threshold, std::size_t min_landmarks) {
    const std::size_t n = nb.size();
    std::vector<std::size_t>& lm = landmarks.indices;
    std::set<std::size_t> frozen;  // keyed by segment start index

    while (lm.size() > min_landmarks) {
        const auto pick = weakest_segment(nb, lm, frozen);
        if (!pick.has_value()) break;

        const std::size_t m = lm.size();
        const std::size_t pos = pick->pos;
        const std::size_t prev = (pos + m - 1) % m;
        const std::size_t next = (pos + 1) % m;

        // deleting the segment start merges with the previous segment,
        // deleting its end merges with the next one
        const std::size_t steps_del_start =
            segment_steps(lm, prev, n) + segment_steps(lm, pos, n);
        const std::size_t steps_del_end =
            segment_steps(lm, pos, n) + segment_steps(lm, next, n);
        const double dev_del_start =
            steps_del_start >= n
                ? std::numeric_limits<double>::infinity()
                : span_deviation(nb, lm[prev], steps_del_start).max_dev;
        const double dev_del_end =
            steps_del_end >= n ? std::numeric_limits<double>::infinity()
                               : span_deviation(nb, lm[pos], steps_del_end).max_dev;

        const bool drop_start = dev_del_start <= dev_del_end;
        const double merged = drop_start ? dev_del_start : dev_del_end;
        if (merged <= threshold) {
            lm.erase(lm.begin() + static_cast<std::ptrdiff_t>(drop_start ? pos : next));
            frozen.clear();
        } else {
            frozen.insert(lm[pos]);
        }
    }
    return landmarks;
}

}  // namespace

double point_chord_distance(const Point& p, const Chord& chord) {
    const Point d = chord.pj - chord.pi;
    const double len2 = squared_norm(d);
    if (len2 == 0.0) {
        throw Error(errc::zero_length_chord, "chord endpoints coincide");
    }
    const Point v = p - chord.pi;
    const double t = dot(v, d) / len2;
    if (t < 0.0) return distance(p, chord.pi);
    if (t > 1.0) return distance(p, chord.pj);
    return std::abs(cross_z(d, v)) / std::sqrt(len2);
}

DeviationResult max_deviation(const NormalizedBoundary& nb, std::size_t i, std::size_t j) {
    const std::size_t n = nb.size();
    i %= n;
    j %= n;
    if (i == j) {
        // full-cycle span measured against the degenerate chord at i
        throw Error(errc::zero_length_chord, "chord endpoints coincide");
    }
    return span_deviation(nb, i, cyclic_steps(i, j, n));
}

LandmarkSequence scan_pass(const NormalizedBoundary& nb, double threshold,
                           std::size_t min_landmarks) {
    assert(threshold > 0.0);
    const std::size_t n = nb.size();

    // Starts are tracked with absolute (unwrapped) positions; each violation
    // makes the previous visiting point the next start.
    std::vector<std::size_t> starts{0};
    std::vector<std::ptrdiff_t> position_of(n, -1);
    position_of[0] = 0;

    std::size_t trim_from = 0;
    std::size_t i_abs = 0;
    std::size_t j_abs = 1;
    const std::size_t advance_cap = 8 * n + 64;

    while (j_abs < advance_cap) {
        const std::size_t next = j_abs + 1;
        if (next - i_abs >= n) {
            break;  // the remaining curve merged into a single chord
        }
        const DeviationResult dev = span_deviation(nb, i_abs % n, next - i_abs);
        if (dev.max_dev > threshold) {
            const std::size_t s = j_abs % n;
            if (position_of[s] >= 0) {
                trim_from = static_cast<std::size_t>(position_of[s]);
                break;  // orbit closed on an existing landmark
            }
            position_of[s] = static_cast<std::ptrdiff_t>(starts.size());
            starts.push_back(s);
            i_abs = j_abs;
            j_abs = i_abs + 1;
        } else {
            j_abs = next;
        }
    }

    std::vector<std::size_t> lm(starts.begin() + static_cast<std::ptrdiff_t>(trim_from),
                                starts.end());
    std::sort(lm.begin(), lm.end());
    lm.erase(std::unique(lm.begin(), lm.end()), lm.end());

    pad_to_min(nb, lm, min_landmarks);
    // keeps the per-segment threshold invariant when the scan was cut short
    // or padding split a segment unevenly
    if (lm.size() >= 2) enforce_threshold(nb, lm, threshold);

    LandmarkSequence seq;
    seq.indices = std::move(lm);
    seq.tolerance = threshold;
    seq.pass_threshold_final = threshold;
    return seq;
}

double sse(const NormalizedBoundary& nb, const LandmarkSequence& landmarks) {
    const std::size_t n = nb.size();
    const std::vector<std::size_t>& lm = landmarks.indices;
    double sum = 0.0;
    for (std::size_t pos = 0; pos < lm.size(); ++pos) {
        const std::size_t steps = segment_steps(lm, pos, n);
        if (steps <= 1) continue;
        const Chord c = chord_of(nb, lm[pos], lm[pos] + steps);
        const bool degenerate = c.pi == c.pj;  // landmarks on a revisited pixel
        for (std::size_t k = 1; k < steps; ++k) {
            const Point& p = nb.point(lm[pos] + k);
            const double d = degenerate ? distance(p, c.pi) : point_chord_distance(p, c);
            sum += d * d;
        }
    }
    return sum;
}

LandmarkSequence iterative_approximation(const NormalizedBoundary& nb,
                                         const ApproxConfig& cfg) {
    const double sigma = nb.sigma;
    const double boundary_points = static_cast<double>(nb.size());

    auto bound_of = [&](double threshold, std::size_t landmark_count) {
        // threshold^2 over the compression ratio n/m
        return threshold * threshold *
               (static_cast<double>(landmark_count) / boundary_points);
    };

    LandmarkSequence last = scan_pass(nb, sigma, cfg.min_landmarks);
    if (sse(nb, last) > bound_of(sigma, last.indices.size())) {
        return last;  // first pass already violates; keep it at tolerance sigma
    }

    for (std::size_t pass = 2;; ++pass) {
        const double threshold = static_cast<double>(pass) * sigma;
        if (pass > cfg.max_passes || threshold > 0.5) {
            return last;  // halting guard; the SSE bound never terminated
        }
        LandmarkSequence cur = scan_pass(nb, threshold, cfg.min_landmarks);
        if (sse(nb, cur) > bound_of(threshold, cur.indices.size())) {
            if (cfg.keep_violating_pass) {
                return cur;
            }
            last.tolerance = threshold;
            last.pass_threshold_final = threshold;
            return last;
        }
        last = std::move(cur);
    }
}

LandmarkSequence delete_phase1(const NormalizedBoundary& nb, LandmarkSequence landmarks,
                               double tolerance, std::size_t min_landmarks) {
    LandmarkSequence out = merge_weakest(nb, std::move(landmarks), tolerance, min_landmarks);
    out.tolerance = tolerance;
    return out;
}

LandmarkSequence delete_phase2(const NormalizedBoundary& nb, LandmarkSequence landmarks,
                               double tolerance, double sigma, int lambda,
                               std::size_t min_landmarks) {
    const double relaxed = tolerance + static_cast<double>(lambda) * sigma;
    LandmarkSequence out = merge_weakest(nb, std::move(landmarks), relaxed, min_landmarks);
    out.tolerance = relaxed;
    return out;
}

double vertex_cosine(const Point& q_l, const Point& q_m, const Point& q_n) {
    const Point a = q_l - q_m;
    const Point b = q_n - q_m;
    const double la = norm(a);
    const double lb = norm(b);
    if (la == 0.0 || lb == 0.0) {
        throw Error(errc::zero_length_arm, "vertex arm has zero length");
    }
    return std::clamp(dot(a, b) / (la * lb), -1.0, 1.0);
}

LandmarkSequence delete_phase3(const NormalizedBoundary& nb, LandmarkSequence landmarks,
                               double kappa, std::size_t min_landmarks) {
    std::vector<std::size_t>& lm = landmarks.indices;
    while (lm.size() > min_landmarks) {
        const std::size_t m = lm.size();
        std::optional<std::size_t> best_pos;
        double best_cos = std::numeric_limits<double>::infinity();
        for (std::size_t pos = 0; pos < m; ++pos) {
            const Point& l = nb.point(lm[(pos + m - 1) % m]);
            const Point& mid = nb.point(lm[pos]);
            const Point& r = nb.point(lm[(pos + 1) % m]);
            if (l == mid || r == mid) continue;  // duplicate landmark positions
            const double c = vertex_cosine(l, mid, r);
            if (c < best_cos) {
                best_cos = c;
                best_pos = pos;
            }
        }
        if (!best_pos.has_value() || best_cos > kappa) break;
        lm.erase(lm.begin() + static_cast<std::ptrdiff_t>(*best_pos));
    }
    return landmarks;
}

LandmarkSequence approximate(const NormalizedBoundary& nb, const ApproxConfig& cfg) {
    LandmarkSequence lm = iterative_approximation(nb, cfg);
    const double tolerance = lm.tolerance;
    lm = delete_phase1(nb, std::move(lm), tolerance, cfg.min_landmarks);
    lm = delete_phase2(nb, std::move(lm), tolerance, nb.sigma, cfg.lambda, cfg.min_landmarks);
    lm = delete_phase3(nb, std::move(lm), cfg.kappa, cfg.min_landmarks);
    return lm;
}

std::string format_landmarks(const NormalizedBoundary& nb, const LandmarkSequence& landmarks) {
    std::string out = "# tolerance=" + format_double(landmarks.tolerance) + "\n";
    for (const std::size_t idx : landmarks.indices) {
        const Point& p = nb.point(idx);
        out += std::to_string(idx);
        out += ',';
        out += format_double(p.x);
        out += ',';
        out += format_double(p.y);
        out += '\n';
    }
    return out;
}

}  // namespace convseg
