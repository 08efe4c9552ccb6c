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

#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "convseg/convexdec.hpp"
#include "convseg/pipeline.hpp"
#include "fixtures.hpp"

using namespace convseg;

namespace {

NormalizedBoundary wrap_points(std::vector<Point> pts) {
    NormalizedBoundary nb;
    nb.points = std::move(pts);
    nb.sigma = 1.0;
    return nb;
}

LandmarkSequence all_landmarks(const NormalizedBoundary& nb) {
    LandmarkSequence lm;
    for (std::size_t i = 0; i < nb.size(); ++i) lm.indices.push_back(i);
    return lm;
}

}  // namespace

TEST_CASE("turn_z sign convention") {
    CHECK(turn_z({0, 0}, {1, 0}, {1, 1}) == 1.0);
    CHECK(turn_z({0, 0}, {1, 1}, {2, 0}) == -2.0);
    CHECK(turn_z({0, 0}, {1, 0}, {2, 0}) == 0.0);
}

TEST_CASE("concave_points") {
    SUBCASE("convex polygon has none") {
        const NormalizedBoundary nb =
            wrap_points(fixtures::circle_outline({0, 0}, 1.0, 8));
        CHECK(concave_points(nb, all_landmarks(nb)).empty());
    }
    SUBCASE("5-point star marks the 5 inner vertices") {
        auto pts = fixtures::star_outline({0, 0}, 2.0, 0.8, 5, 0.0);
        // star_outline alternates outer (even) and inner (odd) vertices, ccw
        const NormalizedBoundary nb = wrap_points(pts);
        const auto concave = concave_points(nb, all_landmarks(nb));
        CHECK(concave == std::vector<std::size_t>{1, 3, 5, 7, 9});
    }
    SUBCASE("exactly collinear vertex is not concave") {
        const NormalizedBoundary nb =
            wrap_points({{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}});
        CHECK(concave_points(nb, all_landmarks(nb)).empty());
    }
}

TEST_CASE("decompose") {
    SUBCASE("square gives one closed segment over the whole cycle") {
        const NormalizedBoundary nb = wrap_points({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
        const ConvexDecomposition dec = decompose(nb, all_landmarks(nb));
        REQUIRE(dec.segments.size() == 1);
        CHECK(dec.segments[0].closed);
        CHECK(dec.segments[0].size == 4);
    }
    SUBCASE("5-point star splits into 5 spike segments") {
        const NormalizedBoundary nb =
            wrap_points(fixtures::star_outline({0, 0}, 2.0, 0.8, 5, 0.0));
        const ConvexDecomposition dec = decompose(nb, all_landmarks(nb));
        REQUIRE(dec.segments.size() == 5);
        std::size_t total = 0;
        for (const auto& seg : dec.segments) {
            CHECK_FALSE(seg.closed);
            CHECK(seg.size == 2);  // inner vertex plus one outer spike vertex
            CHECK(seg.start_bidx % 2 == 1);
            CHECK(seg.end_bidx % 2 == 1);
            total += seg.size;
        }
        CHECK(total == nb.size());
    }
    SUBCASE("single reflex vertex anchors one closed segment") {
        // pac-man: wedge removed from a hexagon, mouth vertex reflex
        std::vector<Point> pts = {{0, 0},  {2, -1}, {3, 0}, {3, 2},
                                  {0, 3},  {-3, 2}, {-3, 0}, {-2, -1}};
        // make the first vertex reflex by pulling it inward
        pts[0] = {0, 0.5};
        const NormalizedBoundary nb = wrap_points(pts);
        const auto concave = concave_points(nb, all_landmarks(nb));
        REQUIRE(concave.size() == 1);
        const ConvexDecomposition dec = decompose(nb, all_landmarks(nb));
        REQUIRE(dec.segments.size() == 1);
        CHECK(dec.segments[0].closed);
        CHECK(dec.segments[0].start_bidx == concave[0]);
        CHECK(dec.segments[0].size == nb.size());
    }
}

TEST_CASE("decompose invariants on random shapes") {
    std::mt19937 rng(60601);
    for (int t = 0; t < 25; ++t) {
        const NormalizedBoundary nb =
            prepare(fixtures::random_blob_boundary(rng, 15, 120));
        const LandmarkSequence lm = approximate(nb, {});
        const ConvexDecomposition dec = decompose(nb, lm);

        // interior landmarks of every segment are non-concave
        const std::vector<std::size_t>& idx = lm.indices;
        const std::size_t m = idx.size();
        for (const auto& seg : dec.segments) {
            for (std::size_t pos = (seg.start_lm + 1) % m; pos != seg.end_lm;
                 pos = (pos + 1) % m) {
                const double z = turn_z(nb.point(idx[(pos + m - 1) % m]), nb.point(idx[pos]),
                                        nb.point(idx[(pos + 1) % m]));
                CHECK(z >= 0.0);
            }
        }

        // half-open ranges partition the boundary exactly
        std::vector<int> covered(nb.size(), 0);
        for (const auto& seg : dec.segments) {
            for (std::size_t k = 0; k < seg.size; ++k) {
                covered[(seg.start_bidx + k) % nb.size()] += 1;
            }
        }
        CHECK(std::all_of(covered.begin(), covered.end(), [](int c) { return c == 1; }));
    }
}

TEST_CASE("decompose is stable under cyclic relabeling of the landmark list") {
    std::mt19937 rng(60602);
    const NormalizedBoundary nb = prepare(fixtures::random_blob_boundary(rng, 30, 120));
    LandmarkSequence lm = approximate(nb, {});
    const ConvexDecomposition base = decompose(nb, lm);

    LandmarkSequence rotated = lm;
    std::rotate(rotated.indices.begin(), rotated.indices.begin() + 1,
                rotated.indices.end());
    const ConvexDecomposition shifted = decompose(nb, rotated);

    // compare the segments as covered-index sets; a closed segment covers
    // the same set no matter which landmark anchors it
    auto covered_sets = [&](const ConvexDecomposition& d) {
        std::vector<std::vector<std::size_t>> sets;
        for (const auto& seg : d.segments) {
            std::vector<std::size_t> s;
            for (std::size_t k = 0; k < seg.size; ++k) {
                s.push_back((seg.start_bidx + k) % nb.size());
            }
            std::sort(s.begin(), s.end());
            sets.push_back(std::move(s));
        }
        std::sort(sets.begin(), sets.end());
        return sets;
    };
    CHECK(covered_sets(base) == covered_sets(shifted));
}

TEST_CASE("decompose maps pointwise through an exact rigid rotation") {
    std::mt19937 rng(60603);
    const auto pts = fixtures::random_blob(rng, 20, 60);
    std::vector<Point> turned;
    for (const Point& p : pts) turned.push_back({-p.y, p.x});  // exact 90 degrees

    const NormalizedBoundary nb_a = prepare(orient_ccw(ClosedBoundary::from_points(pts)));
    const NormalizedBoundary nb_b =
        prepare(orient_ccw(ClosedBoundary::from_points(turned)));

    const ConvexDecomposition dec_a = decompose(nb_a, approximate(nb_a, {}));
    const ConvexDecomposition dec_b = decompose(nb_b, approximate(nb_b, {}));

    REQUIRE(dec_a.segments.size() == dec_b.segments.size());
    std::vector<std::size_t> sizes_a, sizes_b;
    for (const auto& s : dec_a.segments) sizes_a.push_back(s.size);
    for (const auto& s : dec_b.segments) sizes_b.push_back(s.size);
    std::sort(sizes_a.begin(), sizes_a.end());
    std::sort(sizes_b.begin(), sizes_b.end());
    CHECK(sizes_a == sizes_b);
}

TEST_CASE("format_decomposition emits one line per segment") {
    const NormalizedBoundary nb = wrap_points(fixtures::star_outline({0, 0}, 2, 0.8, 5, 0));
    LandmarkSequence lm;
    for (std::size_t i = 0; i < nb.size(); ++i) lm.indices.push_back(i);
    const std::string dump = format_decomposition(decompose(nb, lm));
    CHECK(std::count(dump.begin(), dump.end(), '\n') == 5);
    CHECK(dump.rfind("seg=0 lm_start=1 lm_end=3 size=2\n", 0) == 0);
}
