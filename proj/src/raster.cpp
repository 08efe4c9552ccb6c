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

#include "convseg/raster.hpp"

#include <array>
#include <utility>

namespace convseg {

namespace {

struct Cell {
    int r;
    int c;
    bool operator==(const Cell& o) const { return r == o.r && c == o.c; }
};

// Moore neighborhood in clockwise screen order (y down), starting west.
constexpr std::array<Cell, 8> kRing = {{
    {0, -1},    // W
    {-1, -1},   // NW
    {-1, 0},    // N
    {-1, 1},    // NE
    {0, 1},     // E
    {1, 1},     // SE
    {1, 0},     // S
    {1, -1},    // SW
}};

int ring_index(Cell from, Cell to) {
    const Cell d{to.r - from.r, to.c - from.c};
    for (int k = 0; k < 8; ++k) {
        if (kRing[static_cast<std::size_t>(k)] == d) return k;
    }
    return 0;  // unreachable for adjacent cells
}

// Mask restricted to the largest 8-connected foreground component.
// Ties go to the component encountered first in row-major order.
RasterMask largest_component(const RasterMask& mask) {
    const int h = mask.height;
    const int w = mask.width;
    std::vector<int> label(static_cast<std::size_t>(h) * static_cast<std::size_t>(w), -1);
    std::vector<std::size_t> sizes;
    std::vector<Cell> stack;

    auto idx = [w](int r, int c) {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(w) +
               static_cast<std::size_t>(c);
    };

    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            if (!mask.at(r, c) || label[idx(r, c)] >= 0) continue;
            const int id = static_cast<int>(sizes.size());
            std::size_t count = 0;
            stack.push_back({r, c});
            label[idx(r, c)] = id;
            while (!stack.empty()) {
                const Cell cur = stack.back();
                stack.pop_back();
                ++count;
                for (const Cell& d : kRing) {
                    const int nr = cur.r + d.r;
                    const int nc = cur.c + d.c;
                    if (mask.at(nr, nc) && label[idx(nr, nc)] < 0) {
                        label[idx(nr, nc)] = id;
                        stack.push_back({nr, nc});
                    }
                }
            }
            sizes.push_back(count);
        }
    }
    if (sizes.empty()) {
        throw Error(errc::empty_mask, "mask has no foreground pixel");
    }

    int best = 0;
    for (int id = 1; id < static_cast<int>(sizes.size()); ++id) {
        if (sizes[static_cast<std::size_t>(id)] > sizes[static_cast<std::size_t>(best)]) {
            best = id;
        }
    }

    RasterMask out = RasterMask::make(w, h);
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            if (mask.at(r, c) && label[idx(r, c)] == best) out.set(r, c, true);
        }
    }
    return out;
}

}  // namespace

RasterMask RasterMask::make(int width, int height) {
    if (width < 1 || height < 1) {
        throw Error(errc::parse_error, "raster dimensions must be at least 1x1");
    }
    RasterMask m;
    m.width = width;
    m.height = height;
    m.bits.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
    return m;
}

ClosedBoundary trace_boundary(const RasterMask& mask) {
    const RasterMask comp = largest_component(mask);

    // Uppermost-leftmost component pixel; entered from the west.
    Cell start{-1, -1};
    for (int r = 0; r < comp.height && start.r < 0; ++r) {
        for (int c = 0; c < comp.width; ++c) {
            if (comp.at(r, c)) {
                start = {r, c};
                break;
            }
        }
    }

    // The walk state is (pixel, backtrack direction) and each step is a
    // deterministic function of it, so the first repeated state closes the
    // boundary cycle exactly once. Jacob's criterion is the common case
    // where the repeated state is the initial one; a pinch at the start
    // pixel can make the first few steps transient, and those are dropped.
    const std::size_t cells =
        static_cast<std::size_t>(comp.width) * static_cast<std::size_t>(comp.height);
    std::vector<int> seen_at(cells * 8, -1);
    auto state_key = [&](Cell cell, int back_idx) {
        return (static_cast<std::size_t>(cell.r) * static_cast<std::size_t>(comp.width) +
                static_cast<std::size_t>(cell.c)) *
                   8 +
               static_cast<std::size_t>(back_idx);
    };

    std::vector<Cell> walk;
    Cell cur = start;
    Cell back{start.r, start.c - 1};
    std::size_t cycle_from = 0;
    bool closed = false;

    const std::size_t guard = 8 * cells + 16;
    for (std::size_t step = 0; step < guard; ++step) {
        const int from = ring_index(cur, back);
        const std::size_t key = state_key(cur, from);
        if (seen_at[key] >= 0) {
            cycle_from = static_cast<std::size_t>(seen_at[key]);
            closed = true;
            break;
        }
        seen_at[key] = static_cast<int>(walk.size());
        walk.push_back(cur);

        Cell next{-1, -1};
        Cell next_back = back;
        for (int k = 1; k <= 8; ++k) {
            const Cell& d = kRing[static_cast<std::size_t>((from + k) % 8)];
            const Cell cand{cur.r + d.r, cur.c + d.c};
            if (comp.at(cand.r, cand.c)) {
                next = cand;
                const Cell& pd = kRing[static_cast<std::size_t>((from + k - 1) % 8)];
                next_back = {cur.r + pd.r, cur.c + pd.c};
                break;
            }
        }
        if (next.r < 0) {
            break;  // isolated pixel
        }
        cur = next;
        back = next_back;
    }

    std::vector<Cell> contour;
    if (closed) {
        contour.assign(walk.begin() + static_cast<std::ptrdiff_t>(cycle_from), walk.end());
    } else {
        contour = std::move(walk);
    }

    if (contour.size() < 3) {
        throw Error(errc::degenerate_component,
                    "largest component contour has fewer than 3 points");
    }
    std::vector<Point> pts;
    pts.reserve(contour.size());
    for (const Cell& cell : contour) {
        pts.push_back({static_cast<double>(cell.c), static_cast<double>(cell.r)});
    }
    return ClosedBoundary::from_points(pts, errc::degenerate_component);
}

}  // namespace convseg
