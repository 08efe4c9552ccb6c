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

#include <cstdint>
#include <vector>

#include "convseg/boundary.hpp"
#include "convseg/error.hpp"

namespace convseg {

/// Row-major binary foreground/background grid.
struct RasterMask {
    int width{0};
    int height{0};
    std::vector<std::uint8_t> bits;  // 1 = foreground

    static RasterMask make(int width, int height);

    bool at(int row, int col) const {
        if (row < 0 || col < 0 || row >= height || col >= width) return false;
        return bits[static_cast<std::size_t>(row) * static_cast<std::size_t>(width) +
                    static_cast<std::size_t>(col)] != 0;
    }

    void set(int row, int col, bool fg) {
        bits[static_cast<std::size_t>(row) * static_cast<std::size_t>(width) +
             static_cast<std::size_t>(col)] = fg ? 1 : 0;
    }
};

/// Moore-neighbor trace (Jacob's stopping criterion) of the outer contour of
/// the largest 8-connected foreground component. Points are pixel centers at
/// integer coordinates, x = column and y = row.
///
/// Throws EmptyMask when no pixel is foreground and DegenerateComponent when
/// the traced contour has fewer than 3 points.
ClosedBoundary trace_boundary(const RasterMask& mask);

}  // namespace convseg
