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

#include "convseg/error.hpp"

namespace convseg {

const char* errc_name(errc code) {
    switch (code) {
        case errc::empty_mask: return "EmptyMask";
        case errc::degenerate_component: return "DegenerateComponent";
        case errc::degenerate_boundary: return "DegenerateBoundary";
        case errc::zero_area: return "ZeroArea";
        case errc::zero_perimeter: return "ZeroPerimeter";
        case errc::zero_length_chord: return "ZeroLengthChord";
        case errc::zero_length_arm: return "ZeroLengthArm";
        case errc::too_few_points: return "TooFewPoints";
        case errc::empty_dataset: return "EmptyDataset";
        case errc::too_few_shapes: return "TooFewShapes";
        case errc::single_class: return "SingleClass";
        case errc::empty_pool: return "EmptyPool";
        case errc::io_error: return "IoError";
        case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

error_kind errc_kind(errc code) {
    switch (code) {
        case errc::io_error:
        case errc::parse_error:
            return error_kind::io;
        case errc::empty_dataset:
        case errc::too_few_shapes:
        case errc::single_class:
            return error_kind::dataset;
        default:
            return error_kind::pipeline;
    }
}

}  // namespace convseg
