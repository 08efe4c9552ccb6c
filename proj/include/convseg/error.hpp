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

#include <stdexcept>
#include <string>

namespace convseg {

enum class errc {
    empty_mask,
    degenerate_component,
    degenerate_boundary,
    zero_area,
    zero_perimeter,
    zero_length_chord,
    zero_length_arm,
    too_few_points,
    empty_dataset,
    too_few_shapes,
    single_class,
    empty_pool,
    io_error,
    parse_error,
};

const char* errc_name(errc code);

/// Failure classes used to pick CLI exit codes.
enum class error_kind { io, pipeline, dataset };

error_kind errc_kind(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& detail)
        : std::runtime_error(detail.empty()
                                 ? std::string(errc_name(code))
                                 : std::string(errc_name(code)) + ": " + detail),
          code_(code) {}

    explicit Error(errc code) : Error(code, "") {}

    errc code() const { return code_; }
    const char* code_name() const { return errc_name(code_); }
    error_kind kind() const { return errc_kind(code_); }

private:
    errc code_;
};

}  // namespace convseg
