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

#include "convseg/png_io.hpp"

#include <png.h>

#include <cstring>
#include <vector>

namespace convseg {

RasterMask load_png(const std::filesystem::path& path, bool invert) {
    png_image image;
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;

    if (!png_image_begin_read_from_file(&image, path.string().c_str())) {
        throw Error(errc::io_error,
                    "cannot read PNG " + path.string() + ": " + image.message);
    }
    image.format = PNG_FORMAT_GRAY;

    std::vector<png_byte> buffer(PNG_IMAGE_SIZE(image));
    if (!png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr)) {
        const std::string msg = image.message;
        png_image_free(&image);
        throw Error(errc::parse_error, "failed decoding PNG " + path.string() + ": " + msg);
    }

    RasterMask mask = RasterMask::make(static_cast<int>(image.width),
                                       static_cast<int>(image.height));
    for (std::size_t i = 0; i < buffer.size(); ++i) {
        const bool fg = buffer[i] >= 128;
        mask.bits[i] = (fg != invert) ? 1 : 0;
    }
    return mask;
}

}  // namespace convseg
