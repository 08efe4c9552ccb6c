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

#include "convseg/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace convseg {

namespace {

class PnmScanner {
public:
    explicit PnmScanner(const std::string& data) : data_(data) {}

    // Next whitespace-delimited token, skipping '#' comments.
    std::string next_token() {
        skip_space_and_comments();
        std::string tok;
        while (pos_ < data_.size() && !std::isspace(static_cast<unsigned char>(data_[pos_]))) {
            tok.push_back(data_[pos_++]);
        }
        if (tok.empty()) {
            throw Error(errc::parse_error, "unexpected end of PNM header");
        }
        return tok;
    }

    int next_int() {
        const std::string tok = next_token();
        int value = 0;
        const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
            throw Error(errc::parse_error, "bad integer '" + tok + "' in PNM header");
        }
        return value;
    }

    // Position just past the single whitespace byte that ends the header.
    std::size_t raster_offset() const { return pos_ + 1; }

    std::size_t pos() const { return pos_; }
    void advance(std::size_t by) { pos_ += by; }

private:
    void skip_space_and_comments() {
        while (pos_ < data_.size()) {
            const char ch = data_[pos_];
            if (std::isspace(static_cast<unsigned char>(ch))) {
                ++pos_;
            } else if (ch == '#') {
                while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    const std::string& data_;
    std::size_t pos_{0};
};

bool pgm_foreground(long value, long maxval) {
    // v/maxval >= 128/255, exactly v >= 128 when maxval is 255
    return value * 255 >= 128 * maxval;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(errc::io_error, "cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(errc::io_error, "cannot open " + path.string() + " for writing");
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) {
        throw Error(errc::io_error, "failed writing " + path.string());
    }
}

RasterMask load_pnm(const std::filesystem::path& path, bool invert) {
    const std::string data = read_text_file(path);
    if (data.size() < 2 || data[0] != 'P') {
        throw Error(errc::parse_error, path.string() + " is not a PNM file");
    }
    const char kind = data[1];
    PnmScanner scan(data);
    scan.next_token();  // magic

    const int width = scan.next_int();
    const int height = scan.next_int();
    RasterMask mask = RasterMask::make(width, height);
    const std::size_t count =
        static_cast<std::size_t>(width) * static_cast<std::size_t>(height);

    switch (kind) {
        case '1': {  // plain PBM, 1 = foreground
            for (std::size_t i = 0; i < count; ++i) {
                const int v = scan.next_int();
                mask.bits[i] = (v != 0) ? 1 : 0;
            }
            break;
        }
        case '2': {  // plain PGM
            const int maxval = scan.next_int();
            if (maxval < 1) throw Error(errc::parse_error, "bad PGM maxval");
            for (std::size_t i = 0; i < count; ++i) {
                mask.bits[i] = pgm_foreground(scan.next_int(), maxval) ? 1 : 0;
            }
            break;
        }
        case '4': {  // binary PBM, packed rows
            const std::size_t offset = scan.raster_offset();
            const std::size_t row_bytes = (static_cast<std::size_t>(width) + 7) / 8;
            if (data.size() < offset + row_bytes * static_cast<std::size_t>(height)) {
                throw Error(errc::parse_error, "truncated PBM raster");
            }
            for (int r = 0; r < height; ++r) {
                const std::size_t row_off = offset + static_cast<std::size_t>(r) * row_bytes;
                for (int c = 0; c < width; ++c) {
                    const auto byte = static_cast<unsigned char>(
                        data[row_off + static_cast<std::size_t>(c / 8)]);
                    const bool bit = (byte >> (7 - (c % 8))) & 1;
                    mask.set(r, c, bit);
                }
            }
            break;
        }
        case '5': {  // binary PGM
            const int maxval = scan.next_int();
            if (maxval < 1 || maxval > 65535) throw Error(errc::parse_error, "bad PGM maxval");
            const std::size_t offset = scan.raster_offset();
            const std::size_t bytes_per = maxval > 255 ? 2 : 1;
            if (data.size() < offset + count * bytes_per) {
                throw Error(errc::parse_error, "truncated PGM raster");
            }
            for (std::size_t i = 0; i < count; ++i) {
                long v;
                if (bytes_per == 1) {
                    v = static_cast<unsigned char>(data[offset + i]);
                } else {
                    v = (static_cast<long>(static_cast<unsigned char>(data[offset + 2 * i]))
                         << 8) |
                        static_cast<unsigned char>(data[offset + 2 * i + 1]);
                }
                mask.bits[i] = pgm_foreground(v, maxval) ? 1 : 0;
            }
            break;
        }
        default:
            throw Error(errc::parse_error,
                        std::string("unsupported PNM magic P") + kind);
    }

    if (invert) {
        for (auto& b : mask.bits) b ^= 1;
    }
    return mask;
}

void write_pgm(const std::filesystem::path& path, const RasterMask& mask) {
    std::string out = "P5\n" + std::to_string(mask.width) + " " +
                      std::to_string(mask.height) + "\n255\n";
    out.reserve(out.size() + mask.bits.size());
    for (const auto b : mask.bits) {
        out.push_back(b ? static_cast<char>(static_cast<unsigned char>(255)) : '\0');
    }
    write_text_file(path, out);
}

std::vector<Point> parse_point_list(const std::string& text) {
    std::vector<Point> pts;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string line = text.substr(pos, eol == std::string::npos ? eol : eol - pos);
        pos = eol == std::string::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();

        std::size_t b = line.find_first_not_of(" \t");
        if (b == std::string::npos || line[b] == '#') continue;
        std::size_t e = line.find_last_not_of(" \t");
        line = line.substr(b, e - b + 1);

        const std::size_t comma = line.find(',');
        if (comma == std::string::npos) {
            throw Error(errc::parse_error,
                        "line " + std::to_string(line_no) + ": expected 'x,y'");
        }
        auto parse_real = [&](std::string field) {
            const std::size_t fb = field.find_first_not_of(" \t");
            const std::size_t fe = field.find_last_not_of(" \t");
            if (fb == std::string::npos) {
                throw Error(errc::parse_error,
                            "line " + std::to_string(line_no) + ": empty coordinate");
            }
            field = field.substr(fb, fe - fb + 1);
            double v = 0.0;
            const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
            if (res.ec != std::errc() || res.ptr != field.data() + field.size() ||
                !std::isfinite(v)) {
                throw Error(errc::parse_error, "line " + std::to_string(line_no) +
                                                   ": bad number '" + field + "'");
            }
            return v;
        };
        pts.push_back({parse_real(line.substr(0, comma)), parse_real(line.substr(comma + 1))});
    }
    return pts;
}

std::vector<Point> read_point_list(const std::filesystem::path& path) {
    return parse_point_list(read_text_file(path));
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_point_list(std::span<const Point> pts) {
    std::string out;
    for (const Point& p : pts) {
        out += format_double(p.x);
        out += ',';
        out += format_double(p.y);
        out += '\n';
    }
    return out;
}

void write_point_list(const std::filesystem::path& path, std::span<const Point> pts) {
    write_text_file(path, format_point_list(pts));
}

}  // namespace convseg
