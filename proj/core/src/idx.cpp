// Copyright 2026 The QNN Classifiers Authors.
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

#include "qnn/idx.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include "qnn/errors.hpp"

namespace qnn {

namespace {

std::vector<std::uint8_t> read_all(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot open " + path.string());
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::uint32_t be32(const std::vector<std::uint8_t> &buf, std::size_t at,
                   const std::filesystem::path &path) {
    if (buf.size() < at + 4) {
        throw DataError(path.string() + ": truncated header");
    }
    return (std::uint32_t{buf[at]} << 24) | (std::uint32_t{buf[at + 1]} << 16) |
           (std::uint32_t{buf[at + 2]} << 8) | std::uint32_t{buf[at + 3]};
}

void put_be32(std::ostream &out, std::uint32_t v) {
    const char b[4] = {static_cast<char>(v >> 24), static_cast<char>(v >> 16),
                       static_cast<char>(v >> 8), static_cast<char>(v)};
    out.write(b, 4);
}

std::string hex(std::uint32_t v) {
    std::ostringstream s;
    s << "0x" << std::hex << v;
    return s.str();
}

void check_magic(std::uint32_t got, std::uint32_t want, const std::filesystem::path &path) {
    if (got != want) {
        throw DataError(path.string() + ": bad IDX magic " + hex(got) + ", expected " +
                        hex(want));
    }
}

void check_payload(std::size_t have, std::size_t header, std::size_t want,
                   const std::filesystem::path &path) {
    const std::size_t payload = have - header;
    if (payload < want) {
        throw DataError(path.string() + ": truncated payload, expected " +
                        std::to_string(want) + " bytes but found " + std::to_string(payload));
    }
}

} // namespace

RawImages load_idx_images(const std::filesystem::path &images_path,
                          const std::filesystem::path &labels_path) {
    const auto img = read_all(images_path);
    check_magic(be32(img, 0, images_path), kIdxImagesMagic, images_path);
    const std::size_t n_img = be32(img, 4, images_path);
    RawImages out;
    out.rows = be32(img, 8, images_path);
    out.cols = be32(img, 12, images_path);
    const std::size_t need = n_img * out.rows * out.cols;
    check_payload(img.size(), 16, need, images_path);
    out.pixels.assign(img.begin() + 16, img.begin() + 16 + static_cast<std::ptrdiff_t>(need));

    const auto lab = read_all(labels_path);
    check_magic(be32(lab, 0, labels_path), kIdxLabelsMagic, labels_path);
    const std::size_t n_lab = be32(lab, 4, labels_path);
    check_payload(lab.size(), 8, n_lab, labels_path);
    if (n_lab != n_img) {
        throw DataError("image file holds " + std::to_string(n_img) +
                        " images but label file holds " + std::to_string(n_lab) + " labels");
    }
    out.labels.assign(lab.begin() + 8, lab.begin() + 8 + static_cast<std::ptrdiff_t>(n_lab));
    return out;
}

void append_images(RawImages &into, const RawImages &more) {
    if (into.count() == 0) {
        into = more;
        return;
    }
    if (into.rows != more.rows || into.cols != more.cols) {
        throw DataError("cannot merge image sets of different sizes");
    }
    into.pixels.insert(into.pixels.end(), more.pixels.begin(), more.pixels.end());
    into.labels.insert(into.labels.end(), more.labels.begin(), more.labels.end());
}

void write_idx_images(const std::filesystem::path &path, std::size_t rows, std::size_t cols,
                      std::span<const std::uint8_t> pixels) {
    if (rows == 0 || cols == 0 || pixels.size() % (rows * cols) != 0) {
        throw DataError("pixel buffer is not a whole number of images");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot write " + path.string());
    }
    put_be32(out, kIdxImagesMagic);
    put_be32(out, static_cast<std::uint32_t>(pixels.size() / (rows * cols)));
    put_be32(out, static_cast<std::uint32_t>(rows));
    put_be32(out, static_cast<std::uint32_t>(cols));
    out.write(reinterpret_cast<const char *>(pixels.data()),
              static_cast<std::streamsize>(pixels.size()));
}

void write_idx_labels(const std::filesystem::path &path, std::span<const std::uint8_t> labels) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot write " + path.string());
    }
    put_be32(out, kIdxLabelsMagic);
    put_be32(out, static_cast<std::uint32_t>(labels.size()));
    out.write(reinterpret_cast<const char *>(labels.data()),
              static_cast<std::streamsize>(labels.size()));
}

} // namespace qnn
