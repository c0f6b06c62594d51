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

/**
 * @file idx.hpp
 * Reader and writer for the IDX files that MNIST and FashionMNIST ship in.
 *
 * Images: magic 0x00000803, then big-endian u32 count, rows, cols, then
 * count*rows*cols unsigned bytes. Labels: magic 0x00000801, u32 count,
 * then count bytes.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace qnn {

inline constexpr std::uint32_t kIdxImagesMagic = 0x00000803;
inline constexpr std::uint32_t kIdxLabelsMagic = 0x00000801;

struct RawImages {
    std::size_t rows{0};
    std::size_t cols{0};
    std::vector<std::uint8_t> pixels; // count * rows * cols, row-major
    std::vector<std::uint8_t> labels;

    [[nodiscard]] std::size_t count() const noexcept { return labels.size(); }
    [[nodiscard]] std::span<const std::uint8_t> image(std::size_t i) const {
        return std::span<const std::uint8_t>(pixels).subspan(i * rows * cols, rows * cols);
    }
};

/// Throws DataError on bad magic, truncation or a count mismatch.
[[nodiscard]] RawImages load_idx_images(const std::filesystem::path &images_path,
                                        const std::filesystem::path &labels_path);

/// Appends `more` to `into`; image sizes must agree.
void append_images(RawImages &into, const RawImages &more);

void write_idx_images(const std::filesystem::path &path, std::size_t rows,
                      std::size_t cols, std::span<const std::uint8_t> pixels);
void write_idx_labels(const std::filesystem::path &path,
                      std::span<const std::uint8_t> labels);

} // namespace qnn
