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
 * @file spt_io.hpp
 * QNNSPT1 files: labelled spin-chain ground states.
 *
 * Layout is an ASCII header followed by raw amplitudes:
 *
 *     QNNSPT1
 *     num_sites <N>
 *     count <M>
 *     label_rule <text>
 *     source <text>
 *     sample <lambda> <gap> <class>      (M lines, %.17g numbers)
 *     end_header
 *
 * then M * 2^N complex amplitudes as little-endian float64 (re, im) pairs,
 * sample-major. File size is exactly header + M * 2^N * 16 bytes.
 */
#pragma once

#include <filesystem>
#include <optional>

#include "qnn/dataset.hpp"

namespace qnn {

inline constexpr const char *kSptMagic = "QNNSPT1";

/// The dataset must hold states and carry per-sample lambda and gap.
void save_spt(const std::filesystem::path &path, const LabeledDataset &data);

/// Throws DataError on a bad magic, truncation, or when `expected_sites`
/// is given and differs from the file.
[[nodiscard]] LabeledDataset load_spt(const std::filesystem::path &path,
                                      std::optional<int> expected_sites = std::nullopt);

} // namespace qnn
