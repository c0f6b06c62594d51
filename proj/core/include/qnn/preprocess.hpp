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

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qnn/dataset.hpp"
#include "qnn/idx.hpp"

namespace qnn {

/**
 * Area-weighted resize: each output pixel is the mean of the input region
 * it covers, with partially covered input pixels weighted by the covered
 * fraction. Values stay in input units.
 */
[[nodiscard]] std::vector<double> resize_area(std::span<const std::uint8_t> image,
                                              std::size_t rows, std::size_t cols,
                                              std::size_t out_rows, std::size_t out_cols);

/// Scales to unit L2 norm; returns false (leaving x alone) for a zero vector.
bool l2_normalize(std::span<double> x);

/// Per-feature z-scoring across samples; constant features become 0.
void standardize(FeatureRows &rows);

struct ImageTask {
    int class_a{1};      // -> (1,0)
    int class_b{9};      // -> (0,1)
    std::size_t num_train{500};
    std::size_t num_test{100};
    std::uint64_t seed{0};
    std::size_t side{16}; // output is side x side, flattened row-major
};

struct TrainTestSplit {
    LabeledDataset train;
    LabeledDataset test;
};

/**
 * Two-class image task: filter to the classes, resize to side x side,
 * scale to [0,1], L2-normalize, then draw disjoint train and test sets
 * with each class getting half of every split (class A takes the odd one).
 * Order within each split is a seeded shuffle.
 */
[[nodiscard]] TrainTestSplit preprocess_images(const RawImages &raw, const ImageTask &task);

/// The same class-balanced, seeded, disjoint split applied to an existing
/// labelled dataset. Throws DataError when a class is too small.
[[nodiscard]] TrainTestSplit stratified_split(const LabeledDataset &data, std::size_t num_train,
                                              std::size_t num_test, std::uint64_t seed);

} // namespace qnn
