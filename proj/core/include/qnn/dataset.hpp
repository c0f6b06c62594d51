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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qnn/state_vector.hpp"

namespace qnn {

/// Binary one-hot label, (1,0) for class 0 and (0,1) for class 1.
using OneHot = std::array<double, 2>;

[[nodiscard]] constexpr OneHot one_hot(int cls) {
    return cls == 0 ? OneHot{1.0, 0.0} : OneHot{0.0, 1.0};
}

struct DatasetMeta {
    std::string source;
    /// Ordered record of the transformations applied to the raw data.
    std::vector<std::string> preprocessing;
    std::uint64_t seed{0};
    // Populated for spin-chain datasets only, one entry per sample.
    std::vector<double> lambdas;
    std::vector<double> spectral_gaps;
    std::string label_rule;
};

using FeatureRows = std::vector<std::vector<double>>;

/**
 * Samples (classical feature vectors or prepared quantum states) with
 * one-hot binary labels. Every row of `labels` sums to one and there is
 * exactly one label per sample.
 */
class LabeledDataset {
  public:
    LabeledDataset() = default;

    static LabeledDataset from_features(FeatureRows features,
                                        std::vector<OneHot> labels,
                                        DatasetMeta meta = {});
    static LabeledDataset from_states(std::vector<StateVector> states,
                                      std::vector<OneHot> labels,
                                      DatasetMeta meta = {});

    [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
    [[nodiscard]] bool empty() const noexcept { return labels_.empty(); }
    [[nodiscard]] bool holds_states() const noexcept {
        return std::holds_alternative<std::vector<StateVector>>(samples_);
    }

    /// Feature length for feature datasets, 2^n for state datasets.
    [[nodiscard]] std::size_t dimension() const noexcept;

    [[nodiscard]] std::span<const double> features(std::size_t i) const;
    [[nodiscard]] const StateVector &state(std::size_t i) const;
    [[nodiscard]] const FeatureRows &feature_rows() const;
    [[nodiscard]] const std::vector<StateVector> &states() const;

    [[nodiscard]] const OneHot &label(std::size_t i) const {
        return labels_.at(i);
    }
    /// 0 or 1.
    [[nodiscard]] int class_of(std::size_t i) const {
        return labels_.at(i)[1] > 0.5 ? 1 : 0;
    }
    [[nodiscard]] const std::vector<OneHot> &labels() const noexcept {
        return labels_;
    }

    [[nodiscard]] const DatasetMeta &meta() const noexcept { return meta_; }
    [[nodiscard]] DatasetMeta &meta() noexcept { return meta_; }

    /// Samples at `indices`, in that order; per-sample metadata follows.
    [[nodiscard]] LabeledDataset subset(std::span<const std::size_t> indices) const;

  private:
    void validate() const;

    std::variant<FeatureRows, std::vector<StateVector>> samples_;
    std::vector<OneHot> labels_;
    DatasetMeta meta_;
};

} // namespace qnn
