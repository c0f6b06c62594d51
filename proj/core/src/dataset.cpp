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

#include "qnn/dataset.hpp"

#include <cmath>
#include <stdexcept>

namespace qnn {

LabeledDataset LabeledDataset::from_features(FeatureRows features,
                                             std::vector<OneHot> labels,
                                             DatasetMeta meta) {
    LabeledDataset d;
    d.samples_ = std::move(features);
    d.labels_ = std::move(labels);
    d.meta_ = std::move(meta);
    d.validate();
    return d;
}

LabeledDataset LabeledDataset::from_states(std::vector<StateVector> states,
                                           std::vector<OneHot> labels,
                                           DatasetMeta meta) {
    LabeledDataset d;
    d.samples_ = std::move(states);
    d.labels_ = std::move(labels);
    d.meta_ = std::move(meta);
    d.validate();
    return d;
}

void LabeledDataset::validate() const {
    const std::size_t count = std::visit([](const auto &v) { return v.size(); },
                                         samples_);
    if (count != labels_.size()) {
        throw std::invalid_argument("dataset has " + std::to_string(count) +
                                    " samples but " +
                                    std::to_string(labels_.size()) + " labels");
    }
    for (const auto &l : labels_) {
        const bool hot = (l[0] == 1.0 && l[1] == 0.0) || (l[0] == 0.0 && l[1] == 1.0);
        if (!hot) {
            throw std::invalid_argument("label is not one-hot");
        }
    }
    if (const auto *rows = std::get_if<FeatureRows>(&samples_)) {
        for (const auto &r : *rows) {
            if (r.size() != rows->front().size()) {
                throw std::invalid_argument("feature rows differ in length");
            }
        }
    } else {
        const auto &states = std::get<std::vector<StateVector>>(samples_);
        for (const auto &s : states) {
            if (s.num_qubits() != states.front().num_qubits()) {
                throw std::invalid_argument("states differ in qubit count");
            }
        }
    }
    if (!meta_.lambdas.empty() && meta_.lambdas.size() != count) {
        throw std::invalid_argument("per-sample lambda metadata is incomplete");
    }
    if (!meta_.spectral_gaps.empty() && meta_.spectral_gaps.size() != count) {
        throw std::invalid_argument("per-sample gap metadata is incomplete");
    }
}

std::size_t LabeledDataset::dimension() const noexcept {
    if (const auto *rows = std::get_if<FeatureRows>(&samples_)) {
        return rows->empty() ? 0 : rows->front().size();
    }
    const auto &states = std::get<std::vector<StateVector>>(samples_);
    return states.empty() ? 0 : states.front().dimension();
}

std::span<const double> LabeledDataset::features(std::size_t i) const {
    return std::get<FeatureRows>(samples_).at(i);
}

const StateVector &LabeledDataset::state(std::size_t i) const {
    return std::get<std::vector<StateVector>>(samples_).at(i);
}

const FeatureRows &LabeledDataset::feature_rows() const {
    return std::get<FeatureRows>(samples_);
}

const std::vector<StateVector> &LabeledDataset::states() const {
    return std::get<std::vector<StateVector>>(samples_);
}

LabeledDataset LabeledDataset::subset(std::span<const std::size_t> indices) const {
    std::vector<OneHot> labels;
    labels.reserve(indices.size());
    DatasetMeta meta = meta_;
    meta.lambdas.clear();
    meta.spectral_gaps.clear();
    for (auto i : indices) {
        labels.push_back(labels_.at(i));
        if (!meta_.lambdas.empty()) {
            meta.lambdas.push_back(meta_.lambdas.at(i));
        }
        if (!meta_.spectral_gaps.empty()) {
            meta.spectral_gaps.push_back(meta_.spectral_gaps.at(i));
        }
    }
    if (holds_states()) {
        std::vector<StateVector> states;
        states.reserve(indices.size());
        for (auto i : indices) {
            states.push_back(state(i));
        }
        return from_states(std::move(states), std::move(labels), std::move(meta));
    }
    FeatureRows rows;
    rows.reserve(indices.size());
    for (auto i : indices) {
        rows.push_back(feature_rows().at(i));
    }
    return from_features(std::move(rows), std::move(labels), std::move(meta));
}

} // namespace qnn
