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
 * @file trainer.hpp
 * Seeded minibatch Adam training of a Hypothesis.
 *
 * Each iteration draws batch_size distinct training samples, averages the
 * per-sample loss gradients in batch order, and takes one Adam step. The
 * whole run is bit-reproducible for a fixed seed on one machine.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qnn/dataset.hpp"
#include "qnn/objective.hpp"

namespace qnn {

struct AdamConfig {
    double beta1{0.9};
    double beta2{0.999};
    double epsilon{1e-8};
};

struct TrainConfig {
    double learning_rate{0.005};
    std::size_t batch_size{64};
    std::size_t iterations{200};
    std::uint64_t seed{0};
    Loss loss{};
    AdamConfig adam{};
    /// Snapshot period; 0 records only iteration 0 and the final one.
    std::size_t eval_every{10};
    GradientMethod gradient{GradientMethod::Adjoint};
};

struct AdamState {
    std::vector<double> m;
    std::vector<double> v;
    std::uint64_t step{0};
};

struct AdamResult {
    std::vector<double> theta;
    AdamState state;
};

/// Adam with bias correction. An empty state is zero-initialised.
[[nodiscard]] AdamResult adam_step(std::span<const double> theta,
                                   std::span<const double> grad, AdamState state,
                                   double learning_rate, const AdamConfig &cfg = {});

/// Independent uniform draws on [0, 2 pi).
[[nodiscard]] std::vector<double> init_params(std::size_t num_params, std::uint64_t seed);

struct Evaluation {
    double accuracy{0.0};
    double mean_loss{0.0};
};

/// argmax(g0, g1) with ties going to class 0.
[[nodiscard]] constexpr int predict(const Probabilities &g) { return g[1] > g[0] ? 1 : 0; }

[[nodiscard]] Evaluation evaluate(const Hypothesis &h, std::span<const double> theta,
                                  const PreparedSet &data, const Loss &kind);
[[nodiscard]] Evaluation evaluate(const Hypothesis &h, std::span<const double> theta,
                                  const LabeledDataset &data, const Loss &kind);

struct EvalPoint {
    std::size_t iteration{0};
    double train_acc{0.0};
    double train_loss{0.0};
    double test_acc{0.0};
    double test_loss{0.0};
};

struct RunRecord {
    TrainConfig config;
    std::vector<EvalPoint> curve;
    std::vector<double> initial_params;
    std::vector<double> final_params;
    double wall_seconds{0.0};
    bool failed{false};
    std::string failure;
    /// Circuit evaluations spent on gradients (snapshots excluded).
    std::uint64_t gradient_evaluations{0};

    [[nodiscard]] const EvalPoint &final_point() const { return curve.back(); }
};

/// Throws std::invalid_argument on bad configuration or dimension mismatch.
/// Divergence (non-finite loss, |theta_k| > 1e6) ends the run with
/// `failed` set instead of throwing.
[[nodiscard]] RunRecord train(const Hypothesis &h, const LabeledDataset &train_set,
                              const LabeledDataset &test_set, const TrainConfig &cfg);

/// Batch-averaged gradient over `batch` (indices into `data`), summed in order.
[[nodiscard]] LossGradient batch_gradient(const Hypothesis &h, const PreparedSet &data,
                                          std::span<const std::size_t> batch,
                                          std::span<const double> theta, const Loss &kind,
                                          GradientMethod method);

} // namespace qnn
