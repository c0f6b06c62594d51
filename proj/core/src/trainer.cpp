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

#include "qnn/trainer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

namespace qnn {

namespace {

constexpr double kThetaLimit = 1e6;

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t purpose) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(purpose)};
    return std::mt19937_64(seq);
}

} // namespace

AdamResult adam_step(std::span<const double> theta, std::span<const double> grad,
                     AdamState state, double learning_rate, const AdamConfig &cfg) {
    if (theta.size() != grad.size()) {
        throw std::invalid_argument("parameter and gradient lengths differ");
    }
    if (state.m.empty() && state.v.empty()) {
        state.m.assign(theta.size(), 0.0);
        state.v.assign(theta.size(), 0.0);
    }
    if (state.m.size() != theta.size() || state.v.size() != theta.size()) {
        throw std::invalid_argument("Adam moment vectors do not match parameters");
    }
    ++state.step;
    const double t = static_cast<double>(state.step);
    const double c1 = 1.0 - std::pow(cfg.beta1, t);
    const double c2 = 1.0 - std::pow(cfg.beta2, t);
    AdamResult out;
    out.theta.assign(theta.begin(), theta.end());
    for (std::size_t k = 0; k < theta.size(); ++k) {
        state.m[k] = cfg.beta1 * state.m[k] + (1.0 - cfg.beta1) * grad[k];
        state.v[k] = cfg.beta2 * state.v[k] + (1.0 - cfg.beta2) * grad[k] * grad[k];
        const double mhat = state.m[k] / c1;
        const double vhat = state.v[k] / c2;
        out.theta[k] -= learning_rate * mhat / (std::sqrt(vhat) + cfg.epsilon);
    }
    out.state = std::move(state);
    return out;
}

std::vector<double> init_params(std::size_t num_params, std::uint64_t seed) {
    auto rng = stream(seed, 1);
    std::uniform_real_distribution<double> dist(0.0, 2.0 * std::numbers::pi);
    std::vector<double> theta(num_params);
    for (auto &t : theta) {
        t = dist(rng);
    }
    return theta;
}

Evaluation evaluate(const Hypothesis &h, std::span<const double> theta,
                    const PreparedSet &data, const Loss &kind) {
    if (data.inputs.empty()) {
        return {};
    }
    std::size_t correct = 0;
    double total = 0.0;
    for (std::size_t i = 0; i < data.inputs.size(); ++i) {
        const Probabilities g = hypothesis(h, data.inputs[i], theta);
        const int truth = data.labels[i][1] > 0.5 ? 1 : 0;
        correct += predict(g) == truth ? 1 : 0;
        total += loss(g, data.labels[i], kind);
    }
    const auto m = static_cast<double>(data.inputs.size());
    return {static_cast<double>(correct) / m, total / m};
}

Evaluation evaluate(const Hypothesis &h, std::span<const double> theta,
                    const LabeledDataset &data, const Loss &kind) {
    return evaluate(h, theta, prepare_dataset(h, data), kind);
}

LossGradient batch_gradient(const Hypothesis &h, const PreparedSet &data,
                            std::span<const std::size_t> batch,
                            std::span<const double> theta, const Loss &kind,
                            GradientMethod method) {
    LossGradient acc;
    acc.gradient.assign(theta.size(), 0.0);
    for (auto i : batch) {
        const LossGradient lg =
            loss_and_gradient(h, data.inputs.at(i), data.labels.at(i), theta, kind, method);
        for (std::size_t k = 0; k < theta.size(); ++k) {
            acc.gradient[k] += lg.gradient[k];
        }
        acc.loss += lg.loss;
        acc.evaluations += lg.evaluations;
    }
    if (!batch.empty()) {
        const auto nb = static_cast<double>(batch.size());
        for (auto &g : acc.gradient) {
            g /= nb;
        }
        acc.loss /= nb;
    }
    return acc;
}

RunRecord train(const Hypothesis &h, const LabeledDataset &train_set,
                const LabeledDataset &test_set, const TrainConfig &cfg) {
    if (train_set.empty()) {
        throw std::invalid_argument("training set is empty");
    }
    if (cfg.iterations < 1) {
        throw std::invalid_argument("iterations must be at least 1");
    }
    if (cfg.batch_size < 1 || cfg.batch_size > train_set.size()) {
        throw std::invalid_argument("batch size " + std::to_string(cfg.batch_size) +
                                    " must be in [1, " + std::to_string(train_set.size()) +
                                    "]");
    }
    const auto start = std::chrono::steady_clock::now();

    const PreparedSet train_data = prepare_dataset(h, train_set);
    const PreparedSet test_data = prepare_dataset(h, test_set);

    RunRecord rec;
    rec.config = cfg;
    rec.initial_params = init_params(h.num_params(), cfg.seed);
    std::vector<double> theta = rec.initial_params;
    AdamState adam;

    auto snapshot = [&](std::size_t iter) {
        const Evaluation tr = evaluate(h, theta, train_data, cfg.loss);
        const Evaluation te = evaluate(h, theta, test_data, cfg.loss);
        rec.curve.push_back({iter, tr.accuracy, tr.mean_loss, te.accuracy, te.mean_loss});
    };

    auto batch_rng = stream(cfg.seed, 2);
    std::vector<std::size_t> all(train_data.inputs.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::vector<std::size_t> batch(cfg.batch_size);

    snapshot(0);
    for (std::size_t it = 1; it <= cfg.iterations; ++it) {
        std::sample(all.begin(), all.end(), batch.begin(), cfg.batch_size, batch_rng);
        const LossGradient g =
            batch_gradient(h, train_data, batch, theta, cfg.loss, cfg.gradient);
        rec.gradient_evaluations += g.evaluations;
        if (!std::isfinite(g.loss)) {
            rec.failed = true;
            rec.failure = "non-finite batch loss at iteration " + std::to_string(it);
            break;
        }
        AdamResult step = adam_step(theta, g.gradient, std::move(adam), cfg.learning_rate,
                                    cfg.adam);
        theta = std::move(step.theta);
        adam = std::move(step.state);
        const bool blown = std::any_of(theta.begin(), theta.end(), [](double t) {
            return !std::isfinite(t) || std::abs(t) > kThetaLimit;
        });
        if (blown) {
            rec.failed = true;
            rec.failure = "parameter magnitude exceeded 1e6 at iteration " + std::to_string(it);
            break;
        }
        const bool periodic = cfg.eval_every != 0 && it % cfg.eval_every == 0;
        if (periodic || it == cfg.iterations) {
            snapshot(it);
        }
    }
    rec.final_params = theta;
    rec.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

} // namespace qnn
