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
 * @file objective.hpp
 * Binary classifier outputs, losses and their parameter gradients.
 *
 * The classifier output is g = (P(0), P(1)) on the measured qubit. Two
 * exact gradient routes are provided:
 *
 *  - ParameterShift: dg/dtheta_k = (g(theta_k + pi/2) - g(theta_k - pi/2)) / 2,
 *    two circuit evaluations per slot. This is the reference route.
 *  - Adjoint: one forward pass plus one reverse sweep that un-applies
 *    each gate to the state and to O|psi>, reading off
 *    dg0/dtheta_k = Im <lambda_k| P_k |psi_k>. Same values, cost
 *    independent of the parameter count; used for training.
 *
 * Both routes are checked against central finite differences in tests.
 */
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "qnn/ansatz.hpp"
#include "qnn/dataset.hpp"
#include "qnn/encoding.hpp"

namespace qnn {

using Probabilities = std::array<double, 2>;

enum class LossKind : std::uint8_t { MSE, CrossEntropy };

struct Loss {
    LossKind kind{LossKind::CrossEntropy};
    /// Probability floor applied before the logarithm in cross entropy.
    double epsilon_clip{1e-10};
};

enum class GradientMethod : std::uint8_t { ParameterShift, Adjoint };

using Encoding = std::variant<AmplitudeEncoding, BlockEncoding>;

/// Circuit, data encoding and the (0-based) measured qubit.
class Hypothesis {
  public:
    Hypothesis(CircuitTemplate circuit, Encoding encoding, int measured_qubit);

    [[nodiscard]] const CircuitTemplate &circuit() const noexcept { return circuit_; }
    [[nodiscard]] const Encoding &encoding() const noexcept { return encoding_; }
    [[nodiscard]] int measured_qubit() const noexcept { return measured_qubit_; }
    [[nodiscard]] bool is_block() const noexcept {
        return std::holds_alternative<BlockEncoding>(encoding_);
    }
    [[nodiscard]] std::size_t num_params() const noexcept {
        return circuit_.num_params();
    }

  private:
    CircuitTemplate circuit_;
    Encoding encoding_;
    int measured_qubit_;
};

/// Default measured qubit: the 1-based middle qubit ceil(n/2), as 0-based.
[[nodiscard]] constexpr int default_measured_qubit(int num_qubits) {
    return (num_qubits + 1) / 2 - 1;
}

/**
 * A sample made ready for repeated evaluation: the circuit's input state
 * and the data part of the angles (empty in amplitude mode, scale * x~ in
 * block mode, where the input is |0...0>).
 */
struct PreparedInput {
    StateVector initial{1};
    std::vector<double> angle_offsets;
};

[[nodiscard]] PreparedInput prepare(const Hypothesis &h, std::span<const double> features);
/// Quantum data; amplitude mode only.
[[nodiscard]] PreparedInput prepare(const Hypothesis &h, const StateVector &state);

struct PreparedSet {
    std::vector<PreparedInput> inputs;
    std::vector<OneHot> labels;
};

[[nodiscard]] PreparedSet prepare_dataset(const Hypothesis &h, const LabeledDataset &data);

/// Angles bound to the circuit: theta, plus the data offsets in block mode.
[[nodiscard]] std::vector<double> bound_angles(const PreparedInput &input,
                                               std::span<const double> theta);

[[nodiscard]] Probabilities hypothesis(const Hypothesis &h, const PreparedInput &input,
                                       std::span<const double> theta);

[[nodiscard]] double loss(const Probabilities &g, const OneHot &a, const Loss &kind);

/// dL/dg_k for k = 0, 1.
[[nodiscard]] std::array<double, 2> loss_sensitivity(const Probabilities &g,
                                                     const OneHot &a, const Loss &kind);

/// (dg0/dtheta_k, dg1/dtheta_k) by the parameter-shift rule.
[[nodiscard]] std::array<double, 2> shift_gradient(const Hypothesis &h,
                                                   const PreparedInput &input,
                                                   std::span<const double> theta,
                                                   std::size_t slot);

struct ProbabilityGradient {
    Probabilities g{};
    /// dg0/dtheta_k for every slot; dg1 = -dg0.
    std::vector<double> dg0;
};

[[nodiscard]] ProbabilityGradient adjoint_gradient(const Hypothesis &h,
                                                   const PreparedInput &input,
                                                   std::span<const double> theta);

struct LossGradient {
    double loss{0.0};
    Probabilities g{};
    std::vector<double> gradient;
    /// Full circuit evaluations spent (2 * params + 1 for the shift route,
    /// one forward pass for the adjoint route).
    std::uint64_t evaluations{0};
};

[[nodiscard]] LossGradient loss_and_gradient(const Hypothesis &h,
                                             const PreparedInput &input,
                                             const OneHot &label,
                                             std::span<const double> theta,
                                             const Loss &kind,
                                             GradientMethod method = GradientMethod::ParameterShift);

[[nodiscard]] std::vector<double> loss_gradient(const Hypothesis &h,
                                                const PreparedInput &input,
                                                const OneHot &label,
                                                std::span<const double> theta,
                                                const Loss &kind,
                                                GradientMethod method = GradientMethod::ParameterShift);

/// Central differences (L(theta + eps e_k) - L(theta - eps e_k)) / (2 eps).
[[nodiscard]] std::vector<double> fd_gradient_oracle(const Hypothesis &h,
                                                     const PreparedInput &input,
                                                     const OneHot &label,
                                                     std::span<const double> theta,
                                                     const Loss &kind, double eps);

} // namespace qnn
