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

#include "qnn/objective.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qnn {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void check_theta(const Hypothesis &h, std::span<const double> theta) {
    if (theta.size() != h.num_params()) {
        throw std::invalid_argument("expected " + std::to_string(h.num_params()) +
                                    " parameters, got " + std::to_string(theta.size()));
    }
}

Probabilities measure(const StateVector &s, int qubit) {
    const double p0 = probability_zero(s.amplitudes(), s.num_qubits(), qubit);
    return {p0, 1.0 - p0};
}

Probabilities forward(const Hypothesis &h, const PreparedInput &input,
                      std::span<const double> angles, std::vector<Complex> &scratch) {
    StateVector s = input.initial;
    run_in_place(h.circuit(), angles, s, scratch);
    return measure(s, h.measured_qubit());
}

} // namespace

Hypothesis::Hypothesis(CircuitTemplate circuit, Encoding encoding, int measured_qubit)
    : circuit_(std::move(circuit)), encoding_(std::move(encoding)),
      measured_qubit_(measured_qubit) {
    if (measured_qubit_ < 0 || measured_qubit_ >= circuit_.num_qubits()) {
        throw std::out_of_range("measured qubit " + std::to_string(measured_qubit_) +
                                " out of range for " +
                                std::to_string(circuit_.num_qubits()) + " qubits");
    }
    if (const auto *amp = std::get_if<AmplitudeEncoding>(&encoding_)) {
        if (amp->num_qubits != circuit_.num_qubits()) {
            throw std::invalid_argument("amplitude encoding qubit count differs from circuit");
        }
    } else {
        const auto &blk = std::get<BlockEncoding>(encoding_);
        if (blk.pad_to != circuit_.num_params()) {
            throw std::invalid_argument("block encoding pads to " +
                                        std::to_string(blk.pad_to) + " angles but the circuit has " +
                                        std::to_string(circuit_.num_params()) + " slots");
        }
    }
}

PreparedInput prepare(const Hypothesis &h, std::span<const double> features) {
    if (const auto *amp = std::get_if<AmplitudeEncoding>(&h.encoding())) {
        return {encode_amplitude(features, *amp), {}};
    }
    const auto &blk = std::get<BlockEncoding>(h.encoding());
    return {StateVector(h.circuit().num_qubits()), block_offsets(features, blk)};
}

PreparedInput prepare(const Hypothesis &h, const StateVector &state) {
    if (h.is_block()) {
        throw std::invalid_argument("block encoding takes classical features, not states");
    }
    if (state.num_qubits() != h.circuit().num_qubits()) {
        throw std::invalid_argument("input state has " + std::to_string(state.num_qubits()) +
                                    " qubits, circuit has " +
                                    std::to_string(h.circuit().num_qubits()));
    }
    return {state, {}};
}

PreparedSet prepare_dataset(const Hypothesis &h, const LabeledDataset &data) {
    PreparedSet out;
    out.inputs.reserve(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        out.inputs.push_back(data.holds_states() ? prepare(h, data.state(i))
                                                 : prepare(h, data.features(i)));
    }
    out.labels = data.labels();
    return out;
}

std::vector<double> bound_angles(const PreparedInput &input, std::span<const double> theta) {
    std::vector<double> angles(theta.begin(), theta.end());
    if (!input.angle_offsets.empty()) {
        if (input.angle_offsets.size() != theta.size()) {
            throw std::invalid_argument("angle offsets do not match parameter count");
        }
        for (std::size_t k = 0; k < angles.size(); ++k) {
            angles[k] += input.angle_offsets[k];
        }
    }
    return angles;
}

Probabilities hypothesis(const Hypothesis &h, const PreparedInput &input,
                         std::span<const double> theta) {
    check_theta(h, theta);
    std::vector<Complex> scratch;
    return forward(h, input, bound_angles(input, theta), scratch);
}

double loss(const Probabilities &g, const OneHot &a, const Loss &kind) {
    double l = 0.0;
    for (std::size_t k = 0; k < 2; ++k) {
        if (kind.kind == LossKind::MSE) {
            l += (a[k] - g[k]) * (a[k] - g[k]);
        } else if (a[k] != 0.0) {
            l -= a[k] * std::log(std::max(g[k], kind.epsilon_clip));
        }
    }
    return l;
}

std::array<double, 2> loss_sensitivity(const Probabilities &g, const OneHot &a,
                                       const Loss &kind) {
    std::array<double, 2> d{};
    for (std::size_t k = 0; k < 2; ++k) {
        if (kind.kind == LossKind::MSE) {
            d[k] = 2.0 * (g[k] - a[k]);
        } else {
            d[k] = a[k] == 0.0 ? 0.0 : -a[k] / std::max(g[k], kind.epsilon_clip);
        }
    }
    return d;
}

std::array<double, 2> shift_gradient(const Hypothesis &h, const PreparedInput &input,
                                     std::span<const double> theta, std::size_t slot) {
    check_theta(h, theta);
    if (slot >= theta.size()) {
        throw std::out_of_range("slot " + std::to_string(slot) + " out of range");
    }
    std::vector<double> angles = bound_angles(input, theta);
    std::vector<Complex> scratch;
    const double base = angles[slot];
    angles[slot] = base + kHalfPi;
    const Probabilities plus = forward(h, input, angles, scratch);
    angles[slot] = base - kHalfPi;
    const Probabilities minus = forward(h, input, angles, scratch);
    return {(plus[0] - minus[0]) / 2.0, (plus[1] - minus[1]) / 2.0};
}

ProbabilityGradient adjoint_gradient(const Hypothesis &h, const PreparedInput &input,
                                     std::span<const double> theta) {
    check_theta(h, theta);
    const std::vector<double> angles = bound_angles(input, theta);
    const auto &circuit = h.circuit();
    const int n = circuit.num_qubits();
    std::vector<Complex> scratch;

    StateVector psi = input.initial;
    run_in_place(circuit, angles, psi, scratch);

    ProbabilityGradient out;
    out.g = measure(psi, h.measured_qubit());
    out.dg0.assign(circuit.num_params(), 0.0);

    // lambda = P0 |psi>, the projector onto 0 on the measured qubit.
    StateVector lambda = psi;
    {
        auto l = lambda.mutable_amplitudes();
        const std::size_t stride = qubit_stride(n, h.measured_qubit());
        for (std::size_t base = 0; base < l.size(); base += 2 * stride) {
            for (std::size_t i = base + stride; i < base + 2 * stride; ++i) {
                l[i] = 0.0;
            }
        }
    }

    auto psi_amps = psi.mutable_amplitudes();
    auto lambda_amps = lambda.mutable_amplitudes();
    const auto &ops = circuit.ops();
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        const bool rot = it->kind == CircuitOp::Kind::Rotation;
        const double angle = rot ? angles[it->slot] : 0.0;
        if (rot) {
            out.dg0[it->slot] =
                pauli_matrix_element(lambda_amps, psi_amps, n, it->axis, it->q0).imag();
        }
        // the first op's inverse is never needed
        if (std::next(it) != ops.rend()) {
            apply_op_inverse(*it, angle, psi_amps, n, scratch);
            apply_op_inverse(*it, angle, lambda_amps, n, scratch);
        }
    }
    return out;
}

LossGradient loss_and_gradient(const Hypothesis &h, const PreparedInput &input,
                               const OneHot &label, std::span<const double> theta,
                               const Loss &kind, GradientMethod method) {
    check_theta(h, theta);
    LossGradient out;
    out.gradient.assign(theta.size(), 0.0);
    if (method == GradientMethod::Adjoint) {
        const ProbabilityGradient pg = adjoint_gradient(h, input, theta);
        out.g = pg.g;
        const auto d = loss_sensitivity(out.g, label, kind);
        const double coeff = d[0] - d[1];
        for (std::size_t k = 0; k < theta.size(); ++k) {
            out.gradient[k] = coeff * pg.dg0[k];
        }
        out.evaluations = 1;
    } else {
        out.g = hypothesis(h, input, theta);
        const auto d = loss_sensitivity(out.g, label, kind);
        for (std::size_t k = 0; k < theta.size(); ++k) {
            const auto dg = shift_gradient(h, input, theta, k);
            out.gradient[k] = d[0] * dg[0] + d[1] * dg[1];
        }
        out.evaluations = 2 * theta.size() + 1;
    }
    out.loss = loss(out.g, label, kind);
    return out;
}

std::vector<double> loss_gradient(const Hypothesis &h, const PreparedInput &input,
                                  const OneHot &label, std::span<const double> theta,
                                  const Loss &kind, GradientMethod method) {
    return loss_and_gradient(h, input, label, theta, kind, method).gradient;
}

std::vector<double> fd_gradient_oracle(const Hypothesis &h, const PreparedInput &input,
                                       const OneHot &label, std::span<const double> theta,
                                       const Loss &kind, double eps) {
    if (!(eps > 0.0)) {
        throw std::invalid_argument("finite-difference step must be positive");
    }
    check_theta(h, theta);
    std::vector<double> shifted(theta.begin(), theta.end());
    std::vector<double> grad(theta.size());
    for (std::size_t k = 0; k < theta.size(); ++k) {
        shifted[k] = theta[k] + eps;
        const double up = loss(hypothesis(h, input, shifted), label, kind);
        shifted[k] = theta[k] - eps;
        const double down = loss(hypothesis(h, input, shifted), label, kind);
        shifted[k] = theta[k];
        grad[k] = (up - down) / (2.0 * eps);
    }
    return grad;
}

} // namespace qnn
