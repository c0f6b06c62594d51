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

#include "qnn/state_vector.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace qnn {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_num_qubits(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("number of qubits must be in [1, " +
                                    std::to_string(kMaxQubits) + "], got " +
                                    std::to_string(n));
    }
}

void check_qubit(int n, int q, const char *what) {
    if (q < 0 || q >= n) {
        throw std::out_of_range(std::string(what) + " qubit " +
                                std::to_string(q) + " out of range for " +
                                std::to_string(n) + " qubits");
    }
}

using EigenVecMap = Eigen::Map<Eigen::VectorXcd>;

} // namespace

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    check_num_qubits(num_qubits);
    amplitudes_.assign(std::size_t{1} << num_qubits, Complex{});
    amplitudes_[0] = 1.0;
}

StateVector::StateVector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::basis(int num_qubits, std::size_t index) {
    StateVector s(num_qubits);
    if (index >= s.dimension()) {
        throw std::out_of_range("basis index " + std::to_string(index) +
                                " out of range");
    }
    s.amplitudes_[0] = 0.0;
    s.amplitudes_[index] = 1.0;
    return s;
}

StateVector StateVector::from_amplitudes(std::span<const Complex> amplitudes,
                                         int num_qubits, Normalize normalize) {
    check_num_qubits(num_qubits);
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (amplitudes.size() != dim) {
        throw std::invalid_argument(
            "amplitude vector has length " + std::to_string(amplitudes.size()) +
            ", expected 2^" + std::to_string(num_qubits) + " = " +
            std::to_string(dim));
    }
    std::vector<Complex> amps(amplitudes.begin(), amplitudes.end());
    double sq = 0.0;
    for (const auto &a : amps) {
        sq += std::norm(a);
    }
    const double nrm = std::sqrt(sq);
    if (normalize == Normalize::Yes) {
        if (nrm == 0.0) {
            throw std::invalid_argument("cannot normalize the zero vector");
        }
        for (auto &a : amps) {
            a /= nrm;
        }
    } else if (std::abs(nrm - 1.0) > 1e-8) {
        throw std::invalid_argument("amplitude vector has norm " +
                                    std::to_string(nrm) +
                                    "; expected 1 within 1e-8");
    }
    return StateVector(num_qubits, std::move(amps));
}

double StateVector::norm() const noexcept {
    double sq = 0.0;
    for (const auto &a : amplitudes_) {
        sq += std::norm(a);
    }
    return std::sqrt(sq);
}

void StateVector::apply_global_phase(double phase) noexcept {
    const Complex f = std::polar(1.0, phase);
    for (auto &a : amplitudes_) {
        a *= f;
    }
}

// ---------------------------------------------------------------------------
// GateSpec

GateSpec GateSpec::rotation(PauliAxis axis, int target, double angle) {
    GateSpec g;
    switch (axis) {
    case PauliAxis::X: g.kind_ = GateKind::RX; break;
    case PauliAxis::Y: g.kind_ = GateKind::RY; break;
    case PauliAxis::Z: g.kind_ = GateKind::RZ; break;
    }
    g.target_ = target;
    g.angle_ = angle;
    g.qubits_ = {target};
    return g;
}

GateSpec GateSpec::rx(int target, double angle) {
    return rotation(PauliAxis::X, target, angle);
}
GateSpec GateSpec::ry(int target, double angle) {
    return rotation(PauliAxis::Y, target, angle);
}
GateSpec GateSpec::rz(int target, double angle) {
    return rotation(PauliAxis::Z, target, angle);
}

GateSpec GateSpec::cnot(int control, int target) {
    if (control == target) {
        throw std::invalid_argument("CNOT control and target coincide");
    }
    GateSpec g;
    g.kind_ = GateKind::CNOT;
    g.target_ = target;
    g.control_ = control;
    g.qubits_ = {control, target};
    return g;
}

GateSpec GateSpec::cz(int control, int target) {
    if (control == target) {
        throw std::invalid_argument("CZ control and target coincide");
    }
    GateSpec g;
    g.kind_ = GateKind::CZ;
    g.target_ = target;
    g.control_ = control;
    g.qubits_ = {control, target};
    return g;
}

GateSpec GateSpec::dense(std::shared_ptr<const DenseMatrix> matrix,
                         std::vector<int> qubits) {
    if (!matrix) {
        throw std::invalid_argument("dense gate needs a matrix");
    }
    if (qubits.empty() || qubits.size() > static_cast<std::size_t>(kMaxQubits)) {
        throw std::invalid_argument("dense gate needs 1..14 target qubits");
    }
    const auto dim = Eigen::Index{1} << qubits.size();
    if (matrix->rows() != dim || matrix->cols() != dim) {
        throw std::invalid_argument("dense gate matrix is " +
                                    std::to_string(matrix->rows()) + "x" +
                                    std::to_string(matrix->cols()) +
                                    ", expected " + std::to_string(dim) +
                                    " square");
    }
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        for (std::size_t j = i + 1; j < qubits.size(); ++j) {
            if (qubits[i] == qubits[j]) {
                throw std::invalid_argument("dense gate repeats a qubit");
            }
        }
    }
    const double defect = unitarity_defect(*matrix);
    if (defect > kUnitarityTolerance) {
        throw std::invalid_argument("dense gate matrix is not unitary (defect " +
                                    std::to_string(defect) + ")");
    }
    GateSpec g;
    g.kind_ = GateKind::DenseUnitary;
    g.target_ = qubits.front();
    g.qubits_ = std::move(qubits);
    g.matrix_ = std::move(matrix);
    return g;
}

GateSpec GateSpec::dense(DenseMatrix matrix, std::vector<int> qubits) {
    return dense(std::make_shared<const DenseMatrix>(std::move(matrix)),
                 std::move(qubits));
}

double unitarity_defect(const DenseMatrix &u) {
    const DenseMatrix d =
        u.adjoint() * u - DenseMatrix::Identity(u.rows(), u.cols());
    return d.cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// Kernels

void apply_rotation(std::span<Complex> amps, int num_qubits, PauliAxis axis,
                    int target, double angle) noexcept {
    const std::size_t stride = qubit_stride(num_qubits, target);
    const std::size_t dim = amps.size();
    const double c = std::cos(0.5 * angle);
    const double s = std::sin(0.5 * angle);
    Complex *a = amps.data();
    switch (axis) {
    case PauliAxis::X: {
        const Complex mis{0.0, -s};
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            for (std::size_t i = base; i < base + stride; ++i) {
                const Complex a0 = a[i];
                const Complex a1 = a[i + stride];
                a[i] = c * a0 + mis * a1;
                a[i + stride] = mis * a0 + c * a1;
            }
        }
        break;
    }
    case PauliAxis::Y: {
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            for (std::size_t i = base; i < base + stride; ++i) {
                const Complex a0 = a[i];
                const Complex a1 = a[i + stride];
                a[i] = c * a0 - s * a1;
                a[i + stride] = s * a0 + c * a1;
            }
        }
        break;
    }
    case PauliAxis::Z: {
        const Complex p0{c, -s};
        const Complex p1{c, s};
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            for (std::size_t i = base; i < base + stride; ++i) {
                a[i] *= p0;
                a[i + stride] *= p1;
            }
        }
        break;
    }
    }
}

void apply_cnot(std::span<Complex> amps, int num_qubits, int control,
                int target) noexcept {
    const std::size_t cmask = qubit_stride(num_qubits, control);
    const std::size_t tmask = qubit_stride(num_qubits, target);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & cmask) != 0 && (i & tmask) == 0) {
            std::swap(amps[i], amps[i | tmask]);
        }
    }
}

void apply_cz(std::span<Complex> amps, int num_qubits, int control,
              int target) noexcept {
    const std::size_t mask = qubit_stride(num_qubits, control) |
                             qubit_stride(num_qubits, target);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) == mask) {
            amps[i] = -amps[i];
        }
    }
}

void apply_pauli(std::span<Complex> amps, int num_qubits, PauliAxis axis,
                 int target) noexcept {
    const std::size_t stride = qubit_stride(num_qubits, target);
    for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            Complex &a0 = amps[i];
            Complex &a1 = amps[i + stride];
            switch (axis) {
            case PauliAxis::X: std::swap(a0, a1); break;
            case PauliAxis::Y: {
                const Complex t0 = a0;
                a0 = -kI * a1;
                a1 = kI * t0;
                break;
            }
            case PauliAxis::Z: a1 = -a1; break;
            }
        }
    }
}

void apply_full_dense(std::span<Complex> amps, const DenseMatrix &u,
                      std::vector<Complex> &scratch) {
    scratch.resize(amps.size());
    EigenVecMap in(amps.data(), static_cast<Eigen::Index>(amps.size()));
    EigenVecMap out(scratch.data(), static_cast<Eigen::Index>(amps.size()));
    out.noalias() = u * in;
    std::copy(scratch.begin(), scratch.end(), amps.begin());
}

void apply_full_dense_adjoint(std::span<Complex> amps, const DenseMatrix &u,
                              std::vector<Complex> &scratch) {
    scratch.resize(amps.size());
    EigenVecMap in(amps.data(), static_cast<Eigen::Index>(amps.size()));
    EigenVecMap out(scratch.data(), static_cast<Eigen::Index>(amps.size()));
    out.noalias() = u.adjoint() * in;
    std::copy(scratch.begin(), scratch.end(), amps.begin());
}

BlockDiagonal block_structure(const DenseMatrix &u) {
    const auto dim = static_cast<std::size_t>(u.rows());
    std::vector<std::size_t> parent(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        parent[i] = i;
    }
    auto find = [&](std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
        for (Eigen::Index r = 0; r < u.rows(); ++r) {
            if (u(r, c) != Complex{}) {
                const std::size_t a = find(static_cast<std::size_t>(r));
                const std::size_t b = find(static_cast<std::size_t>(c));
                if (a != b) {
                    parent[std::max(a, b)] = std::min(a, b);
                }
            }
        }
    }
    BlockDiagonal bd;
    std::vector<std::size_t> block_of(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const std::size_t root = find(i);
        if (block_of[root] == dim) {
            block_of[root] = bd.indices.size();
            bd.indices.emplace_back();
        }
        bd.indices[block_of[root]].push_back(i);
    }
    for (const auto &idx : bd.indices) {
        const auto k = static_cast<Eigen::Index>(idx.size());
        DenseMatrix b(k, k);
        for (Eigen::Index r = 0; r < k; ++r) {
            for (Eigen::Index c = 0; c < k; ++c) {
                b(r, c) = u(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(r)]),
                            static_cast<Eigen::Index>(idx[static_cast<std::size_t>(c)]));
            }
        }
        bd.blocks.push_back(std::move(b));
    }
    return bd;
}

void apply_block_diagonal(std::span<Complex> amps, const BlockDiagonal &bd, bool adjoint,
                          std::vector<Complex> &scratch) {
    for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
        const auto &idx = bd.indices[b];
        const DenseMatrix &m = bd.blocks[b];
        if (idx.size() == 1) {
            amps[idx[0]] *= adjoint ? std::conj(m(0, 0)) : m(0, 0);
            continue;
        }
        const auto k = static_cast<Eigen::Index>(idx.size());
        scratch.resize(2 * idx.size());
        EigenVecMap in(scratch.data(), k);
        EigenVecMap out(scratch.data() + idx.size(), k);
        for (std::size_t j = 0; j < idx.size(); ++j) {
            in[static_cast<Eigen::Index>(j)] = amps[idx[j]];
        }
        if (adjoint) {
            out.noalias() = m.adjoint() * in;
        } else {
            out.noalias() = m * in;
        }
        for (std::size_t j = 0; j < idx.size(); ++j) {
            amps[idx[j]] = out[static_cast<Eigen::Index>(j)];
        }
    }
}

namespace {

void apply_dense_subset(StateVector &state, const GateSpec &gate) {
    const int n = state.num_qubits();
    const auto &qs = gate.qubits();
    const DenseMatrix &u = *gate.matrix();
    const std::size_t k = qs.size();
    const std::size_t sub = std::size_t{1} << k;

    bool full_in_order = (static_cast<int>(k) == n);
    for (std::size_t p = 0; full_in_order && p < k; ++p) {
        full_in_order = qs[p] == static_cast<int>(p);
    }
    if (full_in_order) {
        std::vector<Complex> scratch;
        apply_full_dense(state.mutable_amplitudes(), u, scratch);
        return;
    }

    std::vector<std::size_t> offsets(sub, 0);
    std::size_t target_mask = 0;
    for (std::size_t p = 0; p < k; ++p) {
        target_mask |= qubit_stride(n, qs[p]);
    }
    for (std::size_t j = 0; j < sub; ++j) {
        std::size_t off = 0;
        for (std::size_t p = 0; p < k; ++p) {
            if ((j >> (k - 1 - p)) & 1U) {
                off |= qubit_stride(n, qs[p]);
            }
        }
        offsets[j] = off;
    }

    auto amps = state.mutable_amplitudes();
    Eigen::VectorXcd in(static_cast<Eigen::Index>(sub));
    Eigen::VectorXcd out(static_cast<Eigen::Index>(sub));
    for (std::size_t base = 0; base < amps.size(); ++base) {
        if ((base & target_mask) != 0) {
            continue;
        }
        for (std::size_t j = 0; j < sub; ++j) {
            in[static_cast<Eigen::Index>(j)] = amps[base + offsets[j]];
        }
        out.noalias() = u * in;
        for (std::size_t j = 0; j < sub; ++j) {
            amps[base + offsets[j]] = out[static_cast<Eigen::Index>(j)];
        }
    }
}

} // namespace

void apply_gate(StateVector &state, const GateSpec &gate) {
    const int n = state.num_qubits();
    for (int q : gate.qubits()) {
        check_qubit(n, q, "gate");
    }
    auto amps = state.mutable_amplitudes();
    switch (gate.kind()) {
    case GateKind::RX:
        apply_rotation(amps, n, PauliAxis::X, gate.target(), gate.angle());
        break;
    case GateKind::RY:
        apply_rotation(amps, n, PauliAxis::Y, gate.target(), gate.angle());
        break;
    case GateKind::RZ:
        apply_rotation(amps, n, PauliAxis::Z, gate.target(), gate.angle());
        break;
    case GateKind::CNOT:
        apply_cnot(amps, n, *gate.control(), gate.target());
        break;
    case GateKind::CZ:
        apply_cz(amps, n, *gate.control(), gate.target());
        break;
    case GateKind::DenseUnitary:
        apply_dense_subset(state, gate);
        break;
    }
}

Complex pauli_matrix_element(std::span<const Complex> bra,
                             std::span<const Complex> ket, int num_qubits,
                             PauliAxis axis, int target) noexcept {
    const std::size_t stride = qubit_stride(num_qubits, target);
    Complex acc{};
    for (std::size_t base = 0; base < ket.size(); base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Complex b0 = std::conj(bra[i]);
            const Complex b1 = std::conj(bra[i + stride]);
            switch (axis) {
            case PauliAxis::X:
                acc += b0 * ket[i + stride] + b1 * ket[i];
                break;
            case PauliAxis::Y:
                acc += -kI * b0 * ket[i + stride] + kI * b1 * ket[i];
                break;
            case PauliAxis::Z:
                acc += b0 * ket[i] - b1 * ket[i + stride];
                break;
            }
        }
    }
    return acc;
}

Complex inner_product(std::span<const Complex> bra,
                      std::span<const Complex> ket) noexcept {
    Complex acc{};
    for (std::size_t i = 0; i < bra.size(); ++i) {
        acc += std::conj(bra[i]) * ket[i];
    }
    return acc;
}

double probability_zero(std::span<const Complex> amps, int num_qubits,
                        int qubit) noexcept {
    const std::size_t stride = qubit_stride(num_qubits, qubit);
    double p0 = 0.0;
    for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            p0 += std::norm(amps[i]);
        }
    }
    return p0;
}

double expectation(const StateVector &state, const Observable &obs) {
    const int n = state.num_qubits();
    check_qubit(n, obs.qubit, "observable");
    const auto amps = state.amplitudes();
    const double p0 = probability_zero(amps, n, obs.qubit);
    double total = 0.0;
    for (const auto &a : amps) {
        total += std::norm(a);
    }
    const double p1 = total - p0;
    switch (obs.kind) {
    case ObservableKind::PauliZ: return p0 - p1;
    case ObservableKind::Projector0: return p0;
    case ObservableKind::Projector1: return p1;
    }
    return 0.0;
}

} // namespace qnn
