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
 * @file state_vector.hpp
 * Dense n-qubit pure states and the gate set used by the classifiers.
 *
 * Bit convention: qubit 0 is the most significant bit of the basis index,
 * so on n qubits the basis state |b_0 b_1 ... b_{n-1}> has index
 * sum_q b_q * 2^(n-1-q). Every module in this project shares it.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qnn {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;

inline constexpr int kMaxQubits = 14;

/// Index stride of qubit `q` on an `n`-qubit register.
constexpr std::size_t qubit_stride(int num_qubits, int q) {
    return std::size_t{1} << (num_qubits - 1 - q);
}

enum class Normalize : bool { No = false, Yes = true };

class StateVector {
  public:
    /// |0...0> on `num_qubits` qubits.
    explicit StateVector(int num_qubits);

    /// Computational basis state with the given index.
    static StateVector basis(int num_qubits, std::size_t index);

    /**
     * Wraps raw amplitudes. The length must be exactly 2^n. Without
     * normalization the input norm must already be within 1e-8 of one;
     * with it, any nonzero vector is rescaled.
     */
    static StateVector from_amplitudes(std::span<const Complex> amplitudes,
                                       int num_qubits,
                                       Normalize normalize = Normalize::No);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t dimension() const noexcept {
        return amplitudes_.size();
    }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    [[nodiscard]] std::span<Complex> mutable_amplitudes() noexcept {
        return amplitudes_;
    }
    [[nodiscard]] const Complex &operator[](std::size_t i) const {
        return amplitudes_[i];
    }

    [[nodiscard]] double norm() const noexcept;

    /// Multiplies every amplitude by e^{i phase}.
    void apply_global_phase(double phase) noexcept;

    friend bool operator==(const StateVector &, const StateVector &) = default;

  private:
    StateVector(int num_qubits, std::vector<Complex> amplitudes);

    int num_qubits_;
    std::vector<Complex> amplitudes_;
};

enum class GateKind : std::uint8_t { RX, RY, RZ, CNOT, CZ, DenseUnitary };

enum class PauliAxis : std::uint8_t { X, Y, Z };

/**
 * One gate of the supported set. Rotations realize e^{-i angle/2 P}.
 * DenseUnitary carries a 2^k x 2^k matrix acting on `qubits` (listed
 * most-significant first); unitarity is checked when the gate is built.
 */
class GateSpec {
  public:
    static GateSpec rx(int target, double angle);
    static GateSpec ry(int target, double angle);
    static GateSpec rz(int target, double angle);
    static GateSpec rotation(PauliAxis axis, int target, double angle);
    static GateSpec cnot(int control, int target);
    static GateSpec cz(int control, int target);
    static GateSpec dense(std::shared_ptr<const DenseMatrix> matrix,
                          std::vector<int> qubits);
    static GateSpec dense(DenseMatrix matrix, std::vector<int> qubits);

    [[nodiscard]] GateKind kind() const noexcept { return kind_; }
    [[nodiscard]] int target() const noexcept { return target_; }
    [[nodiscard]] std::optional<int> control() const noexcept {
        return control_;
    }
    [[nodiscard]] double angle() const noexcept { return angle_; }
    [[nodiscard]] const std::vector<int> &qubits() const noexcept {
        return qubits_;
    }
    [[nodiscard]] const std::shared_ptr<const DenseMatrix> &matrix() const {
        return matrix_;
    }

  private:
    GateSpec() = default;

    GateKind kind_{GateKind::RX};
    int target_{0};
    std::optional<int> control_;
    double angle_{0.0};
    std::vector<int> qubits_;
    std::shared_ptr<const DenseMatrix> matrix_;
};

/// Largest |(U^dagger U - I)_{ij}|.
[[nodiscard]] double unitarity_defect(const DenseMatrix &u);

inline constexpr double kUnitarityTolerance = 1e-9;

/// Applies `gate` in place. Throws std::out_of_range on bad qubit indices.
void apply_gate(StateVector &state, const GateSpec &gate);

// Stride kernels. These skip validation and are used by the circuit
// runner's hot loop; callers guarantee indices are in range.
void apply_rotation(std::span<Complex> amps, int num_qubits, PauliAxis axis,
                    int target, double angle) noexcept;
void apply_cnot(std::span<Complex> amps, int num_qubits, int control,
                int target) noexcept;
void apply_cz(std::span<Complex> amps, int num_qubits, int control,
              int target) noexcept;
void apply_pauli(std::span<Complex> amps, int num_qubits, PauliAxis axis,
                 int target) noexcept;
/// Full-register matrix-vector product; `scratch` is resized as needed.
void apply_full_dense(std::span<Complex> amps, const DenseMatrix &u,
                      std::vector<Complex> &scratch);
void apply_full_dense_adjoint(std::span<Complex> amps, const DenseMatrix &u,
                              std::vector<Complex> &scratch);

/**
 * A unitary that is block diagonal up to a relabelling of basis states.
 * indices[b] lists the basis states of block b in ascending order and
 * blocks[b] is the matrix restricted to them.
 */
struct BlockDiagonal {
    std::vector<std::vector<std::size_t>> indices;
    std::vector<DenseMatrix> blocks;
};

/// Splits `u` along its exact zeros: states i and j share a block when
/// they are linked by a chain of nonzero entries.
[[nodiscard]] BlockDiagonal block_structure(const DenseMatrix &u);

/// Applies the block matrix (or its adjoint) to a full register.
void apply_block_diagonal(std::span<Complex> amps, const BlockDiagonal &bd, bool adjoint,
                          std::vector<Complex> &scratch);

/// <bra| P_target |ket>.
[[nodiscard]] Complex pauli_matrix_element(std::span<const Complex> bra,
                                           std::span<const Complex> ket,
                                           int num_qubits, PauliAxis axis,
                                           int target) noexcept;

[[nodiscard]] Complex inner_product(std::span<const Complex> bra,
                                    std::span<const Complex> ket) noexcept;

enum class ObservableKind : std::uint8_t { PauliZ, Projector0, Projector1 };

struct Observable {
    ObservableKind kind{ObservableKind::PauliZ};
    int qubit{0};

    static Observable pauli_z(int q) { return {ObservableKind::PauliZ, q}; }
    static Observable projector0(int q) {
        return {ObservableKind::Projector0, q};
    }
    static Observable projector1(int q) {
        return {ObservableKind::Projector1, q};
    }
};

/// Probability of reading 0 on `qubit`.
[[nodiscard]] double probability_zero(std::span<const Complex> amps,
                                      int num_qubits, int qubit) noexcept;

[[nodiscard]] double expectation(const StateVector &state,
                                 const Observable &obs);

} // namespace qnn
