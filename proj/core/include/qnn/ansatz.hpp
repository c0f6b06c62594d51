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
 * @file ansatz.hpp
 * Layered classifier circuits.
 *
 * A depth-d classifier is d composite blocks, each a parameterized rotation
 * layer followed by one entangling layer. The rotation layer applies, on
 * every qubit q, RZ(theta[b+3q]) then RX(theta[b+3q+1]) then
 * RZ(theta[b+3q+2]) in time order, where b is the layer's slot base.
 * Digital entanglers are nearest-neighbour chains 0->1, 1->2, ..., n-2->n-1
 * with no wrap-around; the analog entangler is exp(-iHt) on all qubits.
 */
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qnn/spin_models.hpp"
#include "qnn/state_vector.hpp"

namespace qnn {

enum class LayerKind : std::uint8_t { ParamRotations, EntCZ, EntCX, EntCX2, Analog };

/// Cached exp(-iHt) together with the data that produced it.
struct AnalogUnitary {
    HamiltonianSpec hamiltonian;
    double time{0.0};
    DenseMatrix matrix;
    /// The same unitary split into independent sectors.
    BlockDiagonal sectors;
};

struct LayerSpec {
    LayerKind kind{LayerKind::ParamRotations};
    int num_qubits{0};
    std::vector<std::size_t> param_slots;
    std::shared_ptr<const AnalogUnitary> analog;
};

/// Which entangling layer closes each composite block.
struct Entangler {
    LayerKind kind{LayerKind::EntCX};
    std::optional<HamiltonianSpec> hamiltonian; // Analog only
    double time{0.0};                           // Analog only

    static Entangler digital(LayerKind kind);
    static Entangler analog(HamiltonianSpec h, double t);

    /// "cz", "cx", "cx2" or "analog".
    [[nodiscard]] std::string name() const;
};

/// Parses "cz", "cx", "cx2", "analog" (analog gets no Hamiltonian here).
[[nodiscard]] LayerKind parse_entangler_kind(std::string_view name);
[[nodiscard]] std::string_view entangler_kind_name(LayerKind kind);

/// One primitive operation of a flattened circuit.
struct CircuitOp {
    enum class Kind : std::uint8_t { Rotation, CNOT, CZ, Dense };
    Kind kind{Kind::Rotation};
    PauliAxis axis{PauliAxis::Z};
    int q0{0}; // target for rotations, control for CNOT/CZ
    int q1{0}; // target for CNOT/CZ
    std::size_t slot{0};
    const DenseMatrix *matrix{nullptr};
    /// Set when the dense unitary splits into more than one sector.
    const BlockDiagonal *sectors{nullptr};
};

/**
 * Immutable after construction and safe to share across threads. Every
 * slot index in 0..num_params-1 is used by exactly one rotation.
 */
class CircuitTemplate {
  public:
    CircuitTemplate(int num_qubits, std::vector<LayerSpec> layers);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t num_params() const noexcept { return num_params_; }
    [[nodiscard]] const std::vector<LayerSpec> &layers() const noexcept {
        return layers_;
    }
    /// Flattened gate sequence in application order.
    [[nodiscard]] const std::vector<CircuitOp> &ops() const noexcept {
        return ops_;
    }

  private:
    int num_qubits_;
    std::vector<LayerSpec> layers_;
    std::size_t num_params_{0};
    std::vector<CircuitOp> ops_;
};

[[nodiscard]] LayerSpec param_rotation_layer(int num_qubits, std::size_t slot_base);
[[nodiscard]] LayerSpec ent_layer(int num_qubits, LayerKind kind);

/**
 * exp(-iHt) as a layer. The unitary is computed once per (H, t) and shared
 * through a process-wide cache; t is keyed at 12 significant digits.
 */
[[nodiscard]] LayerSpec analog_layer(const HamiltonianSpec &h, double t);

/// Shared handle to the cached exp(-iHt).
[[nodiscard]] std::shared_ptr<const AnalogUnitary>
cached_evolution(const HamiltonianSpec &h, double t);

/// Number of distinct (H, t) entries currently cached.
[[nodiscard]] std::size_t analog_cache_size();

[[nodiscard]] CircuitTemplate build_classifier(int num_qubits, int depth,
                                               const Entangler &ent);

/// Applies the circuit in place; `scratch` backs dense layers.
void run_in_place(const CircuitTemplate &circuit, std::span<const double> angles,
                  StateVector &state, std::vector<Complex> &scratch);

[[nodiscard]] StateVector run(const CircuitTemplate &circuit,
                              std::span<const double> angles,
                              const StateVector &input);

/// Applies a single op (or its inverse) with the given bound angle.
void apply_op(const CircuitOp &op, double angle, std::span<Complex> amps,
              int num_qubits, std::vector<Complex> &scratch);
void apply_op_inverse(const CircuitOp &op, double angle, std::span<Complex> amps,
                      int num_qubits, std::vector<Complex> &scratch);

} // namespace qnn
