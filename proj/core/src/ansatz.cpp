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

#include "qnn/ansatz.hpp"

#include <cstdio>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace qnn {

namespace {

constexpr PauliAxis kRotationAxes[3] = {PauliAxis::Z, PauliAxis::X, PauliAxis::Z};

class AnalogCache {
  public:
    std::shared_ptr<const AnalogUnitary> get(const HamiltonianSpec &h, double t) {
        char tkey[64];
        std::snprintf(tkey, sizeof tkey, "%.12g", t);
        const std::string key = h.key() + "|t=" + tkey;
        {
            std::lock_guard lock(mutex_);
            if (auto it = entries_.find(key); it != entries_.end()) {
                return it->second;
            }
        }
        // Computed outside the lock; a racing duplicate is harmless.
        auto entry = std::make_shared<AnalogUnitary>();
        entry->hamiltonian = h;
        entry->time = t;
        entry->matrix = evolution_unitary(h, t);
        entry->sectors = block_structure(entry->matrix);
        std::lock_guard lock(mutex_);
        return entries_.try_emplace(key, std::move(entry)).first->second;
    }

    std::size_t size() {
        std::lock_guard lock(mutex_);
        return entries_.size();
    }

  private:
    std::mutex mutex_;
    std::unordered_map<std::string, std::shared_ptr<const AnalogUnitary>> entries_;
};

AnalogCache &analog_cache() {
    static AnalogCache cache;
    return cache;
}

void append_chain(std::vector<CircuitOp> &ops, int n, CircuitOp::Kind kind) {
    for (int q = 0; q + 1 < n; ++q) {
        CircuitOp op;
        op.kind = kind;
        op.q0 = q;
        op.q1 = q + 1;
        ops.push_back(op);
    }
}

} // namespace

Entangler Entangler::digital(LayerKind kind) {
    if (kind == LayerKind::ParamRotations || kind == LayerKind::Analog) {
        throw std::invalid_argument("not a digital entangling layer kind");
    }
    Entangler e;
    e.kind = kind;
    return e;
}

Entangler Entangler::analog(HamiltonianSpec h, double t) {
    Entangler e;
    e.kind = LayerKind::Analog;
    e.hamiltonian = std::move(h);
    e.time = t;
    return e;
}

std::string Entangler::name() const {
    return std::string(entangler_kind_name(kind));
}

LayerKind parse_entangler_kind(std::string_view name) {
    if (name == "cz") return LayerKind::EntCZ;
    if (name == "cx") return LayerKind::EntCX;
    if (name == "cx2") return LayerKind::EntCX2;
    if (name == "analog") return LayerKind::Analog;
    throw std::invalid_argument("unknown entangling layer '" + std::string(name) +
                                "' (expected cz, cx, cx2 or analog)");
}

std::string_view entangler_kind_name(LayerKind kind) {
    switch (kind) {
    case LayerKind::EntCZ: return "cz";
    case LayerKind::EntCX: return "cx";
    case LayerKind::EntCX2: return "cx2";
    case LayerKind::Analog: return "analog";
    case LayerKind::ParamRotations: return "rotations";
    }
    return "?";
}

LayerSpec param_rotation_layer(int num_qubits, std::size_t slot_base) {
    if (num_qubits < 1) {
        throw std::invalid_argument("rotation layer needs at least one qubit");
    }
    LayerSpec l;
    l.kind = LayerKind::ParamRotations;
    l.num_qubits = num_qubits;
    l.param_slots.resize(3 * static_cast<std::size_t>(num_qubits));
    for (std::size_t k = 0; k < l.param_slots.size(); ++k) {
        l.param_slots[k] = slot_base + k;
    }
    return l;
}

LayerSpec ent_layer(int num_qubits, LayerKind kind) {
    if (kind != LayerKind::EntCZ && kind != LayerKind::EntCX &&
        kind != LayerKind::EntCX2) {
        throw std::invalid_argument("ent_layer takes cz, cx or cx2");
    }
    if (num_qubits < 2) {
        throw std::invalid_argument("entangling layer needs at least two qubits");
    }
    LayerSpec l;
    l.kind = kind;
    l.num_qubits = num_qubits;
    return l;
}

std::shared_ptr<const AnalogUnitary> cached_evolution(const HamiltonianSpec &h,
                                                      double t) {
    return analog_cache().get(h, t);
}

std::size_t analog_cache_size() { return analog_cache().size(); }

LayerSpec analog_layer(const HamiltonianSpec &h, double t) {
    if (!(t >= 0.0)) {
        throw std::invalid_argument("evolution time must be non-negative");
    }
    LayerSpec l;
    l.kind = LayerKind::Analog;
    l.num_qubits = h.num_sites;
    l.analog = cached_evolution(h, t);
    return l;
}

CircuitTemplate::CircuitTemplate(int num_qubits, std::vector<LayerSpec> layers)
    : num_qubits_(num_qubits), layers_(std::move(layers)) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("circuit qubit count out of range");
    }
    std::vector<char> seen;
    for (const auto &layer : layers_) {
        if (layer.num_qubits != num_qubits_) {
            throw std::invalid_argument(
                "layer acts on " + std::to_string(layer.num_qubits) +
                " qubits but the circuit has " + std::to_string(num_qubits_));
        }
        switch (layer.kind) {
        case LayerKind::ParamRotations: {
            if (layer.param_slots.size() != 3 * static_cast<std::size_t>(num_qubits_)) {
                throw std::invalid_argument("rotation layer must declare 3n slots");
            }
            for (int q = 0; q < num_qubits_; ++q) {
                for (int r = 0; r < 3; ++r) {
                    CircuitOp op;
                    op.kind = CircuitOp::Kind::Rotation;
                    op.axis = kRotationAxes[r];
                    op.q0 = q;
                    op.slot = layer.param_slots[static_cast<std::size_t>(3 * q + r)];
                    if (op.slot >= seen.size()) {
                        seen.resize(op.slot + 1, 0);
                    }
                    if (seen[op.slot]++ != 0) {
                        throw std::invalid_argument("parameter slot " +
                                                    std::to_string(op.slot) +
                                                    " used twice");
                    }
                    ops_.push_back(op);
                }
            }
            break;
        }
        case LayerKind::EntCZ:
            append_chain(ops_, num_qubits_, CircuitOp::Kind::CZ);
            break;
        case LayerKind::EntCX:
            append_chain(ops_, num_qubits_, CircuitOp::Kind::CNOT);
            break;
        case LayerKind::EntCX2:
            append_chain(ops_, num_qubits_, CircuitOp::Kind::CNOT);
            append_chain(ops_, num_qubits_, CircuitOp::Kind::CNOT);
            break;
        case LayerKind::Analog: {
            if (!layer.analog) {
                throw std::invalid_argument("analog layer without a unitary");
            }
            const auto dim = Eigen::Index{1} << num_qubits_;
            if (layer.analog->matrix.rows() != dim) {
                throw std::invalid_argument(
                    "analog unitary dimension does not match the circuit");
            }
            CircuitOp op;
            op.kind = CircuitOp::Kind::Dense;
            op.matrix = &layer.analog->matrix;
            if (layer.analog->sectors.blocks.size() > 1) {
                op.sectors = &layer.analog->sectors;
            }
            ops_.push_back(op);
            break;
        }
        }
    }
    num_params_ = seen.size();
    for (std::size_t k = 0; k < seen.size(); ++k) {
        if (seen[k] == 0) {
            throw std::invalid_argument("parameter slot " + std::to_string(k) +
                                        " is never used");
        }
    }
}

CircuitTemplate build_classifier(int num_qubits, int depth, const Entangler &ent) {
    if (depth < 1) {
        throw std::invalid_argument("classifier depth must be at least 1");
    }
    std::vector<LayerSpec> layers;
    layers.reserve(2 * static_cast<std::size_t>(depth));
    if (ent.kind == LayerKind::Analog) {
        if (!ent.hamiltonian) {
            throw std::invalid_argument("analog entangler needs a Hamiltonian");
        }
        if (ent.hamiltonian->num_sites != num_qubits) {
            throw std::invalid_argument(
                "analog Hamiltonian has " + std::to_string(ent.hamiltonian->num_sites) +
                " sites but the circuit has " + std::to_string(num_qubits) + " qubits");
        }
    }
    for (int d = 0; d < depth; ++d) {
        layers.push_back(param_rotation_layer(
            num_qubits, 3 * static_cast<std::size_t>(num_qubits) * static_cast<std::size_t>(d)));
        if (ent.kind == LayerKind::Analog) {
            layers.push_back(analog_layer(*ent.hamiltonian, ent.time));
        } else {
            layers.push_back(ent_layer(num_qubits, ent.kind));
        }
    }
    return CircuitTemplate(num_qubits, std::move(layers));
}

void apply_op(const CircuitOp &op, double angle, std::span<Complex> amps,
              int num_qubits, std::vector<Complex> &scratch) {
    switch (op.kind) {
    case CircuitOp::Kind::Rotation:
        apply_rotation(amps, num_qubits, op.axis, op.q0, angle);
        break;
    case CircuitOp::Kind::CNOT: apply_cnot(amps, num_qubits, op.q0, op.q1); break;
    case CircuitOp::Kind::CZ: apply_cz(amps, num_qubits, op.q0, op.q1); break;
    case CircuitOp::Kind::Dense:
        if (op.sectors != nullptr) {
            apply_block_diagonal(amps, *op.sectors, false, scratch);
        } else {
            apply_full_dense(amps, *op.matrix, scratch);
        }
        break;
    }
}

void apply_op_inverse(const CircuitOp &op, double angle, std::span<Complex> amps,
                      int num_qubits, std::vector<Complex> &scratch) {
    switch (op.kind) {
    case CircuitOp::Kind::Rotation:
        apply_rotation(amps, num_qubits, op.axis, op.q0, -angle);
        break;
    case CircuitOp::Kind::CNOT: apply_cnot(amps, num_qubits, op.q0, op.q1); break;
    case CircuitOp::Kind::CZ: apply_cz(amps, num_qubits, op.q0, op.q1); break;
    case CircuitOp::Kind::Dense:
        if (op.sectors != nullptr) {
            apply_block_diagonal(amps, *op.sectors, true, scratch);
        } else {
            apply_full_dense_adjoint(amps, *op.matrix, scratch);
        }
        break;
    }
}

void run_in_place(const CircuitTemplate &circuit, std::span<const double> angles,
                  StateVector &state, std::vector<Complex> &scratch) {
    if (angles.size() != circuit.num_params()) {
        throw std::invalid_argument("circuit expects " +
                                    std::to_string(circuit.num_params()) +
                                    " angles, got " + std::to_string(angles.size()));
    }
    if (state.num_qubits() != circuit.num_qubits()) {
        throw std::invalid_argument("input state has " +
                                    std::to_string(state.num_qubits()) +
                                    " qubits, circuit has " +
                                    std::to_string(circuit.num_qubits()));
    }
    const int n = circuit.num_qubits();
    auto amps = state.mutable_amplitudes();
    for (const auto &op : circuit.ops()) {
        const double angle = op.kind == CircuitOp::Kind::Rotation ? angles[op.slot] : 0.0;
        apply_op(op, angle, amps, n, scratch);
    }
}

StateVector run(const CircuitTemplate &circuit, std::span<const double> angles,
                const StateVector &input) {
    StateVector out = input;
    std::vector<Complex> scratch;
    run_in_place(circuit, angles, out, scratch);
    return out;
}

} // namespace qnn
