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

#include <cstdint>
#include <span>
#include <vector>

#include "qnn/state_vector.hpp"

namespace qnn {

enum class PadPolicy : std::uint8_t { ZeroPad, Error };

/// Data vector -> normalized amplitudes of an n-qubit state.
struct AmplitudeEncoding {
    int num_qubits{1};
    PadPolicy pad_policy{PadPolicy::ZeroPad};
    bool normalize{true};
};

/**
 * Data vector -> rotation angles. Slot k receives scale * x[k] + theta[k],
 * with x zero-padded to `pad_to` (the circuit's parameter count).
 */
struct BlockEncoding {
    double scale{2.0};
    std::size_t pad_to{0};
};

/// Errors on an all-zero input or when x does not fit (or, under
/// PadPolicy::Error, does not exactly fill) 2^n amplitudes.
[[nodiscard]] StateVector encode_amplitude(std::span<const double> x,
                                           const AmplitudeEncoding &enc);

/// scale * x~, the data part of the block-encoded angles.
[[nodiscard]] std::vector<double> block_offsets(std::span<const double> x,
                                                const BlockEncoding &enc);

[[nodiscard]] std::vector<double> encode_block(std::span<const double> x,
                                               std::span<const double> theta,
                                               const BlockEncoding &enc);

/// Appends `num_ones` entries equal to 1. Turns a sign flip between
/// classes (a global phase after encoding) into a relative phase.
[[nodiscard]] std::vector<double> fix_global_phase(std::span<const double> x,
                                                   int num_ones);

} // namespace qnn
