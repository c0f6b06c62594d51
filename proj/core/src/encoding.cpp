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

#include "qnn/encoding.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qnn {

StateVector encode_amplitude(std::span<const double> x,
                             const AmplitudeEncoding &enc) {
    if (enc.num_qubits < 1 || enc.num_qubits > kMaxQubits) {
        throw std::invalid_argument("amplitude encoding qubit count out of range");
    }
    const std::size_t dim = std::size_t{1} << enc.num_qubits;
    if (x.size() > dim) {
        throw std::invalid_argument("vector of length " + std::to_string(x.size()) +
                                    " does not fit in " + std::to_string(dim) +
                                    " amplitudes");
    }
    if (enc.pad_policy == PadPolicy::Error && x.size() != dim) {
        throw std::invalid_argument("vector of length " + std::to_string(x.size()) +
                                    " needs padding to " + std::to_string(dim));
    }
    std::vector<Complex> amps(dim);
    for (std::size_t i = 0; i < x.size(); ++i) {
        amps[i] = x[i];
    }
    return StateVector::from_amplitudes(
        amps, enc.num_qubits, enc.normalize ? Normalize::Yes : Normalize::No);
}

std::vector<double> block_offsets(std::span<const double> x,
                                  const BlockEncoding &enc) {
    if (x.size() > enc.pad_to) {
        throw std::invalid_argument("feature vector of length " +
                                    std::to_string(x.size()) + " exceeds " +
                                    std::to_string(enc.pad_to) + " angle slots");
    }
    std::vector<double> out(enc.pad_to, 0.0);
    for (std::size_t k = 0; k < x.size(); ++k) {
        out[k] = enc.scale * x[k];
    }
    return out;
}

std::vector<double> encode_block(std::span<const double> x,
                                 std::span<const double> theta,
                                 const BlockEncoding &enc) {
    if (theta.size() != enc.pad_to) {
        throw std::invalid_argument("expected " + std::to_string(enc.pad_to) +
                                    " parameters, got " + std::to_string(theta.size()));
    }
    std::vector<double> angles = block_offsets(x, enc);
    for (std::size_t k = 0; k < angles.size(); ++k) {
        angles[k] += theta[k];
    }
    return angles;
}

std::vector<double> fix_global_phase(std::span<const double> x, int num_ones) {
    if (num_ones < 1) {
        throw std::invalid_argument("fix_global_phase needs at least one appended 1");
    }
    std::vector<double> out(x.begin(), x.end());
    out.insert(out.end(), static_cast<std::size_t>(num_ones), 1.0);
    return out;
}

} // namespace qnn
