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
 * @file spin_models.hpp
 * Dense spin-chain Hamiltonians, exact diagonalization and time evolution.
 *
 * Two models are supported:
 *
 *   cluster-Ising (periodic):
 *     H = - sum_j X_{j-1} Z_j X_{j+1} + lambda * sum_j Y_j Y_{j+1}
 *
 *   Aubry-Andre (open chain by default):
 *     H = -(g/2) sum_{k<N} (X_k X_{k+1} + Y_k Y_{k+1}) - sum_k (V_k/2) Z_k,
 *     V_k = V cos(2 pi alpha k + phi), k = 1..N
 *
 * Site j maps onto qubit j-1, so site 1 is the most significant bit.
 * Full dense diagonalization is used for every size; N = 10 takes a few
 * seconds per matrix and N = 14 can take many minutes.
 */
#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "qnn/dataset.hpp"
#include "qnn/state_vector.hpp"

namespace qnn {

enum class SpinModel : std::uint8_t { ClusterIsing, AubryAndre };
enum class Boundary : std::uint8_t { Open, Periodic };

inline constexpr int kMinSites = 2;
inline constexpr int kMaxSites = 14;

struct HamiltonianSpec {
    SpinModel model{SpinModel::ClusterIsing};
    int num_sites{8};
    double lambda{0.0};
    double g{1.0};
    double V{0.0};
    double alpha{0.6180339887498949}; // (sqrt(5) - 1) / 2
    double phi{0.0};
    Boundary boundary{Boundary::Periodic};

    static HamiltonianSpec cluster_ising(int num_sites, double lambda);
    static HamiltonianSpec aubry_andre(int num_sites, double g, double V,
                                       double phi = 0.0,
                                       Boundary boundary = Boundary::Open);

    /// Stable textual identity, used as a cache key.
    [[nodiscard]] std::string key() const;
};

/// Uniform draw from [0, 2 pi), reproducible for a fixed seed.
[[nodiscard]] double random_phase(std::uint64_t seed);

struct PauliTerm {
    PauliAxis axis;
    int qubit;
};

/// Adds coeff * (product of `ops`) to `h`.
void add_pauli_string(DenseMatrix &h, int num_qubits, double coeff,
                      std::span<const PauliTerm> ops);

/// <state| product of `ops` |state>, real part.
[[nodiscard]] double pauli_string_expectation(const StateVector &state,
                                              std::span<const PauliTerm> ops);

[[nodiscard]] DenseMatrix build_matrix(const HamiltonianSpec &spec);

struct EigenPair {
    double energy{0.0};
    StateVector state{1};
    /// E_1 - E_0; near zero signals a (quasi-)degenerate ground space.
    double gap{0.0};
};

/**
 * Lowest eigenpair. The phase is fixed so that the largest-magnitude
 * amplitude (first one on ties) is real and positive.
 */
[[nodiscard]] EigenPair ground_state(const HamiltonianSpec &spec);

/// U = exp(-i H t) via Hermitian eigendecomposition.
[[nodiscard]] DenseMatrix evolution_unitary(const HamiltonianSpec &spec,
                                            double t);

struct LambdaGrid {
    double start{0.0};
    double stop{2.0};
    double step{0.001};
};

/// Grid points start + i*step, i = 0..round((stop-start)/step).
[[nodiscard]] std::vector<double> lambda_points(const LambdaGrid &grid);

/**
 * Cluster-Ising ground states labelled by phase: (1,0) for lambda < 1,
 * (0,1) for lambda > 1. The critical point lambda = 1 is dropped. Grid
 * points may be diagonalized on up to `jobs` threads; output order always
 * follows the grid.
 */
[[nodiscard]] LabeledDataset make_spt_dataset(int num_sites,
                                              const LambdaGrid &grid,
                                              int jobs = 1);

} // namespace qnn
