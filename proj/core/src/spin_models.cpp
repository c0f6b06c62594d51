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

#include "qnn/spin_models.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include <Eigen/Eigenvalues>

namespace qnn {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_sites(const HamiltonianSpec &spec) {
    const int lo = spec.model == SpinModel::ClusterIsing ? 3 : kMinSites;
    if (spec.num_sites < lo || spec.num_sites > kMaxSites) {
        throw std::invalid_argument("number of sites " +
                                    std::to_string(spec.num_sites) +
                                    " outside [" + std::to_string(lo) + ", " +
                                    std::to_string(kMaxSites) + "]");
    }
    if (spec.model == SpinModel::ClusterIsing &&
        spec.boundary != Boundary::Periodic) {
        throw std::invalid_argument("cluster-Ising chain is periodic only");
    }
}

bool is_real(const DenseMatrix &h) {
    return h.imag().cwiseAbs().maxCoeff() == 0.0;
}

// Eigenvalues ascending with matching columns; real arithmetic when the
// matrix allows it, which holds for both supported models.
struct Spectrum {
    Eigen::VectorXd energies;
    DenseMatrix vectors;
};

Spectrum diagonalize(const DenseMatrix &h) {
    if (is_real(h)) {
        const Eigen::MatrixXd hr = h.real();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hr);
        if (solver.info() != Eigen::Success) {
            throw std::runtime_error("real symmetric eigensolver failed for a " +
                                     std::to_string(hr.rows()) + "x" +
                                     std::to_string(hr.cols()) + " matrix");
        }
        return {solver.eigenvalues(), solver.eigenvectors().cast<Complex>()};
    }
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("Hermitian eigensolver failed for a " +
                                 std::to_string(h.rows()) + "x" +
                                 std::to_string(h.cols()) + " matrix");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

} // namespace

HamiltonianSpec HamiltonianSpec::cluster_ising(int num_sites, double lambda) {
    HamiltonianSpec s;
    s.model = SpinModel::ClusterIsing;
    s.num_sites = num_sites;
    s.lambda = lambda;
    s.boundary = Boundary::Periodic;
    return s;
}

HamiltonianSpec HamiltonianSpec::aubry_andre(int num_sites, double g, double V,
                                             double phi, Boundary boundary) {
    HamiltonianSpec s;
    s.model = SpinModel::AubryAndre;
    s.num_sites = num_sites;
    s.g = g;
    s.V = V;
    s.phi = phi;
    s.boundary = boundary;
    return s;
}

std::string HamiltonianSpec::key() const {
    char buf[256];
    if (model == SpinModel::ClusterIsing) {
        std::snprintf(buf, sizeof buf, "cluster-ising:N=%d:lambda=%.17g",
                      num_sites, lambda);
    } else {
        std::snprintf(buf, sizeof buf,
                      "aubry-andre:N=%d:g=%.17g:V=%.17g:alpha=%.17g:phi=%.17g:%s",
                      num_sites, g, V, alpha, phi,
                      boundary == Boundary::Open ? "open" : "periodic");
    }
    return buf;
}

double random_phase(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 2.0 * std::numbers::pi);
    return dist(rng);
}

void add_pauli_string(DenseMatrix &h, int num_qubits, double coeff,
                      std::span<const PauliTerm> ops) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    for (std::size_t b = 0; b < dim; ++b) {
        std::size_t flip = 0;
        Complex phase{1.0, 0.0};
        for (const auto &op : ops) {
            const std::size_t m = qubit_stride(num_qubits, op.qubit);
            const bool one = ((b ^ flip) & m) != 0;
            switch (op.axis) {
            case PauliAxis::X: flip ^= m; break;
            case PauliAxis::Y:
                phase *= one ? -kI : kI;
                flip ^= m;
                break;
            case PauliAxis::Z:
                if (one) {
                    phase = -phase;
                }
                break;
            }
        }
        h(static_cast<Eigen::Index>(b ^ flip), static_cast<Eigen::Index>(b)) +=
            coeff * phase;
    }
}

double pauli_string_expectation(const StateVector &state,
                                std::span<const PauliTerm> ops) {
    StateVector work = state;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        apply_pauli(work.mutable_amplitudes(), work.num_qubits(), it->axis,
                    it->qubit);
    }
    return inner_product(state.amplitudes(), work.amplitudes()).real();
}

DenseMatrix build_matrix(const HamiltonianSpec &spec) {
    check_sites(spec);
    const int n = spec.num_sites;
    const auto dim = Eigen::Index{1} << n;
    DenseMatrix h = DenseMatrix::Zero(dim, dim);
    auto site = [n](int j) { return ((j % n) + n) % n; };

    if (spec.model == SpinModel::ClusterIsing) {
        for (int j = 0; j < n; ++j) {
            const PauliTerm xzx[] = {{PauliAxis::X, site(j - 1)},
                                     {PauliAxis::Z, j},
                                     {PauliAxis::X, site(j + 1)}};
            add_pauli_string(h, n, -1.0, xzx);
            const PauliTerm yy[] = {{PauliAxis::Y, j},
                                    {PauliAxis::Y, site(j + 1)}};
            add_pauli_string(h, n, spec.lambda, yy);
        }
        return h;
    }

    const int bonds = spec.boundary == Boundary::Open ? n - 1 : n;
    for (int k = 0; k < bonds; ++k) {
        const PauliTerm xx[] = {{PauliAxis::X, k}, {PauliAxis::X, site(k + 1)}};
        const PauliTerm yy[] = {{PauliAxis::Y, k}, {PauliAxis::Y, site(k + 1)}};
        add_pauli_string(h, n, -0.5 * spec.g, xx);
        add_pauli_string(h, n, -0.5 * spec.g, yy);
    }
    for (int k = 1; k <= n; ++k) {
        const double vk =
            spec.V * std::cos(2.0 * std::numbers::pi * spec.alpha * k + spec.phi);
        if (vk == 0.0) {
            continue;
        }
        const PauliTerm z[] = {{PauliAxis::Z, k - 1}};
        add_pauli_string(h, n, -0.5 * vk, z);
    }
    return h;
}

EigenPair ground_state(const HamiltonianSpec &spec) {
    const DenseMatrix h = build_matrix(spec);
    const Spectrum sp = diagonalize(h);

    Eigen::VectorXcd v = sp.vectors.col(0);
    Eigen::Index best = 0;
    double best_mag = -1.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v[i]);
        if (mag > best_mag + 1e-12) {
            best_mag = mag;
            best = i;
        }
    }
    v *= std::conj(v[best]) / std::abs(v[best]);
    v[best] = std::abs(v[best]);
    v.normalize();

    std::vector<Complex> amps(v.data(), v.data() + v.size());
    EigenPair out;
    out.energy = sp.energies[0];
    out.state = StateVector::from_amplitudes(amps, spec.num_sites);
    out.gap = sp.energies.size() > 1 ? sp.energies[1] - sp.energies[0] : 0.0;
    return out;
}

DenseMatrix evolution_unitary(const HamiltonianSpec &spec, double t) {
    const DenseMatrix h = build_matrix(spec);
    if (t == 0.0) {
        return DenseMatrix::Identity(h.rows(), h.cols());
    }
    // sectors that H never connects evolve independently, and U keeps
    // exact zeros between them
    const BlockDiagonal sectors = block_structure(h);
    DenseMatrix u = DenseMatrix::Zero(h.rows(), h.cols());
    for (std::size_t b = 0; b < sectors.blocks.size(); ++b) {
        const Spectrum sp = diagonalize(sectors.blocks[b]);
        Eigen::VectorXcd phases(sp.energies.size());
        for (Eigen::Index i = 0; i < phases.size(); ++i) {
            phases[i] = std::polar(1.0, -sp.energies[i] * t);
        }
        const DenseMatrix ub = sp.vectors * phases.asDiagonal() * sp.vectors.adjoint();
        const auto &idx = sectors.indices[b];
        for (std::size_t r = 0; r < idx.size(); ++r) {
            for (std::size_t c = 0; c < idx.size(); ++c) {
                u(static_cast<Eigen::Index>(idx[r]), static_cast<Eigen::Index>(idx[c])) =
                    ub(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
            }
        }
    }
    return u;
}

std::vector<double> lambda_points(const LambdaGrid &grid) {
    if (!(grid.step > 0.0)) {
        throw std::invalid_argument("lambda step must be positive");
    }
    if (grid.stop < grid.start) {
        throw std::invalid_argument("lambda grid stop precedes start");
    }
    const auto count =
        static_cast<std::size_t>(std::llround((grid.stop - grid.start) / grid.step)) + 1;
    std::vector<double> pts(count);
    for (std::size_t i = 0; i < count; ++i) {
        pts[i] = grid.start + static_cast<double>(i) * grid.step;
    }
    return pts;
}

LabeledDataset make_spt_dataset(int num_sites, const LambdaGrid &grid,
                                int jobs) {
    if (num_sites < 3 || num_sites > 12) {
        throw std::invalid_argument("SPT dataset supports 3..12 sites, got " +
                                    std::to_string(num_sites));
    }
    std::vector<double> lambdas;
    for (double l : lambda_points(grid)) {
        // the critical point has no two-class label
        if (std::abs(l - 1.0) > 1e-9) {
            lambdas.push_back(l);
        }
    }

    std::vector<EigenPair> pairs(lambdas.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < lambdas.size(); i = next++) {
            pairs[i] = ground_state(HamiltonianSpec::cluster_ising(num_sites, lambdas[i]));
        }
    };
    const int threads = std::max(1, jobs);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }

    std::vector<StateVector> states;
    std::vector<OneHot> labels;
    DatasetMeta meta;
    meta.source = "cluster-ising-N" + std::to_string(num_sites);
    meta.preprocessing = {"exact-diagonalization", "phase-fix:max-amplitude-real-positive"};
    meta.label_rule = "lambda<1:(1,0);lambda>1:(0,1);lambda=1 excluded";
    states.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        states.push_back(std::move(pairs[i].state));
        labels.push_back(one_hot(lambdas[i] < 1.0 ? 0 : 1));
        meta.lambdas.push_back(lambdas[i]);
        meta.spectral_gaps.push_back(pairs[i].gap);
    }
    return LabeledDataset::from_states(std::move(states), std::move(labels),
                                       std::move(meta));
}

} // namespace qnn
