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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "qnn/ansatz.hpp"
#include "qnn/objective.hpp"
#include "qnn/spin_models.hpp"
#include "qnn/state_vector.hpp"

namespace {

using namespace qnn;

StateVector random_state(int n) {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g;
    std::vector<Complex> a(std::size_t{1} << n);
    for (auto &z : a) {
        z = Complex(g(rng), g(rng));
    }
    return StateVector::from_amplitudes(a, n, Normalize::Yes);
}

std::vector<double> random_angles(std::size_t count) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::vector<double> v(count);
    for (double &x : v) {
        x = u(rng);
    }
    return v;
}

void BM_Rotation(benchmark::State &st) {
    const int n = static_cast<int>(st.range(0));
    auto s = random_state(n);
    const auto g = GateSpec::rx(n / 2, 0.3);
    for (auto _ : st) {
        apply_gate(s, g);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(s.dimension()));
}
BENCHMARK(BM_Rotation)->DenseRange(6, 14, 2);

void BM_Cnot(benchmark::State &st) {
    const int n = static_cast<int>(st.range(0));
    auto s = random_state(n);
    const auto g = GateSpec::cnot(0, n - 1);
    for (auto _ : st) {
        apply_gate(s, g);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(s.dimension()));
}
BENCHMARK(BM_Cnot)->DenseRange(6, 14, 2);

void BM_CircuitRun(benchmark::State &st) {
    const int n = 10;
    const int depth = static_cast<int>(st.range(0));
    const auto c = build_classifier(n, depth, Entangler::digital(LayerKind::EntCX));
    const auto theta = random_angles(c.num_params());
    const auto in = random_state(n);
    for (auto _ : st) {
        auto out = run(c, theta, in);
        benchmark::DoNotOptimize(out.amplitudes().data());
    }
}
BENCHMARK(BM_CircuitRun)->Arg(1)->Arg(5)->Arg(10);

void BM_AnalogCircuitRun(benchmark::State &st) {
    const int n = 10;
    const auto c = build_classifier(
        n, 1, Entangler::analog(HamiltonianSpec::aubry_andre(n, 1.0, 0.0, 0.0), 1.0));
    const auto theta = random_angles(c.num_params());
    const auto in = random_state(n);
    for (auto _ : st) {
        auto out = run(c, theta, in);
        benchmark::DoNotOptimize(out.amplitudes().data());
    }
}
BENCHMARK(BM_AnalogCircuitRun);

void BM_Gradient(benchmark::State &st) {
    const int n = 10;
    const int depth = static_cast<int>(st.range(0));
    const auto method = st.range(1) == 0 ? GradientMethod::Adjoint : GradientMethod::ParameterShift;
    auto circuit = build_classifier(n, depth, Entangler::digital(LayerKind::EntCX));
    const auto theta = random_angles(circuit.num_params());
    const Hypothesis h(std::move(circuit), AmplitudeEncoding{n}, default_measured_qubit(n));
    const auto in = prepare(h, random_state(n));
    const Loss loss{LossKind::CrossEntropy};
    for (auto _ : st) {
        auto g = loss_gradient(h, in, one_hot(1), theta, loss, method);
        benchmark::DoNotOptimize(g.data());
    }
    st.SetLabel(method == GradientMethod::Adjoint ? "adjoint" : "shift");
}
BENCHMARK(BM_Gradient)->ArgsProduct({{1, 5, 10}, {0, 1}});

} // namespace

BENCHMARK_MAIN();
