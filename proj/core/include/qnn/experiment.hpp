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
 * @file experiment.hpp
 * Dataset selection, classifier assembly and multi-run sweeps.
 *
 * Dataset selectors:
 *   mnist        digits 1 vs 9 from the IDX files in <data_dir>/mnist
 *   fashion      T-shirt (0) vs ankle boot (9) from <data_dir>/fashion
 *   spt8, spt10  cluster-Ising ground states, loaded from
 *                <data_dir>/spt<N>.qnnspt or generated on first use
 *   spt:<path>   an existing QNNSPT1 file
 *
 * Image tasks run on 10 qubits: 256 features padded to 1024 amplitudes in
 * amplitude mode, or 30 angles per composite block in block mode.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qnn/preprocess.hpp"
#include "qnn/results.hpp"
#include "qnn/trainer.hpp"

namespace qnn {

inline constexpr int kImageQubits = 10;

struct DataSelection {
    std::string selector{"mnist"};
    std::filesystem::path data_dir{"data"};
    std::size_t num_train{500};
    std::size_t num_test{100};
    /// Seeds the train/test split; independent of the model seed.
    std::uint64_t seed{0};
    int jobs{1}; // threads for on-demand SPT generation
};

struct LoadedData {
    std::string name;
    TrainTestSplit split;
    int num_qubits{0};
};

/// QNN_DATA_DIR when set, otherwise ./data.
[[nodiscard]] std::filesystem::path default_data_dir();

[[nodiscard]] LoadedData load_data(const DataSelection &sel);

enum class EncodingMode : std::uint8_t { Amplitude, Block };

[[nodiscard]] EncodingMode parse_encoding_mode(std::string_view name);
[[nodiscard]] std::string_view encoding_mode_name(EncodingMode mode);

/// Everything about one run except the dataset and seed.
struct ModelSpec {
    EncodingMode encoding{EncodingMode::Amplitude};
    int depth{1};
    LayerKind ent{LayerKind::EntCX};
    double t_evo{1.0};  // analog only
    double scale{2.0};  // block only
    /// 0-based; the middle qubit when unset.
    std::optional<int> measured_qubit;
    /// Aubry-Andre parameters of the analog layer.
    double aa_g{1.0};
    double aa_v{0.0};
    double aa_phi{0.0};
};

[[nodiscard]] Hypothesis build_hypothesis(const ModelSpec &model, int num_qubits);

[[nodiscard]] RunKey make_key(const std::string &dataset, const ModelSpec &model,
                              std::uint64_t seed);

/// One seeded training run on an already loaded dataset.
[[nodiscard]] RunEntry run_one(const LoadedData &data, const ModelSpec &model,
                               TrainConfig cfg);

struct SweepSpec {
    ModelSpec base;
    std::vector<int> depths;
    std::vector<LayerKind> ents;
    std::vector<double> scales;
    std::vector<double> t_evos;
    std::size_t seeds_per_cell{1};
    std::uint64_t seed_base{0};
    TrainConfig train;
    std::string table{"sweep"};
    int jobs{1};
};

/// Throws std::invalid_argument for empty axes, zero seeds, a multi-valued
/// t axis mixed with digital entanglers, or a multi-valued scale axis in
/// amplitude mode.
void validate_sweep(const SweepSpec &spec);

/// Seed of repetition `rep` in cell `cell`.
[[nodiscard]] constexpr std::uint64_t cell_seed(std::uint64_t base, std::size_t cell,
                                                std::size_t rep) {
    return base + cell * 10007ULL + rep;
}

/// Table axes: every axis with more than one value, or depth if none.
[[nodiscard]] TableSpec table_spec(const SweepSpec &spec);

/// Runs the Cartesian product of the axes, cells in axis order (depth,
/// ent, scale, t), `seeds_per_cell` runs each. Runs execute on up to
/// `jobs` threads; the returned order never depends on scheduling.
[[nodiscard]] std::vector<RunEntry> run_sweep(const LoadedData &data, const SweepSpec &spec);

} // namespace qnn
