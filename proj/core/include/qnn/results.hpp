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
 * @file results.hpp
 * CSV emission for training runs and aggregated result tables.
 *
 * runs.csv is long-form, one row per evaluation snapshot:
 *   dataset,encoding,ent_kind,depth,scale,t_evo,seed,iter,
 *   train_acc,train_loss,test_acc,test_loss
 *
 * summary_<table>.csv has one row per table cell, in axis-product order.
 * Numbers use the shortest round-trip decimal form, so equal inputs give
 * byte-identical files.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "qnn/trainer.hpp"

namespace qnn {

struct RunKey {
    std::string dataset;
    std::string encoding; // "amplitude" | "block"
    std::string ent_kind; // "cz" | "cx" | "cx2" | "analog"
    int depth{1};
    double scale{0.0};
    double t_evo{0.0};
    std::uint64_t seed{0};
};

struct RunEntry {
    RunKey key;
    RunRecord record;
};

enum class Axis { Depth, EntKind, Scale, TEvo };

[[nodiscard]] std::string_view axis_name(Axis a);

struct AxisValues {
    Axis axis;
    /// Formatted values, matched against the formatted RunKey field.
    std::vector<std::string> values;
};

struct TableSpec {
    std::string name;
    std::vector<AxisValues> axes;
};

struct SummaryCell {
    std::vector<std::string> coordinates;
    std::vector<std::uint64_t> seeds; // contributing runs, failures included
    std::size_t failed{0};
    double mean_test_acc{0.0};
    double std_test_acc{0.0}; // sample standard deviation over successful runs
    double mean_train_acc{0.0};
};

/// Shortest round-trip decimal representation.
[[nodiscard]] std::string format_number(double v);

/// The key field that `axis` selects, formatted.
[[nodiscard]] std::string key_coordinate(const RunKey &key, Axis axis);

/// Aggregates final-snapshot accuracies per cell. Throws DataError listing
/// every cell that has no runs at all.
[[nodiscard]] std::vector<SummaryCell> summarize(std::span<const RunEntry> runs,
                                                 const TableSpec &spec);

[[nodiscard]] std::string runs_csv(std::span<const RunEntry> runs);
[[nodiscard]] std::string summary_csv(std::span<const RunEntry> runs, const TableSpec &spec);

/// Writes runs.csv and summary_<spec.name>.csv under out_dir.
void emit_results(std::span<const RunEntry> runs, const TableSpec &spec,
                  const std::filesystem::path &out_dir);

void write_text(const std::filesystem::path &path, const std::string &text);

} // namespace qnn
