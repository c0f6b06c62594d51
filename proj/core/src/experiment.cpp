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

#include "qnn/experiment.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <thread>

#include "qnn/errors.hpp"
#include "qnn/idx.hpp"
#include "qnn/spin_models.hpp"
#include "qnn/spt_io.hpp"

namespace qnn {

namespace {

RawImages load_image_dir(const std::filesystem::path &dir) {
    const auto images = dir / "train-images-idx3-ubyte";
    const auto labels = dir / "train-labels-idx1-ubyte";
    if (!std::filesystem::exists(images) || !std::filesystem::exists(labels)) {
        throw DataError("no IDX files in " + dir.string() +
                        " (set --data-dir or QNN_DATA_DIR; tools/fetch_datasets.py builds them)");
    }
    RawImages raw = load_idx_images(images, labels);
    const auto t_images = dir / "t10k-images-idx3-ubyte";
    const auto t_labels = dir / "t10k-labels-idx1-ubyte";
    if (std::filesystem::exists(t_images) && std::filesystem::exists(t_labels)) {
        append_images(raw, load_idx_images(t_images, t_labels));
    }
    return raw;
}

LoadedData image_task(const DataSelection &sel, const std::string &sub, int class_a,
                      int class_b) {
    const RawImages raw = load_image_dir(sel.data_dir / sub);
    ImageTask task;
    task.class_a = class_a;
    task.class_b = class_b;
    task.num_train = sel.num_train;
    task.num_test = sel.num_test;
    task.seed = sel.seed;
    LoadedData out{sel.selector, preprocess_images(raw, task), kImageQubits};
    for (auto *part : {&out.split.train, &out.split.test}) {
        part->meta().source = sub;
    }
    return out;
}

LoadedData spt_task(const DataSelection &sel, const LabeledDataset &all) {
    LoadedData out;
    out.name = sel.selector;
    out.num_qubits = all.state(0).num_qubits();
    out.split = stratified_split(all, sel.num_train, sel.num_test, sel.seed);
    return out;
}

} // namespace

std::filesystem::path default_data_dir() {
    if (const char *env = std::getenv("QNN_DATA_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    return "data";
}

LoadedData load_data(const DataSelection &sel) {
    const std::string &s = sel.selector;
    if (s == "mnist") {
        return image_task(sel, "mnist", 1, 9);
    }
    if (s == "fashion") {
        return image_task(sel, "fashion", 0, 9);
    }
    if (s == "spt8" || s == "spt10") {
        const int n = s == "spt8" ? 8 : 10;
        const auto cache = sel.data_dir / (s + ".qnnspt");
        if (std::filesystem::exists(cache)) {
            return spt_task(sel, load_spt(cache, n));
        }
        LabeledDataset all = make_spt_dataset(n, LambdaGrid{}, sel.jobs);
        std::error_code ec;
        std::filesystem::create_directories(sel.data_dir, ec);
        if (!ec) {
            save_spt(cache, all);
        }
        return spt_task(sel, all);
    }
    if (s.rfind("spt:", 0) == 0) {
        const LabeledDataset all = load_spt(s.substr(4));
        if (all.empty()) {
            throw DataError(s.substr(4) + " holds no states");
        }
        return spt_task(sel, all);
    }
    throw std::invalid_argument("unknown dataset '" + s +
                                "' (expected mnist, fashion, spt8, spt10 or spt:<path>)");
}

EncodingMode parse_encoding_mode(std::string_view name) {
    if (name == "amplitude") {
        return EncodingMode::Amplitude;
    }
    if (name == "block") {
        return EncodingMode::Block;
    }
    throw std::invalid_argument("unknown encoding '" + std::string(name) + "'");
}

std::string_view encoding_mode_name(EncodingMode mode) {
    return mode == EncodingMode::Amplitude ? "amplitude" : "block";
}

Hypothesis build_hypothesis(const ModelSpec &model, int num_qubits) {
    Entangler ent = Entangler::digital(LayerKind::EntCX);
    if (model.ent == LayerKind::Analog) {
        ent = Entangler::analog(
            HamiltonianSpec::aubry_andre(num_qubits, model.aa_g, model.aa_v, model.aa_phi),
            model.t_evo);
    } else {
        ent = Entangler::digital(model.ent);
    }
    CircuitTemplate circuit = build_classifier(num_qubits, model.depth, ent);
    const int measured = model.measured_qubit.value_or(default_measured_qubit(num_qubits));
    if (model.encoding == EncodingMode::Amplitude) {
        return Hypothesis(std::move(circuit), AmplitudeEncoding{num_qubits}, measured);
    }
    const std::size_t slots = circuit.num_params();
    return Hypothesis(std::move(circuit), BlockEncoding{model.scale, slots}, measured);
}

RunKey make_key(const std::string &dataset, const ModelSpec &model, std::uint64_t seed) {
    RunKey key;
    key.dataset = dataset;
    key.encoding = std::string(encoding_mode_name(model.encoding));
    key.ent_kind = std::string(entangler_kind_name(model.ent));
    key.depth = model.depth;
    key.scale = model.encoding == EncodingMode::Block ? model.scale : 0.0;
    key.t_evo = model.ent == LayerKind::Analog ? model.t_evo : 0.0;
    key.seed = seed;
    return key;
}

RunEntry run_one(const LoadedData &data, const ModelSpec &model, TrainConfig cfg) {
    if (model.encoding == EncodingMode::Block && data.split.train.holds_states()) {
        throw std::invalid_argument("block encoding needs classical features; " + data.name +
                                    " holds quantum states");
    }
    const Hypothesis h = build_hypothesis(model, data.num_qubits);
    RunEntry out{make_key(data.name, model, cfg.seed), {}};
    out.record = train(h, data.split.train, data.split.test, cfg);
    return out;
}

void validate_sweep(const SweepSpec &spec) {
    if (spec.depths.empty() || spec.ents.empty() || spec.scales.empty() || spec.t_evos.empty()) {
        throw std::invalid_argument("every sweep axis needs at least one value");
    }
    if (spec.seeds_per_cell == 0) {
        throw std::invalid_argument("a sweep needs at least one seed per cell");
    }
    if (spec.t_evos.size() > 1) {
        for (LayerKind k : spec.ents) {
            if (k != LayerKind::Analog) {
                throw std::invalid_argument(
                    "several evolution times only apply to analog entanglers");
            }
        }
    }
    if (spec.scales.size() > 1 && spec.base.encoding == EncodingMode::Amplitude) {
        throw std::invalid_argument("a scale axis only applies to block encoding");
    }
}

TableSpec table_spec(const SweepSpec &spec) {
    TableSpec t;
    t.name = spec.table;
    auto add = [&](Axis axis, auto values, auto fmt) {
        if (values.size() > 1) {
            AxisValues av{axis, {}};
            for (const auto &v : values) {
                av.values.push_back(fmt(v));
            }
            t.axes.push_back(std::move(av));
        }
    };
    add(Axis::Depth, spec.depths, [](int d) { return std::to_string(d); });
    add(Axis::EntKind, spec.ents,
        [](LayerKind k) { return std::string(entangler_kind_name(k)); });
    add(Axis::Scale, spec.scales, [](double c) { return format_number(c); });
    add(Axis::TEvo, spec.t_evos, [](double x) { return format_number(x); });
    if (t.axes.empty()) {
        t.axes.push_back({Axis::Depth, {std::to_string(spec.depths.front())}});
    }
    return t;
}

std::vector<RunEntry> run_sweep(const LoadedData &data, const SweepSpec &spec) {
    validate_sweep(spec);
    struct Job {
        ModelSpec model;
        TrainConfig cfg;
    };
    std::vector<Job> jobs;
    std::size_t cell = 0;
    for (int depth : spec.depths) {
        for (LayerKind ent : spec.ents) {
            for (double scale : spec.scales) {
                for (double t : spec.t_evos) {
                    ModelSpec m = spec.base;
                    m.depth = depth;
                    m.ent = ent;
                    m.scale = scale;
                    m.t_evo = t;
                    for (std::size_t rep = 0; rep < spec.seeds_per_cell; ++rep) {
                        TrainConfig cfg = spec.train;
                        cfg.seed = cell_seed(spec.seed_base, cell, rep);
                        jobs.push_back({m, cfg});
                    }
                    ++cell;
                }
            }
        }
    }

    std::vector<RunEntry> out(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            const Job &j = jobs[i];
            try {
                out[i] = run_one(data, j.model, j.cfg);
            } catch (const std::exception &e) {
                // a broken cell is recorded and the sweep moves on
                out[i].key = make_key(data.name, j.model, j.cfg.seed);
                out[i].record.config = j.cfg;
                out[i].record.failed = true;
                out[i].record.failure = e.what();
            }
        }
    };
    const int n_threads = std::max(1, std::min<int>(spec.jobs, static_cast<int>(jobs.size())));
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int k = 0; k < n_threads; ++k) {
            pool.emplace_back(worker);
        }
    }
    return out;
}

} // namespace qnn
