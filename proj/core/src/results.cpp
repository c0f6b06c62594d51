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

#include "qnn/results.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qnn/errors.hpp"

namespace qnn {

std::string_view axis_name(Axis a) {
    switch (a) {
    case Axis::Depth: return "depth";
    case Axis::EntKind: return "ent_kind";
    case Axis::Scale: return "scale";
    case Axis::TEvo: return "t_evo";
    }
    return "?";
}

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string key_coordinate(const RunKey &key, Axis axis) {
    switch (axis) {
    case Axis::Depth: return std::to_string(key.depth);
    case Axis::EntKind: return key.ent_kind;
    case Axis::Scale: return format_number(key.scale);
    case Axis::TEvo: return format_number(key.t_evo);
    }
    return {};
}

std::vector<SummaryCell> summarize(std::span<const RunEntry> runs, const TableSpec &spec) {
    if (spec.axes.empty()) {
        throw std::invalid_argument("result table needs at least one axis");
    }
    std::size_t cells = 1;
    for (const auto &a : spec.axes) {
        if (a.values.empty()) {
            throw std::invalid_argument("axis " + std::string(axis_name(a.axis)) + " is empty");
        }
        cells *= a.values.size();
    }

    std::vector<SummaryCell> out(cells);
    std::string missing;
    for (std::size_t c = 0; c < cells; ++c) {
        // last axis varies fastest
        std::size_t rem = c;
        std::vector<std::string> coord(spec.axes.size());
        for (std::size_t a = spec.axes.size(); a-- > 0;) {
            const auto &vals = spec.axes[a].values;
            coord[a] = vals[rem % vals.size()];
            rem /= vals.size();
        }
        SummaryCell &cell = out[c];
        cell.coordinates = coord;
        double sum = 0.0;
        double sum_train = 0.0;
        std::vector<double> accs;
        for (const auto &run : runs) {
            bool match = true;
            for (std::size_t a = 0; a < spec.axes.size() && match; ++a) {
                match = key_coordinate(run.key, spec.axes[a].axis) == coord[a];
            }
            if (!match) {
                continue;
            }
            cell.seeds.push_back(run.key.seed);
            if (run.record.failed || run.record.curve.empty()) {
                ++cell.failed;
                continue;
            }
            const auto &fp = run.record.final_point();
            accs.push_back(fp.test_acc);
            sum += fp.test_acc;
            sum_train += fp.train_acc;
        }
        if (cell.seeds.empty()) {
            std::string label;
            for (std::size_t a = 0; a < coord.size(); ++a) {
                label += (a ? "," : "") + std::string(axis_name(spec.axes[a].axis)) + "=" + coord[a];
            }
            missing += " [" + label + "]";
            continue;
        }
        if (!accs.empty()) {
            const auto k = static_cast<double>(accs.size());
            cell.mean_test_acc = sum / k;
            cell.mean_train_acc = sum_train / k;
            if (accs.size() > 1) {
                double var = 0.0;
                for (double x : accs) {
                    var += (x - cell.mean_test_acc) * (x - cell.mean_test_acc);
                }
                cell.std_test_acc = std::sqrt(var / (k - 1.0));
            }
        }
    }
    if (!missing.empty()) {
        throw DataError("result table '" + spec.name + "' has cells without runs:" + missing);
    }
    return out;
}

std::string runs_csv(std::span<const RunEntry> runs) {
    std::ostringstream s;
    s << "dataset,encoding,ent_kind,depth,scale,t_evo,seed,iter,train_acc,train_loss,test_acc,"
         "test_loss\n";
    for (const auto &run : runs) {
        const auto &k = run.key;
        for (const auto &p : run.record.curve) {
            s << k.dataset << ',' << k.encoding << ',' << k.ent_kind << ',' << k.depth << ','
              << format_number(k.scale) << ',' << format_number(k.t_evo) << ',' << k.seed << ','
              << p.iteration << ',' << format_number(p.train_acc) << ','
              << format_number(p.train_loss) << ',' << format_number(p.test_acc) << ','
              << format_number(p.test_loss) << '\n';
        }
    }
    return s.str();
}

std::string summary_csv(std::span<const RunEntry> runs, const TableSpec &spec) {
    const auto cells = summarize(runs, spec);
    std::ostringstream s;
    s << "table";
    for (const auto &a : spec.axes) {
        s << ',' << axis_name(a.axis);
    }
    s << ",runs,failed,mean_test_acc,std_test_acc,mean_train_acc,seeds,status\n";
    for (const auto &c : cells) {
        s << spec.name;
        for (const auto &v : c.coordinates) {
            s << ',' << v;
        }
        s << ',' << c.seeds.size() << ',' << c.failed << ',' << format_number(c.mean_test_acc)
          << ',' << format_number(c.std_test_acc) << ',' << format_number(c.mean_train_acc)
          << ',';
        for (std::size_t i = 0; i < c.seeds.size(); ++i) {
            s << (i ? ";" : "") << c.seeds[i];
        }
        const char *status = c.failed == 0                ? "ok"
                             : c.failed == c.seeds.size() ? "failed"
                                                          : "partial";
        s << ',' << status << '\n';
    }
    return s.str();
}

void write_text(const std::filesystem::path &path, const std::string &text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot write " + path.string());
    }
    out << text;
}

void emit_results(std::span<const RunEntry> runs, const TableSpec &spec,
                  const std::filesystem::path &out_dir) {
    // build the summary first so a missing cell leaves no partial output
    const std::string summary = summary_csv(runs, spec);
    write_text(out_dir / "runs.csv", runs_csv(runs));
    write_text(out_dir / ("summary_" + spec.name + ".csv"), summary);
}

} // namespace qnn
