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

#include "qnn/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "qnn/errors.hpp"

namespace qnn {

namespace {

struct Span1D {
    std::size_t first;
    std::vector<double> weights;
};

// Input cells overlapping [i*scale, (i+1)*scale) and their overlap lengths.
std::vector<Span1D> coverage(std::size_t in, std::size_t out) {
    const double scale = static_cast<double>(in) / static_cast<double>(out);
    std::vector<Span1D> spans(out);
    for (std::size_t i = 0; i < out; ++i) {
        const double lo = static_cast<double>(i) * scale;
        const double hi = static_cast<double>(i + 1) * scale;
        const auto first = static_cast<std::size_t>(std::floor(lo));
        const auto last = std::min(in, static_cast<std::size_t>(std::ceil(hi)));
        spans[i].first = first;
        for (std::size_t r = first; r < last; ++r) {
            const double w = std::min(hi, static_cast<double>(r + 1)) -
                             std::max(lo, static_cast<double>(r));
            spans[i].weights.push_back(std::max(0.0, w));
        }
    }
    return spans;
}

} // namespace

std::vector<double> resize_area(std::span<const std::uint8_t> image, std::size_t rows,
                                std::size_t cols, std::size_t out_rows, std::size_t out_cols) {
    if (image.size() != rows * cols) {
        throw std::invalid_argument("image buffer does not match its dimensions");
    }
    if (out_rows == 0 || out_cols == 0 || out_rows > rows || out_cols > cols) {
        throw std::invalid_argument("resize_area only shrinks images");
    }
    const auto rspan = coverage(rows, out_rows);
    const auto cspan = coverage(cols, out_cols);
    const double area = (static_cast<double>(rows) / static_cast<double>(out_rows)) *
                        (static_cast<double>(cols) / static_cast<double>(out_cols));
    std::vector<double> out(out_rows * out_cols, 0.0);
    for (std::size_t i = 0; i < out_rows; ++i) {
        for (std::size_t j = 0; j < out_cols; ++j) {
            double acc = 0.0;
            for (std::size_t a = 0; a < rspan[i].weights.size(); ++a) {
                const std::size_t r = rspan[i].first + a;
                for (std::size_t b = 0; b < cspan[j].weights.size(); ++b) {
                    const std::size_t c = cspan[j].first + b;
                    acc += rspan[i].weights[a] * cspan[j].weights[b] * image[r * cols + c];
                }
            }
            out[i * out_cols + j] = acc / area;
        }
    }
    return out;
}

bool l2_normalize(std::span<double> x) {
    double sq = 0.0;
    for (double v : x) {
        sq += v * v;
    }
    if (sq == 0.0) {
        return false;
    }
    const double n = std::sqrt(sq);
    for (double &v : x) {
        v /= n;
    }
    return true;
}

void standardize(FeatureRows &rows) {
    if (rows.empty()) {
        return;
    }
    const std::size_t d = rows.front().size();
    const auto m = static_cast<double>(rows.size());
    for (std::size_t k = 0; k < d; ++k) {
        double mean = 0.0;
        for (const auto &r : rows) {
            mean += r[k];
        }
        mean /= m;
        double var = 0.0;
        for (const auto &r : rows) {
            var += (r[k] - mean) * (r[k] - mean);
        }
        const double sd = std::sqrt(var / m);
        for (auto &r : rows) {
            r[k] = sd > 0.0 ? (r[k] - mean) / sd : 0.0;
        }
    }
}

TrainTestSplit preprocess_images(const RawImages &raw, const ImageTask &task) {
    if (task.class_a == task.class_b) {
        throw std::invalid_argument("the two classes must differ");
    }
    std::vector<std::size_t> idx[2];
    for (std::size_t i = 0; i < raw.count(); ++i) {
        if (raw.labels[i] == task.class_a) {
            idx[0].push_back(i);
        } else if (raw.labels[i] == task.class_b) {
            idx[1].push_back(i);
        }
    }

    const std::size_t train_quota[2] = {task.num_train - task.num_train / 2, task.num_train / 2};
    const std::size_t test_quota[2] = {task.num_test - task.num_test / 2, task.num_test / 2};

    std::mt19937_64 rng(task.seed);
    std::vector<std::pair<std::size_t, int>> train_pick;
    std::vector<std::pair<std::size_t, int>> test_pick;
    for (int c = 0; c < 2; ++c) {
        const std::size_t need = train_quota[c] + test_quota[c];
        if (idx[c].size() < need) {
            throw DataError("class " + std::to_string(c == 0 ? task.class_a : task.class_b) +
                            " has " + std::to_string(idx[c].size()) + " samples, " +
                            std::to_string(need) + " requested");
        }
        std::shuffle(idx[c].begin(), idx[c].end(), rng);
        for (std::size_t k = 0; k < train_quota[c]; ++k) {
            train_pick.emplace_back(idx[c][k], c);
        }
        for (std::size_t k = 0; k < test_quota[c]; ++k) {
            test_pick.emplace_back(idx[c][train_quota[c] + k], c);
        }
    }
    std::shuffle(train_pick.begin(), train_pick.end(), rng);
    std::shuffle(test_pick.begin(), test_pick.end(), rng);

    DatasetMeta meta;
    meta.seed = task.seed;
    meta.preprocessing = {
        "classes " + std::to_string(task.class_a) + "->(1,0), " + std::to_string(task.class_b) +
            "->(0,1)",
        "resize-area " + std::to_string(raw.rows) + "x" + std::to_string(raw.cols) + "->" +
            std::to_string(task.side) + "x" + std::to_string(task.side),
        "scale 1/255", "l2-normalize", "stratified seeded split"};

    auto build = [&](const std::vector<std::pair<std::size_t, int>> &pick) {
        FeatureRows rows;
        std::vector<OneHot> labels;
        rows.reserve(pick.size());
        for (const auto &[i, c] : pick) {
            std::vector<double> x =
                resize_area(raw.image(i), raw.rows, raw.cols, task.side, task.side);
            for (double &v : x) {
                v /= 255.0;
            }
            if (!l2_normalize(x)) {
                throw DataError("image " + std::to_string(i) + " is blank");
            }
            rows.push_back(std::move(x));
            labels.push_back(one_hot(c));
        }
        return LabeledDataset::from_features(std::move(rows), std::move(labels), meta);
    };
    return {build(train_pick), build(test_pick)};
}

TrainTestSplit stratified_split(const LabeledDataset &data, std::size_t num_train,
                                std::size_t num_test, std::uint64_t seed) {
    std::vector<std::size_t> idx[2];
    for (std::size_t i = 0; i < data.size(); ++i) {
        idx[data.class_of(i)].push_back(i);
    }
    const std::size_t train_quota[2] = {num_train - num_train / 2, num_train / 2};
    const std::size_t test_quota[2] = {num_test - num_test / 2, num_test / 2};
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> train_pick;
    std::vector<std::size_t> test_pick;
    for (int c = 0; c < 2; ++c) {
        const std::size_t need = train_quota[c] + test_quota[c];
        if (idx[c].size() < need) {
            throw DataError("class " + std::to_string(c) + " has " +
                            std::to_string(idx[c].size()) + " samples, " +
                            std::to_string(need) + " requested");
        }
        std::shuffle(idx[c].begin(), idx[c].end(), rng);
        train_pick.insert(train_pick.end(), idx[c].begin(),
                          idx[c].begin() + static_cast<std::ptrdiff_t>(train_quota[c]));
        test_pick.insert(test_pick.end(),
                         idx[c].begin() + static_cast<std::ptrdiff_t>(train_quota[c]),
                         idx[c].begin() + static_cast<std::ptrdiff_t>(need));
    }
    std::shuffle(train_pick.begin(), train_pick.end(), rng);
    std::shuffle(test_pick.begin(), test_pick.end(), rng);
    TrainTestSplit out{data.subset(train_pick), data.subset(test_pick)};
    for (auto *part : {&out.train, &out.test}) {
        part->meta().seed = seed;
        part->meta().preprocessing.push_back("stratified seeded split");
    }
    return out;
}

} // namespace qnn
