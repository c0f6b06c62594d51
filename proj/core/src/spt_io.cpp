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

#include "qnn/spt_io.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "qnn/errors.hpp"

namespace qnn {

namespace {

void put_le64(std::ostream &out, double d) {
    const auto u = std::bit_cast<std::uint64_t>(d);
    char b[8];
    for (int i = 0; i < 8; ++i) {
        b[i] = static_cast<char>((u >> (8 * i)) & 0xFF);
    }
    out.write(b, 8);
}

double get_le64(const unsigned char *p) {
    std::uint64_t u = 0;
    for (int i = 0; i < 8; ++i) {
        u |= std::uint64_t{p[i]} << (8 * i);
    }
    return std::bit_cast<double>(u);
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string one_line(const std::string &s) {
    std::string out = s;
    for (char &c : out) {
        if (c == '\n' || c == '\r') {
            c = ' ';
        }
    }
    return out;
}

} // namespace

void save_spt(const std::filesystem::path &path, const LabeledDataset &data) {
    if (!data.holds_states()) {
        throw std::invalid_argument("SPT files store quantum states");
    }
    const auto &meta = data.meta();
    if (meta.lambdas.size() != data.size() || meta.spectral_gaps.size() != data.size()) {
        throw std::invalid_argument("every stored state needs its lambda and spectral gap");
    }
    const int n = data.empty() ? 0 : data.state(0).num_qubits();
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot write " + path.string());
    }
    out << kSptMagic << '\n'
        << "num_sites " << n << '\n'
        << "count " << data.size() << '\n'
        << "label_rule " << one_line(meta.label_rule) << '\n'
        << "source " << one_line(meta.source) << '\n';
    for (std::size_t i = 0; i < data.size(); ++i) {
        out << "sample " << fmt17(meta.lambdas[i]) << ' ' << fmt17(meta.spectral_gaps[i]) << ' '
            << data.class_of(i) << '\n';
    }
    out << "end_header\n";
    for (const auto &s : data.states()) {
        for (const auto &a : s.amplitudes()) {
            put_le64(out, a.real());
            put_le64(out, a.imag());
        }
    }
    if (!out) {
        throw DataError("write to " + path.string() + " failed");
    }
}

LabeledDataset load_spt(const std::filesystem::path &path, std::optional<int> expected_sites) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot open " + path.string());
    }
    auto fail = [&](const std::string &why) {
        return DataError(path.string() + ": " + why);
    };
    auto next_line = [&](std::string &line) {
        if (!std::getline(in, line)) {
            throw fail("truncated header");
        }
    };

    std::string line;
    next_line(line);
    if (line != kSptMagic) {
        throw fail("bad magic '" + line.substr(0, 16) + "', expected " + kSptMagic);
    }
    auto keyed = [&](const char *key) {
        next_line(line);
        const std::string k = std::string(key) + " ";
        if (line.rfind(k, 0) != 0) {
            throw fail(std::string("expected '") + key + "' line");
        }
        return line.substr(k.size());
    };
    const int n = std::stoi(keyed("num_sites"));
    const std::size_t count = std::stoull(keyed("count"));
    if (n < 1 || n > kMaxQubits) {
        throw fail("site count " + std::to_string(n) + " out of range");
    }
    if (expected_sites && *expected_sites != n) {
        throw fail("file holds " + std::to_string(n) + "-site states, expected " +
                   std::to_string(*expected_sites));
    }
    DatasetMeta meta;
    meta.label_rule = keyed("label_rule");
    meta.source = keyed("source");
    std::vector<OneHot> labels;
    for (std::size_t i = 0; i < count; ++i) {
        std::istringstream fields(keyed("sample"));
        double lambda = 0.0;
        double gap = 0.0;
        int cls = -1;
        if (!(fields >> lambda >> gap >> cls) || (cls != 0 && cls != 1)) {
            throw fail("malformed sample line " + std::to_string(i));
        }
        meta.lambdas.push_back(lambda);
        meta.spectral_gaps.push_back(gap);
        labels.push_back(one_hot(cls));
    }
    next_line(line);
    if (line != "end_header") {
        throw fail("missing end_header");
    }

    const std::size_t dim = std::size_t{1} << n;
    const std::size_t bytes = count * dim * 16;
    std::vector<unsigned char> payload(bytes);
    in.read(reinterpret_cast<char *>(payload.data()), static_cast<std::streamsize>(bytes));
    const auto got = static_cast<std::size_t>(in.gcount());
    if (got != bytes) {
        throw fail("truncated amplitudes: expected " + std::to_string(bytes) + " bytes, found " +
                   std::to_string(got));
    }
    if (in.peek() != std::char_traits<char>::eof()) {
        throw fail("trailing bytes after amplitudes");
    }

    std::vector<StateVector> states;
    states.reserve(count);
    std::vector<Complex> amps(dim);
    for (std::size_t s = 0; s < count; ++s) {
        const unsigned char *p = payload.data() + s * dim * 16;
        for (std::size_t i = 0; i < dim; ++i) {
            amps[i] = Complex(get_le64(p + 16 * i), get_le64(p + 16 * i + 8));
        }
        states.push_back(StateVector::from_amplitudes(amps, n));
    }
    return LabeledDataset::from_states(std::move(states), std::move(labels), std::move(meta));
}

} // namespace qnn
