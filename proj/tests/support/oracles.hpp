// Copyright 2026 The mixent Authors
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

// Reference data and random generators shared by the unit and acceptance
// tests. The gate tables here are typed in by Bell state name,
// independently of the two-bit encoding used by the library.

#pragma once

#include <array>
#include <cmath>
#include <map>
#include <random>
#include <string>
#include <utility>

#include "mixent/bell.hpp"
#include "mixent/density.hpp"
#include "mixent/protocols.hpp"

namespace mixent::testing {

inline BellIndex by_name(const std::string &name) {
    static const std::map<std::string, BellIndex> names = {
        {"Phi+", BellIndex(0, 0)}, {"Psi+", BellIndex(0, 1)}, {"Phi-", BellIndex(1, 0)}, {"Psi-", BellIndex(1, 1)}};
    return names.at(name);
}

// Column order of every table below.
inline const std::array<std::string, 4> kColumns = {"Psi-", "Phi-", "Phi+", "Psi+"};

// Row label -> images of the four columns.
inline const std::map<std::string, std::array<std::string, 4>> kSingleTable = {
    {"SX", {"Phi-", "Psi-", "Psi+", "Phi+"}},
    {"SY", {"Phi+", "Psi+", "Psi-", "Phi-"}},
    {"SZ", {"Psi+", "Phi+", "Phi-", "Psi-"}},
    {"BX", {"Psi-", "Phi-", "Psi+", "Phi+"}},
    {"BY", {"Psi-", "Psi+", "Phi+", "Phi-"}},
    {"BZ", {"Psi-", "Phi+", "Phi-", "Psi+"}},
};

// Target -> for each source column: (source after, target after).
inline const std::map<std::string, std::array<std::pair<std::string, std::string>, 4>> kBxorTable = {
    {"Psi-", {{{"Psi+", "Phi-"}, {"Phi+", "Psi-"}, {"Phi-", "Psi-"}, {"Psi-", "Phi-"}}}},
    {"Phi-", {{{"Psi+", "Psi-"}, {"Phi+", "Phi-"}, {"Phi-", "Phi-"}, {"Psi-", "Psi-"}}}},
    {"Phi+", {{{"Psi-", "Psi+"}, {"Phi-", "Phi+"}, {"Phi+", "Phi+"}, {"Psi+", "Psi+"}}}},
    {"Psi+", {{{"Psi-", "Phi+"}, {"Phi-", "Psi+"}, {"Phi+", "Psi+"}, {"Psi+", "Phi+"}}}},
};

inline std::pair<BellIndex, BellIndex> bxor_by_table(BellIndex source, BellIndex target) {
    for (const auto &[tname, row] : kBxorTable) {
        if (by_name(tname) != target) continue;
        for (std::size_t c = 0; c < 4; ++c) {
            if (by_name(kColumns[c]) == source) return {by_name(row[c].first), by_name(row[c].second)};
        }
    }
    throw std::logic_error("incomplete BXOR table");
}

// Sixteen source/target rows: BXOR by the typed-in table, keep the source
// when the target comes out Phi-type.
inline RecurrenceStep recurrence_by_enumeration(const BellDiagonal &p) {
    std::array<double, 4> kept{};
    double pass = 0.0;
    for (std::uint8_t s = 0; s < 4; ++s) {
        for (std::uint8_t t = 0; t < 4; ++t) {
            const double weight = p.at(s) * p.at(t);
            const auto [src, tgt] = bxor_by_table(BellIndex(s), BellIndex(t));
            if (tgt.amplitude() != 0) continue;
            kept[src.bits()] += weight;
            pass += weight;
        }
    }
    for (double &x : kept) x /= pass;
    return {BellDiagonal(kept), pass};
}

inline Matrix4c random_density(std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix4c a;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) a(i, j) = Complex(g(rng), g(rng));
    }
    Matrix4c m = a * a.adjoint();
    m /= m.trace().real();
    return 0.5 * (m + m.adjoint());
}

inline Vector4c random_pure(std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vector4c v;
    for (int i = 0; i < 4; ++i) v(i) = Complex(g(rng), g(rng));
    return v / v.norm();
}

inline BellDiagonal random_bell_diagonal(std::mt19937_64 &rng) {
    std::exponential_distribution<double> e(1.0);
    std::array<double, 4> p{};
    double sum = 0.0;
    for (double &x : p) sum += (x = e(rng));
    for (double &x : p) x /= sum;
    p[3] = 1.0 - p[0] - p[1] - p[2];
    if (p[3] < 0.0) p[3] = 0.0;
    return BellDiagonal(p);
}

}  // namespace mixent::testing
