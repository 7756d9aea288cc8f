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

#include "mixent/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "mixent/csv.hpp"
#include "mixent/error.hpp"
#include "mixent/hashing.hpp"
#include "mixent/twirl.hpp"

namespace mixent {

DepolarizingChannel::DepolarizingChannel(double p) : p_(p) {
    detail::require(p >= 0.0 && p <= 1.0, "depolarizing probability must lie in [0, 1]");
}

PauliChannel to_pauli_channel(const DepolarizingChannel &c) {
    const double q = c.p() / 4.0;
    return {1.0 - 3.0 * q, q, q, q};
}

BellDiagonal channel_to_state(const DepolarizingChannel &c) { return werner(1.0 - 0.75 * c.p()); }

BellDiagonal channel_to_state(const PauliChannel &c) { return BellDiagonal(c.identity, c.x, c.z, c.y); }

PauliChannel state_to_channel(const BellDiagonal &w) { return {w.at(0b00), w.at(0b01), w.at(0b11), w.at(0b10)}; }

DensityMatrix share_through(const PauliChannel &c) {
    const Vector4c phi = bell_vector(kPhiPlus);
    const double weights[] = {c.identity, c.x, c.y, c.z};
    const Matrix2c ops[] = {Matrix2c::Identity(), pauli(Axis::X), pauli(Axis::Y), pauli(Axis::Z)};
    Matrix4c m = Matrix4c::Zero();
    for (int k = 0; k < 4; ++k) {
        const Vector4c v = kron(Matrix2c::Identity(), ops[k]) * phi;
        m += weights[k] * (v * v.adjoint());
    }
    return DensityMatrix(m);
}

double kl_upper_bound(double f) { return std::min(1.0, std::max(0.0, 4.0 * f - 3.0)); }

CombinedYield combined_yield_detail(double f, RecurrenceVariant variant) {
    if (!(f > 0.5)) return {};
    detail::require(f <= 1.0, "fidelity must not exceed 1");
    const BellDiagonal start = werner(f);
    CombinedYield best{hashing_yield(start), 0};
    const RecurrenceTrace trace =
        recurrence_iterate(start, variant, StopRule{std::numeric_limits<double>::infinity(), kMaxRecurrenceSteps});
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const double y = trace.steps[k].fraction_remaining * hashing_yield(trace.steps[k].p);
        if (y > best.yield) best = {y, k + 1};
    }
    return best;
}

double combined_yield(double f, RecurrenceVariant variant) { return combined_yield_detail(f, variant).yield; }

CurvePoint curve_point(double f) {
    const BellDiagonal w = werner(f);
    CurvePoint p;
    p.F = f;
    p.E_formation = eof_bell_diagonal(w);
    p.D_hash = hashing_yield(w);
    p.D_recur_hash = combined_yield(f, RecurrenceVariant::WernerTwirl);
    p.D_macch_hash = combined_yield(f, RecurrenceVariant::Macchiavello);
    p.KL_upper = kl_upper_bound(f);
    return p;
}

std::vector<CurvePoint> emit_curves(const std::vector<double> &grid) {
    std::vector<CurvePoint> out;
    out.reserve(grid.size());
    for (double f : grid) out.push_back(curve_point(f));
    return out;
}

std::vector<double> linear_grid(double fmin, double fmax, std::size_t points) {
    detail::require(points >= 1, "grid needs at least one point");
    detail::require(fmin <= fmax, "grid needs fmin <= fmax");
    if (points == 1) return {fmin};
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i) {
        grid[i] = fmin + (fmax - fmin) * static_cast<double>(i) / static_cast<double>(points - 1);
    }
    grid.back() = fmax;
    return grid;
}

std::vector<double> log_grid(double fmin, double fmax, std::size_t points) {
    detail::require(fmin > 0.5, "log grid needs fmin > 1/2");
    const std::vector<double> exponents = linear_grid(std::log10(fmin - 0.5), std::log10(fmax - 0.5), points);
    std::vector<double> grid;
    grid.reserve(points);
    for (double e : exponents) grid.push_back(0.5 + std::pow(10.0, e));
    grid.front() = fmin;
    grid.back() = fmax;
    return grid;
}

void write_curves_csv(std::ostream &out, const std::vector<CurvePoint> &points, bool log_x) {
    if (log_x) out << "log10_F_minus_half,";
    out << "F,E_formation,D_hash,D_recur_hash,D_macch_hash,KL_upper\n";
    for (const auto &p : points) {
        if (log_x) out << csv_number(std::log10(p.F - 0.5)) << ',';
        out << csv_number(p.F) << ',' << csv_number(p.E_formation) << ',' << csv_number(p.D_hash) << ','
            << csv_number(p.D_recur_hash) << ',' << csv_number(p.D_macch_hash) << ',' << csv_number(p.KL_upper)
            << '\n';
    }
}

}  // namespace mixent
