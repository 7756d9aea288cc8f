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

#include "mixent/twirl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace mixent {

namespace {

constexpr Complex kI{0.0, 1.0};

Matrix4c product(std::initializer_list<Axis> axes) {
    Matrix4c u = Matrix4c::Identity();
    for (Axis a : axes) u = u * bilateral_rotation(a);
    return u;
}

}  // namespace

std::string_view twirl_kind_name(TwirlKind kind) {
    switch (kind) {
        case TwirlKind::T12: return "T12";
        case TwirlKind::D2: return "D2";
        case TwirlKind::Triple: return "TRIPLE";
        case TwirlKind::Axes: return "AXES";
    }
    return "?";
}

Matrix2c pauli(Axis axis) {
    Matrix2c s;
    switch (axis) {
        case Axis::X: s << 0.0, 1.0, 1.0, 0.0; break;
        case Axis::Y: s << 0.0, -kI, kI, 0.0; break;
        case Axis::Z: s << 1.0, 0.0, 0.0, -1.0; break;
    }
    return s;
}

Matrix2c quarter_turn(Axis axis) {
    return (Matrix2c::Identity() + kI * pauli(axis)) / std::numbers::sqrt2;
}

Matrix4c kron(const Matrix2c &a, const Matrix2c &b) {
    Matrix4c out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return out;
}

Matrix4c bilateral_rotation(Axis axis) {
    const Matrix2c r = quarter_turn(axis);
    return kron(r, r);
}

Matrix4c unilateral_pauli(Axis axis) { return kron(pauli(axis), Matrix2c::Identity()); }

TwirlGroup twirl_group(TwirlKind kind) {
    using enum Axis;
    TwirlGroup g;
    g.kind = kind;
    switch (kind) {
        case TwirlKind::T12:
            g.elements = {
                Matrix4c::Identity(), product({X, X}),       product({Y, Y}),       product({Z, Z}),
                product({X, Y}),      product({Y, Z}),       product({Z, X}),       product({Y, X}),
                product({X, Y, X, Y}), product({Y, Z, Y, Z}), product({Z, X, Z, X}), product({Y, X, Y, X}),
            };
            break;
        case TwirlKind::D2:
            g.elements = {Matrix4c::Identity(), product({X, X}), product({Y, Y}), product({Z, Z})};
            break;
        case TwirlKind::Triple:
            g.elements = {Matrix4c::Identity(), product({X, X, X, Y}), product({X, X, X, Z})};
            break;
        case TwirlKind::Axes:
            g.elements = {bilateral_rotation(X), bilateral_rotation(Y), bilateral_rotation(Z)};
            break;
    }
    return g;
}

DensityMatrix apply_twirl(const DensityMatrix &m, const TwirlGroup &group) {
    const Matrix4c c = to_computational_basis(m).matrix();
    Matrix4c sum = Matrix4c::Zero();
    for (const auto &u : group.elements) sum += u.adjoint() * c * u;
    sum /= static_cast<double>(group.elements.size());
    sum = 0.5 * (sum + sum.adjoint()).eval();
    return DensityMatrix(sum);
}

DensityMatrix modified_twirl(const DensityMatrix &m) {
    static const TwirlGroup t12 = twirl_group(TwirlKind::T12);
    const Matrix4c s = unilateral_pauli(Axis::Y);
    const Matrix4c c = to_computational_basis(m).matrix();
    const Matrix4c flipped = s * c * s.adjoint();
    const Matrix4c twirled = apply_twirl(DensityMatrix(0.5 * (flipped + flipped.adjoint())), t12).matrix();
    Matrix4c out = s * twirled * s.adjoint();
    out = 0.5 * (out + out.adjoint()).eval();
    return DensityMatrix(out);
}

double projective_distance(const Matrix4c &u, const Matrix4c &v) {
    const Complex overlap = (v.adjoint() * u).trace();
    const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0, 0.0);
    return (u - phase * v).norm();
}

double closure_defect(const TwirlGroup &group) {
    double worst = 0.0;
    for (const auto &a : group.elements) {
        for (const auto &b : group.elements) {
            const Matrix4c ab = a * b;
            double best = std::numeric_limits<double>::infinity();
            for (const auto &c : group.elements) best = std::min(best, projective_distance(ab, c));
            worst = std::max(worst, best);
        }
    }
    return worst;
}

double unitarity_defect(const TwirlGroup &group) {
    double worst = 0.0;
    for (const auto &u : group.elements) {
        worst = std::max(worst, (u.adjoint() * u - Matrix4c::Identity()).norm());
    }
    return worst;
}

}  // namespace mixent
