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

// Discrete twirls: averages of bilateral rotations U (x) U over finite sets.
//
// The bilateral quarter turn about axis k is B_k = R_k (x) R_k with
// R_k = (I + i sigma_k) / sqrt(2).  With this sign B_x sends Phi+ to i Psi+,
// B_y sends Phi- to -Psi+ and B_z sends Phi- to i Phi+, and every rotation
// fixes Psi-.

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "mixent/density.hpp"

namespace mixent {

enum class Axis { X, Y, Z };

enum class TwirlKind {
    T12,     // tetrahedral, 12 elements; output is a Werner state around Psi-
    D2,      // {I, BxBx, ByBy, BzBz}; output is Bell-diagonal
    Triple,  // {I, BxBxBxBy, BxBxBxBz}
    Axes,    // {Bx, By, Bz}
};

std::string_view twirl_kind_name(TwirlKind kind);

struct TwirlGroup {
    TwirlKind kind = TwirlKind::T12;
    std::vector<Matrix4c> elements;
};

Matrix2c pauli(Axis axis);

/// (I + i sigma) / sqrt(2).
Matrix2c quarter_turn(Axis axis);

/// A (x) B with Alice's factor on the most significant qubit.
Matrix4c kron(const Matrix2c &a, const Matrix2c &b);

Matrix4c bilateral_rotation(Axis axis);

/// sigma on Alice's qubit only.
Matrix4c unilateral_pauli(Axis axis);

TwirlGroup twirl_group(TwirlKind kind);

/// (1/N) sum_i U_i^dagger M U_i, returned in the computational basis.
DensityMatrix apply_twirl(const DensityMatrix &m, const TwirlGroup &group);

/// Unilateral sigma_y, T12 twirl, unilateral sigma_y: keeps Phi+ and
/// equalizes the other three Bell weights.
DensityMatrix modified_twirl(const DensityMatrix &m);

/// min over phi of ||U - exp(i phi) V||_F.
double projective_distance(const Matrix4c &u, const Matrix4c &v);

/// Largest projective distance from a product U_i U_j to its nearest group
/// element, over all ordered pairs.
double closure_defect(const TwirlGroup &group);

/// Largest ||U^dagger U - I|| over the elements.
double unitarity_defect(const TwirlGroup &group);

}  // namespace mixent
