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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace mixent {
namespace {

constexpr Complex kI{0.0, 1.0};

Matrix4c werner_around_singlet(double f) {
    const Vector4c s = bell_vector(kPsiMinus);
    const Matrix4c ps = s * s.adjoint();
    return f * ps + (1.0 - f) / 3.0 * (Matrix4c::Identity() - ps);
}

double bell_offdiagonal(const Matrix4c &b) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i != j) worst = std::max(worst, std::abs(b(i, j)));
        }
    }
    return worst;
}

TEST(TwirlGroup, SizesAndUnitarity) {
    EXPECT_EQ(twirl_group(TwirlKind::T12).elements.size(), 12u);
    EXPECT_EQ(twirl_group(TwirlKind::D2).elements.size(), 4u);
    EXPECT_EQ(twirl_group(TwirlKind::Triple).elements.size(), 3u);
    EXPECT_EQ(twirl_group(TwirlKind::Axes).elements.size(), 3u);
    for (TwirlKind k : {TwirlKind::T12, TwirlKind::D2, TwirlKind::Triple, TwirlKind::Axes}) {
        EXPECT_LT(unitarity_defect(twirl_group(k)), 1e-12) << twirl_kind_name(k);
    }
}

TEST(TwirlGroup, ElementsAreBilateral) {
    // U (x) U commutes with the swap of the two qubits.
    Matrix4c swap = Matrix4c::Zero();
    swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
    for (const auto &u : twirl_group(TwirlKind::T12).elements) {
        EXPECT_LT((swap * u * swap - u).norm(), 1e-12);
    }
}

TEST(BilateralRotation, PhasedTable) {
    struct Entry {
        Axis axis;
        BellIndex from;
        Complex factor;
        BellIndex to;
    };
    const Entry table[] = {
        {Axis::X, kPsiMinus, 1.0, kPsiMinus}, {Axis::X, kPhiMinus, 1.0, kPhiMinus},
        {Axis::X, kPhiPlus, kI, kPsiPlus},    {Axis::X, kPsiPlus, kI, kPhiPlus},
        {Axis::Y, kPsiMinus, 1.0, kPsiMinus}, {Axis::Y, kPhiMinus, -1.0, kPsiPlus},
        {Axis::Y, kPhiPlus, 1.0, kPhiPlus},   {Axis::Y, kPsiPlus, 1.0, kPhiMinus},
        {Axis::Z, kPsiMinus, 1.0, kPsiMinus}, {Axis::Z, kPhiMinus, kI, kPhiPlus},
        {Axis::Z, kPhiPlus, kI, kPhiMinus},   {Axis::Z, kPsiPlus, 1.0, kPsiPlus},
    };
    for (const auto &e : table) {
        const Vector4c got = bilateral_rotation(e.axis) * bell_vector(e.from);
        EXPECT_LT((got - e.factor * bell_vector(e.to)).norm(), 1e-14) << e.from.name();
    }
}

TEST(TwirlGroup, D2Elements) {
    const TwirlGroup d2 = twirl_group(TwirlKind::D2);
    EXPECT_LT(projective_distance(d2.elements[0], Matrix4c::Identity()), 1e-14);
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
        const Matrix4c bb = bilateral_rotation(a) * bilateral_rotation(a);
        // A bilateral half turn is sigma (x) sigma.
        EXPECT_LT(projective_distance(bb, kron(pauli(a), pauli(a))), 1e-12);
    }
}

TEST(TwirlGroup, ProjectiveClosure) {
    EXPECT_LT(closure_defect(twirl_group(TwirlKind::T12)), 1e-10);
    EXPECT_LT(closure_defect(twirl_group(TwirlKind::D2)), 1e-10);
}

TEST(ApplyTwirl, SingletIsInvariant) {
    const DensityMatrix s = DensityMatrix::projector(bell_vector(kPsiMinus));
    EXPECT_LT((apply_twirl(s, twirl_group(TwirlKind::T12)).matrix() - s.matrix()).norm(), 1e-14);
}

TEST(ApplyTwirl, T12GivesWernerWithSingletFidelity) {
    std::mt19937_64 rng(21);
    const TwirlGroup t12 = twirl_group(TwirlKind::T12);
    const Vector4c s = bell_vector(kPsiMinus);
    for (int k = 0; k < 100; ++k) {
        const DensityMatrix m(testing::random_density(rng));
        const double f = (s.adjoint() * m.matrix() * s)(0).real();
        const DensityMatrix out = apply_twirl(m, t12);
        EXPECT_LT((out.matrix() - werner_around_singlet(f)).cwiseAbs().maxCoeff(), 1e-12);

        const Matrix4c b = bell_basis_matrix(out);
        EXPECT_LT(bell_offdiagonal(b), 1e-10);
        const double a = b(0, 0).real();
        EXPECT_NEAR(b(1, 1).real(), a, 1e-10);
        EXPECT_NEAR(b(2, 2).real(), a, 1e-10);
        EXPECT_NEAR(b(3, 3).real(), f, 1e-12);
        EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-12);
        EXPECT_GE(spectrum(out).minCoeff(), -1e-10);
        EXPECT_GE(von_neumann_entropy(out), von_neumann_entropy(m) - 1e-9);
    }
}

TEST(ApplyTwirl, D2DiagonalizesAndFixesBellDiagonal) {
    std::mt19937_64 rng(22);
    const TwirlGroup d2 = twirl_group(TwirlKind::D2);
    for (int k = 0; k < 20; ++k) {
        const DensityMatrix m(testing::random_density(rng));
        const Matrix4c b = bell_basis_matrix(apply_twirl(m, d2));
        EXPECT_LT(bell_offdiagonal(b), 1e-12);
        const Matrix4c before = bell_basis_matrix(m);
        for (int i = 0; i < 4; ++i) EXPECT_NEAR(b(i, i).real(), before(i, i).real(), 1e-12);

        const DensityMatrix w = to_density(testing::random_bell_diagonal(rng));
        EXPECT_LT((apply_twirl(w, d2).matrix() - w.matrix()).norm(), 1e-12);
    }
}

TEST(ApplyTwirl, SmallSetsEqualizeTriplet) {
    std::mt19937_64 rng(23);
    for (TwirlKind kind : {TwirlKind::Triple, TwirlKind::Axes}) {
        const TwirlGroup g = twirl_group(kind);
        for (int k = 0; k < 20; ++k) {
            const BellDiagonal w = testing::random_bell_diagonal(rng);
            const Matrix4c b = bell_basis_matrix(apply_twirl(to_density(w), g));
            EXPECT_LT(bell_offdiagonal(b), 1e-12);
            const double triplet = (1.0 - w[kPsiMinus]) / 3.0;
            EXPECT_NEAR(b(kPhiPlus.bits(), kPhiPlus.bits()).real(), triplet, 1e-12) << twirl_kind_name(kind);
            EXPECT_NEAR(b(kPsiPlus.bits(), kPsiPlus.bits()).real(), triplet, 1e-12);
            EXPECT_NEAR(b(kPhiMinus.bits(), kPhiMinus.bits()).real(), triplet, 1e-12);
            EXPECT_NEAR(b(kPsiMinus.bits(), kPsiMinus.bits()).real(), w[kPsiMinus], 1e-12);
        }
    }
}

TEST(ModifiedTwirl, KeepsPhiPlusAndEqualizesTheRest) {
    const DensityMatrix phi = DensityMatrix::projector(bell_vector(kPhiPlus));
    EXPECT_LT((modified_twirl(phi).matrix() - phi.matrix()).norm(), 1e-13);

    const DensityMatrix g = to_density(garbage());
    EXPECT_LT((modified_twirl(g).matrix() - g.matrix()).norm(), 1e-13);

    std::mt19937_64 rng(24);
    for (int k = 0; k < 20; ++k) {
        const BellDiagonal w = testing::random_bell_diagonal(rng);
        const BellDiagonal out = bell_diagonal_part(modified_twirl(to_density(w)));
        const double q = (1.0 - w.at(0)) / 3.0;
        EXPECT_NEAR(out.at(0), w.at(0), 1e-12);
        for (std::size_t j = 1; j < 4; ++j) EXPECT_NEAR(out.at(j), q, 1e-12);
        EXPECT_LT(bell_offdiagonal(bell_basis_matrix(modified_twirl(to_density(w)))), 1e-12);
    }
}

}  // namespace
}  // namespace mixent
