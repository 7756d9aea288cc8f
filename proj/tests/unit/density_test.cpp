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

#include "mixent/density.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mixent/error.hpp"
#include "oracles.hpp"

namespace mixent {
namespace {

constexpr Complex kI{0.0, 1.0};

// Entropy of Tr_A via the Schmidt coefficients of the 2x2 amplitude matrix.
double schmidt_entropy(const Vector4c &v) {
    Eigen::Matrix2cd a;
    a << v(0), v(1), v(2), v(3);
    const Eigen::Vector2d s = Eigen::JacobiSVD<Eigen::Matrix2cd>(a).singularValues();
    double h = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double p = s(i) * s(i);
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h;
}

TEST(DensityMatrix, Validation) {
    Matrix4c m = Matrix4c::Identity() / 4.0;
    EXPECT_NO_THROW(DensityMatrix{m});
    Matrix4c bad_trace = Matrix4c::Identity() / 3.0;
    EXPECT_THROW(DensityMatrix{bad_trace}, InputError);
    Matrix4c not_hermitian = m;
    not_hermitian(0, 1) = 0.1;
    EXPECT_THROW(DensityMatrix{not_hermitian}, InputError);
    Matrix4c negative = Matrix4c::Zero();
    negative.diagonal() << 0.6, 0.6, 0.2, -0.4;
    EXPECT_THROW(DensityMatrix{negative}, InputError);
}

TEST(BellDiagonal, Validation) {
    EXPECT_THROW(BellDiagonal(0.5, 0.5, 0.5, -0.5), InputError);
    EXPECT_THROW(BellDiagonal(0.5, 0.2, 0.2, 0.2), InputError);
    EXPECT_NO_THROW(BellDiagonal(0.25, 0.25, 0.25, 0.25));
    EXPECT_EQ(BellDiagonal(0.1, 0.2, 0.6, 0.1).most_likely(), kPhiMinus);
}

TEST(MagicBasis, IsUnitaryAndMatchesDefinition) {
    const Matrix4c &u = magic_basis();
    EXPECT_LT((u.adjoint() * u - Matrix4c::Identity()).norm(), 1e-14);
    const double r = std::sqrt(0.5);
    Vector4c e2;
    e2 << kI * r, 0, 0, -kI * r;
    EXPECT_LT((u.col(1) - e2).norm(), 1e-15);
    Vector4c e3;
    e3 << 0, kI * r, kI * r, 0;
    EXPECT_LT((u.col(2) - e3).norm(), 1e-15);
}

TEST(ToMagicBasis, Examples) {
    const DensityMatrix phi = DensityMatrix::projector(bell_vector(kPhiPlus));
    Matrix4c expected = Matrix4c::Zero();
    expected(0, 0) = 1.0;
    EXPECT_LT((to_magic_basis(phi).matrix() - expected).norm(), 1e-14);

    EXPECT_LT((to_magic_basis(to_density(garbage())).matrix() - Matrix4c::Identity() / 4.0).norm(), 1e-14);

    Matrix4c counter = Matrix4c::Zero();
    counter(0, 0) = 0.25;
    counter(1, 1) = 0.25;
    counter(2, 2) = 0.5;
    counter(0, 1) = kI * 0.25;
    counter(1, 0) = -kI * 0.25;
    const Matrix4c got = to_magic_basis(counter_state()).matrix();
    EXPECT_LT((got - counter).norm(), 1e-14);
}

TEST(ToMagicBasis, PreservesSpectrumAndRoundTrips) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 50; ++k) {
        const DensityMatrix m(testing::random_density(rng));
        const DensityMatrix magic = to_magic_basis(m);
        EXPECT_LT((spectrum(m) - spectrum(magic)).norm(), 1e-12);
        EXPECT_NEAR(magic.matrix().trace().real(), 1.0, 1e-12);
        EXPECT_LT((to_computational_basis(magic).matrix() - m.matrix()).norm(), 1e-13);
    }
}

TEST(FullyEntangledFraction, Examples) {
    EXPECT_NEAR(fully_entangled_fraction(counter_state()), 0.5, 1e-12);
    EXPECT_NEAR(fully_entangled_fraction(DensityMatrix::projector(bell_vector(kPhiPlus))), 1.0, 1e-12);
    EXPECT_NEAR(fully_entangled_fraction(to_density(werner(0.9))), 0.9, 1e-12);
}

// Oracle: <e|M|e> over random real unit vectors in the magic basis never
// exceeds the eigenvalue and gets close to it.
TEST(FullyEntangledFraction, AgreesWithSampledMaximum) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int k = 0; k < 20; ++k) {
        const DensityMatrix m(testing::random_density(rng));
        const Matrix4c magic = to_magic_basis(m).matrix();
        const double f = fully_entangled_fraction(m);
        double best = 0.0;
        for (int trial = 0; trial < 20000; ++trial) {
            Eigen::Vector4d e(g(rng), g(rng), g(rng), g(rng));
            e.normalize();
            const Vector4c ec = e.cast<Complex>();
            best = std::max(best, (ec.adjoint() * magic * ec)(0).real());
        }
        EXPECT_LE(best, f + 1e-12);
        EXPECT_GT(best, f - 2e-3);
    }
    const Matrix4c w = to_magic_basis(to_density(werner(0.9))).matrix();
    double best = 0.0;
    for (int trial = 0; trial < 20000; ++trial) {
        Eigen::Vector4d e(g(rng), g(rng), g(rng), g(rng));
        e.normalize();
        const Vector4c ec = e.cast<Complex>();
        best = std::max(best, (ec.adjoint() * w * ec)(0).real());
    }
    EXPECT_LE(best, 0.9 + 1e-12);
    EXPECT_GT(best, 0.9 - 1e-2);
}

TEST(PureEntanglement, Examples) {
    EXPECT_NEAR(pure_entanglement(PureState(bell_vector(kPsiMinus))), 1.0, 1e-12);
    Vector4c up_up = Vector4c::Zero();
    up_up(0) = 1.0;
    EXPECT_NEAR(pure_entanglement(PureState(up_up)), 0.0, 1e-12);
    Vector4c schmidt = Vector4c::Zero();
    schmidt(0) = 0.8;
    schmidt(3) = 0.6;
    const double h064 = -0.64 * std::log2(0.64) - 0.36 * std::log2(0.36);
    EXPECT_NEAR(pure_entanglement(PureState(schmidt)), h064, 1e-12);
    EXPECT_NEAR(h064, 0.94268, 1e-5);
}

TEST(PureEntanglement, AgreesWithReducedEntropy) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 1000; ++k) {
        const PureState v(testing::random_pure(rng));
        const double e = pure_entanglement(v);
        EXPECT_NEAR(e, entanglement_entropy(v), 1e-10);
        EXPECT_NEAR(e, schmidt_entropy(v.amplitudes()), 1e-10);
    }
}

TEST(PureEntanglement, RealMagicCombinationsAreMaximal) {
    std::mt19937_64 rng(8);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int k = 0; k < 200; ++k) {
        Eigen::Vector4d e(g(rng), g(rng), g(rng), g(rng));
        e.normalize();
        const PureState v(e.cast<Complex>(), Basis::Magic);
        EXPECT_NEAR(pure_entanglement(v), 1.0, 1e-10);
        EXPECT_NEAR(entanglement_entropy(v), 1.0, 1e-10);
    }
}

TEST(HBound, Examples) {
    EXPECT_NEAR(h_bound(1.0), 1.0, 1e-15);
    EXPECT_NEAR(h_bound(0.5), 0.0, 1e-15);
    EXPECT_EQ(h_bound(0.3), 0.0);
    EXPECT_NEAR(h_bound(5.0 / 8.0), 0.117619, 5e-7);
}

TEST(EofBellDiagonal, Examples) {
    EXPECT_NEAR(eof_bell_diagonal(werner(5.0 / 8.0)), 0.1176, 5e-4);
    EXPECT_EQ(eof_bell_diagonal(garbage()), 0.0);
    EXPECT_NEAR(eof_bell_diagonal(BellDiagonal(1, 0, 0, 0)), 1.0, 1e-15);
}

TEST(EofBellDiagonal, MatchesBoundFromFef) {
    std::mt19937_64 rng(9);
    for (int k = 0; k < 200; ++k) {
        const BellDiagonal w = testing::random_bell_diagonal(rng);
        EXPECT_NEAR(eof_bell_diagonal(w), h_bound(fully_entangled_fraction(to_density(w))), 1e-10);
    }
}

void expect_reconstructs(const Ensemble &ens, const BellDiagonal &w) {
    double total = 0.0;
    for (const auto &m : ens.members) total += m.weight;
    EXPECT_NEAR(total, 1.0, 1e-12);
    EXPECT_LT((ens.mixture() - to_density(w).matrix()).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(MinimalEnsemble, HighFidelityMembersCarryHOfPmax) {
    const BellDiagonal w(0.7, 0.1, 0.1, 0.1);
    const Ensemble ens = minimal_ensemble(w);
    EXPECT_EQ(ens.members.size(), 8u);
    const double h = -std::log2(0.5 + std::sqrt(0.21)) * (0.5 + std::sqrt(0.21)) -
                     std::log2(0.5 - std::sqrt(0.21)) * (0.5 - std::sqrt(0.21));
    EXPECT_NEAR(h, 0.250225, 1e-6);
    for (const auto &m : ens.members) EXPECT_NEAR(pure_entanglement(m.state), h, 1e-10);
    expect_reconstructs(ens, w);
}

TEST(MinimalEnsemble, GarbageWithAlternatingPhases) {
    const double pi = std::acos(-1.0);
    const Ensemble ens = minimal_ensemble(garbage(), {0.0, pi, 0.0, pi});
    EXPECT_EQ(ens.members.size(), 8u);
    for (const auto &m : ens.members) EXPECT_NEAR(pure_entanglement(m.state), 0.0, 1e-10);
    expect_reconstructs(ens, garbage());
    EXPECT_THROW(minimal_ensemble(garbage(), {0.0, 0.0, 0.0, 0.0}), InputError);
}

TEST(MinimalEnsemble, PureBellStateIsSingleMember) {
    const BellDiagonal w(1, 0, 0, 0);
    const Ensemble ens = minimal_ensemble(w);
    ASSERT_EQ(ens.members.size(), 1u);
    EXPECT_NEAR(ens.members[0].weight, 1.0, 1e-15);
    expect_reconstructs(ens, w);
}

TEST(MinimalEnsemble, RandomStates) {
    std::mt19937_64 rng(12);
    int low = 0;
    for (int k = 0; k < 500; ++k) {
        const BellDiagonal w = testing::random_bell_diagonal(rng);
        const Ensemble ens = minimal_ensemble(w);
        expect_reconstructs(ens, w);
        const double target = w.max_probability() >= 0.5 ? h_bound(w.max_probability()) : 0.0;
        if (w.max_probability() < 0.5) ++low;
        for (const auto &m : ens.members) EXPECT_NEAR(pure_entanglement(m.state), target, 1e-10);
    }
    EXPECT_GT(low, 50);
}

TEST(ClosurePhases, Closes) {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 500; ++k) {
        const BellDiagonal w = testing::random_bell_diagonal(rng);
        if (w.max_probability() > 0.5) continue;
        const auto theta = closure_phases(w);
        Complex sum = 0.0;
        for (std::size_t j = 0; j < 4; ++j) sum += w.at(j) * std::polar(1.0, theta[j]);
        EXPECT_LT(std::abs(sum), 1e-12);
    }
    for (const BellDiagonal &w : {BellDiagonal(0.5, 0.5, 0, 0), BellDiagonal(0.5, 0.25, 0.25, 0),
                                  BellDiagonal(0.4, 0.3, 0.3, 0), garbage()}) {
        EXPECT_NO_THROW(closure_phases(w));
    }
    EXPECT_THROW(closure_phases(werner(0.7)), InputError);
}

TEST(VonNeumannEntropy, Examples) {
    EXPECT_EQ(von_neumann_entropy(werner(1.0)), 0.0);
    EXPECT_NEAR(von_neumann_entropy(garbage()), 2.0, 1e-15);
    const double f = 0.9;
    const double closed = -f * std::log2(f) - (1 - f) * std::log2((1 - f) / 3);
    EXPECT_NEAR(von_neumann_entropy(werner(f)), closed, 1e-14);
    EXPECT_NEAR(closed, 0.62749, 1e-5);
    EXPECT_NEAR(von_neumann_entropy(to_density(werner(f))), closed, 1e-10);
}

TEST(Werner, Examples) {
    EXPECT_EQ(werner(5.0 / 8.0), BellDiagonal(5.0 / 8.0, 1.0 / 8.0, 1.0 / 8.0, 1.0 / 8.0));
    EXPECT_EQ(werner(1.0), BellDiagonal(1, 0, 0, 0));
    const BellDiagonal quarter = werner(0.25);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(quarter.at(k), 0.25, 1e-15);
    EXPECT_THROW(werner(1.1), InputError);
    EXPECT_THROW(werner(-0.1), InputError);
}

TEST(CounterState, HalfFidelityZeroBound) {
    const DensityMatrix m = counter_state();
    EXPECT_NEAR(fully_entangled_fraction(m), 0.5, 1e-12);
    EXPECT_EQ(h_bound(fully_entangled_fraction(m)), 0.0);
}

}  // namespace
}  // namespace mixent
