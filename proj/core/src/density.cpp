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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "mixent/error.hpp"

namespace mixent {

namespace {

constexpr Complex kI{0.0, 1.0};

double entropy_of(const double *values, std::size_t count) {
    double s = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        const double p = values[k];
        if (p > 0.0) s -= p * std::log2(p);
    }
    return s;
}

}  // namespace

DensityMatrix::DensityMatrix(const Matrix4c &m, Basis basis) : m_(m), basis_(basis) {
    const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermitianTol) {
        throw InputError("density matrix is not Hermitian (residual " + std::to_string(herm) + ")");
    }
    const Complex tr = m.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTol) {
        throw InputError("density matrix trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix4c> solver(m, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kPsdTol) {
        throw InputError("density matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::projector(const Vector4c &v) {
    const double norm = v.norm();
    detail::require(std::abs(norm - 1.0) < 1e-12, "projector needs a unit vector");
    Matrix4c m = v * v.adjoint();
    // Hermitian to the last bit, so validation never trips on rounding.
    m = 0.5 * (m + m.adjoint()).eval();
    return DensityMatrix(m);
}

BellDiagonal::BellDiagonal(double p00, double p01, double p10, double p11) : p_{p00, p01, p10, p11} {
    for (double p : p_) {
        if (!(p >= 0.0)) throw InputError("Bell-diagonal probabilities must be non-negative");
    }
    const double sum = p00 + p01 + p10 + p11;
    if (std::abs(sum - 1.0) > kTraceTol) {
        throw InputError("Bell-diagonal probabilities must sum to 1");
    }
}

double BellDiagonal::max_probability() const { return *std::max_element(p_.begin(), p_.end()); }

BellIndex BellDiagonal::most_likely() const {
    const auto it = std::max_element(p_.begin(), p_.end());
    return BellIndex(static_cast<std::uint8_t>(it - p_.begin()));
}

PureState::PureState(const Vector4c &amplitudes, Basis basis) : v_(amplitudes), basis_(basis) {
    if (std::abs(amplitudes.norm() - 1.0) > 1e-12) {
        throw InputError("pure state is not normalized");
    }
}

PureState PureState::in(Basis target) const {
    if (target == basis_) return *this;
    if (target == Basis::Magic) return PureState(magic_basis().adjoint() * v_, Basis::Magic);
    return PureState(magic_basis() * v_, Basis::Computational);
}

Matrix4c Ensemble::mixture() const {
    Matrix4c m = Matrix4c::Zero();
    for (const auto &member : members) {
        const Vector4c v = member.state.in(Basis::Computational).amplitudes();
        m += member.weight * (v * v.adjoint());
    }
    return m;
}

Vector4c bell_vector(BellIndex b) {
    const double r = std::numbers::sqrt2 / 2.0;
    Vector4c v = Vector4c::Zero();
    if (b.amplitude() == 0) {  // Phi: |00> +/- |11>
        v(0) = r;
        v(3) = b.phase() == 0 ? r : -r;
    } else {  // Psi: |01> +/- |10>
        v(1) = r;
        v(2) = b.phase() == 0 ? r : -r;
    }
    return v;
}

const Matrix4c &magic_basis() {
    static const Matrix4c basis = [] {
        Matrix4c m;
        m.col(0) = bell_vector(kPhiPlus);
        m.col(1) = kI * bell_vector(kPhiMinus);
        m.col(2) = kI * bell_vector(kPsiPlus);
        m.col(3) = bell_vector(kPsiMinus);
        return m;
    }();
    return basis;
}

int magic_slot(BellIndex b) {
    switch (b.bits()) {
        case 0b00: return 0;
        case 0b10: return 1;
        case 0b01: return 2;
        default: return 3;
    }
}

DensityMatrix to_magic_basis(const DensityMatrix &m) {
    if (m.basis() == Basis::Magic) return m;
    const Matrix4c &u = magic_basis();
    Matrix4c out = u.adjoint() * m.matrix() * u;
    out = 0.5 * (out + out.adjoint()).eval();
    return DensityMatrix(out, Basis::Magic);
}

DensityMatrix to_computational_basis(const DensityMatrix &m) {
    if (m.basis() == Basis::Computational) return m;
    const Matrix4c &u = magic_basis();
    Matrix4c out = u * m.matrix() * u.adjoint();
    out = 0.5 * (out + out.adjoint()).eval();
    return DensityMatrix(out, Basis::Computational);
}

Matrix4c bell_basis_matrix(const DensityMatrix &m) {
    const Matrix4c c = to_computational_basis(m).matrix();
    Matrix4c bell;
    for (int k = 0; k < 4; ++k) bell.col(k) = bell_vector(BellIndex(static_cast<std::uint8_t>(k)));
    return bell.adjoint() * c * bell;
}

BellDiagonal bell_diagonal_part(const DensityMatrix &m) {
    const Matrix4c b = bell_basis_matrix(m);
    std::array<double, 4> p{};
    for (int k = 0; k < 4; ++k) p[k] = std::max(0.0, b(k, k).real());
    const double sum = p[0] + p[1] + p[2] + p[3];
    for (double &x : p) x /= sum;
    return BellDiagonal(p);
}

DensityMatrix to_density(const BellDiagonal &w) {
    Matrix4c m = Matrix4c::Zero();
    for (std::uint8_t k = 0; k < 4; ++k) {
        const Vector4c v = bell_vector(BellIndex(k));
        m += w.at(k) * (v * v.adjoint());
    }
    return DensityMatrix(m);
}

double binary_entropy(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double fully_entangled_fraction(const DensityMatrix &m) {
    const Eigen::Matrix4d re = to_magic_basis(m).matrix().real();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(0.5 * (re + re.transpose()), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().maxCoeff();
}

double pure_concurrence(const PureState &v) {
    const Vector4c a = v.in(Basis::Magic).amplitudes();
    Complex sum = 0.0;
    for (int j = 0; j < 4; ++j) sum += a(j) * a(j);
    return std::min(1.0, std::abs(sum));
}

double pure_entanglement(const PureState &v) {
    const double c = pure_concurrence(v);
    return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

Matrix2c reduced_density_b(const PureState &v) {
    const Vector4c a = v.in(Basis::Computational).amplitudes();
    Matrix2c rho = Matrix2c::Zero();
    for (int alice = 0; alice < 2; ++alice) {
        for (int b = 0; b < 2; ++b) {
            for (int bp = 0; bp < 2; ++bp) {
                rho(b, bp) += a(2 * alice + b) * std::conj(a(2 * alice + bp));
            }
        }
    }
    return rho;
}

double entanglement_entropy(const PureState &v) {
    Eigen::SelfAdjointEigenSolver<Matrix2c> solver(reduced_density_b(v), Eigen::EigenvaluesOnly);
    const Eigen::Vector2d ev = solver.eigenvalues().cwiseMax(0.0);
    return entropy_of(ev.data(), 2);
}

double h_bound(double f) {
    if (f < 0.5) return 0.0;
    return binary_entropy(0.5 + std::sqrt(std::max(0.0, f * (1.0 - f))));
}

double eof_bell_diagonal(const BellDiagonal &w) { return h_bound(w.max_probability()); }

std::array<double, 4> closure_phases(const BellDiagonal &w) {
    const auto &p = w.probabilities();
    if (w.max_probability() > 0.5 + 1e-12) {
        throw InputError("closure phases need every probability <= 1/2");
    }
    std::array<std::size_t, 4> order{0, 1, 2, 3};
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return p[a] > p[b]; });

    // Pair the largest with the smallest and the middle two; both pairs can
    // reach a common resultant length r, so the two resultants cancel.
    const double a = p[order[0]];
    const double b = p[order[1]];
    const double c = p[order[2]];
    const double d = p[order[3]];
    const double r = std::max(a - d, b - c);

    auto opening = [r](double x, double y) {
        if (x * y <= 0.0) return 0.0;
        const double cosine = std::clamp((r * r - x * x - y * y) / (2.0 * x * y), -1.0, 1.0);
        return std::acos(cosine);
    };

    std::array<double, 4> theta{};
    theta[order[0]] = 0.0;
    theta[order[3]] = opening(a, d);
    const Complex first = a + d * std::polar(1.0, theta[order[3]]);

    const double phi = opening(b, c);
    const Complex second = b + c * std::polar(1.0, phi);
    const double rotate = std::arg(first) - std::arg(second) + std::numbers::pi;
    theta[order[1]] = rotate;
    theta[order[2]] = phi + rotate;

    Complex total = 0.0;
    for (std::size_t j = 0; j < 4; ++j) total += p[j] * std::polar(1.0, theta[j]);
    if (std::abs(total) > 1e-12) {
        throw VerificationError("phase closure failed");
    }
    return theta;
}

namespace {

void append_merged(Ensemble &ens, double weight, const Vector4c &v) {
    for (auto &member : ens.members) {
        if ((member.state.amplitudes() - v).cwiseAbs().maxCoeff() < 1e-15) {
            member.weight += weight;
            return;
        }
    }
    ens.members.push_back({weight, PureState(v, Basis::Computational)});
}

}  // namespace

Ensemble minimal_ensemble(const BellDiagonal &w) {
    if (w.max_probability() >= 0.5) {
        const BellIndex top = w.most_likely();
        Ensemble ens;
        for (int signs = 0; signs < 8; ++signs) {
            Vector4c magic = Vector4c::Zero();
            magic(magic_slot(top)) = std::sqrt(w[top]);
            int bit = 0;
            for (std::uint8_t k = 0; k < 4; ++k) {
                const BellIndex b(k);
                if (b == top) continue;
                const double sign = ((signs >> bit) & 1) ? -1.0 : 1.0;
                magic(magic_slot(b)) = kI * sign * std::sqrt(w[b]);
                ++bit;
            }
            append_merged(ens, 1.0 / 8.0, magic_basis() * magic);
        }
        return ens;
    }
    return minimal_ensemble(w, closure_phases(w));
}

Ensemble minimal_ensemble(const BellDiagonal &w, const std::array<double, 4> &phases) {
    Complex total = 0.0;
    for (std::size_t j = 0; j < 4; ++j) total += w.at(j) * std::polar(1.0, phases[j]);
    if (std::abs(total) > 1e-10) {
        throw InputError("phases do not close: sum p_j exp(i theta_j) != 0");
    }
    Ensemble ens;
    for (int signs = 0; signs < 8; ++signs) {
        Vector4c magic = Vector4c::Zero();
        for (std::uint8_t k = 0; k < 4; ++k) {
            const double sign = (k > 0 && ((signs >> (k - 1)) & 1)) ? -1.0 : 1.0;
            magic(magic_slot(BellIndex(k))) = sign * std::sqrt(w.at(k)) * std::polar(1.0, phases[k] / 2.0);
        }
        append_merged(ens, 1.0 / 8.0, magic_basis() * magic);
    }
    return ens;
}

double von_neumann_entropy(const BellDiagonal &w) { return entropy_of(w.probabilities().data(), 4); }

Eigen::Vector4d spectrum(const DensityMatrix &m) {
    Eigen::SelfAdjointEigenSolver<Matrix4c> solver(m.matrix(), Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

double von_neumann_entropy(const DensityMatrix &m) {
    const Eigen::Vector4d ev = spectrum(m).cwiseMax(0.0);
    return entropy_of(ev.data(), 4);
}

BellDiagonal werner(double fidelity) {
    if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
        throw InputError("Werner fidelity must lie in [0, 1]");
    }
    const double q = (1.0 - fidelity) / 3.0;
    return BellDiagonal(fidelity, q, q, 1.0 - fidelity - 2.0 * q);
}

BellDiagonal garbage() { return BellDiagonal(0.25, 0.25, 0.25, 0.25); }

DensityMatrix up_up_psi_plus_mixture(double p) {
    detail::require(p >= 0.0 && p <= 1.0, "mixture weight must lie in [0, 1]");
    Vector4c up_up = Vector4c::Zero();
    up_up(0) = 1.0;
    const Vector4c psi = bell_vector(kPsiPlus);
    return DensityMatrix((1.0 - p) * (up_up * up_up.adjoint()) + p * (psi * psi.adjoint()));
}

DensityMatrix counter_state() { return up_up_psi_plus_mixture(0.5); }

}  // namespace mixent
