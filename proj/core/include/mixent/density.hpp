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

// Two-qubit states and entanglement measures.
//
// Computational basis order is |00>, |01>, |10>, |11> with the first qubit
// (Alice) most significant and 0 = spin up. The magic basis is
//
//     e1 = Phi+,  e2 = i Phi-,  e3 = i Psi+,  e4 = Psi-
//
// in which every real unit vector is maximally entangled.

#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "mixent/bell.hpp"

namespace mixent {

using Complex = std::complex<double>;
using Matrix4c = Eigen::Matrix4cd;
using Vector4c = Eigen::Vector4cd;
using Matrix2c = Eigen::Matrix2cd;

enum class Basis { Computational, Magic };

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;

/// 4x4 Hermitian, unit-trace, positive semidefinite matrix tagged with the
/// basis it is written in. The constructor validates.
class DensityMatrix {
   public:
    explicit DensityMatrix(const Matrix4c &m, Basis basis = Basis::Computational);

    /// |v><v| for a normalized computational-basis vector.
    static DensityMatrix projector(const Vector4c &v);

    const Matrix4c &matrix() const { return m_; }
    Basis basis() const { return basis_; }

    Complex operator()(int row, int col) const { return m_(row, col); }

   private:
    Matrix4c m_;
    Basis basis_;
};

/// Probabilities over Bell states indexed by BellIndex bits:
/// p[0] = Phi+, p[1] = Psi+, p[2] = Phi-, p[3] = Psi-.
class BellDiagonal {
   public:
    BellDiagonal(double p00, double p01, double p10, double p11);
    explicit BellDiagonal(const std::array<double, 4> &p) : BellDiagonal(p[0], p[1], p[2], p[3]) {}

    double operator[](BellIndex b) const { return p_[b.bits()]; }
    double at(std::size_t bits) const { return p_.at(bits); }
    const std::array<double, 4> &probabilities() const { return p_; }

    double fidelity() const { return p_[0]; }
    double max_probability() const;
    BellIndex most_likely() const;

    bool operator==(const BellDiagonal &) const = default;

   private:
    std::array<double, 4> p_;
};

/// Unit vector of two-qubit amplitudes.
class PureState {
   public:
    explicit PureState(const Vector4c &amplitudes, Basis basis = Basis::Computational);

    const Vector4c &amplitudes() const { return v_; }
    Basis basis() const { return basis_; }

    /// The same state expressed in the requested basis.
    PureState in(Basis target) const;

   private:
    Vector4c v_;
    Basis basis_;
};

struct EnsembleMember {
    double weight = 0.0;
    PureState state;
};

struct Ensemble {
    std::vector<EnsembleMember> members;

    /// sum_k w_k |phi_k><phi_k| in the computational basis.
    Matrix4c mixture() const;
};

Vector4c bell_vector(BellIndex b);

/// Columns are e1..e4 written in the computational basis.
const Matrix4c &magic_basis();

/// Magic-basis slot of a Bell label (Phi+ -> 0, Phi- -> 1, Psi+ -> 2, Psi- -> 3).
int magic_slot(BellIndex b);

DensityMatrix to_magic_basis(const DensityMatrix &m);
DensityMatrix to_computational_basis(const DensityMatrix &m);

/// Bell-basis matrix elements <B_i|M|B_j>, rows/cols ordered by BellIndex bits.
Matrix4c bell_basis_matrix(const DensityMatrix &m);

/// Diagonal of the Bell-basis matrix as a BellDiagonal (valid for any M).
BellDiagonal bell_diagonal_part(const DensityMatrix &m);

DensityMatrix to_density(const BellDiagonal &w);

double binary_entropy(double x);

/// Largest eigenvalue of Re(M) in the magic basis.
double fully_entangled_fraction(const DensityMatrix &m);

/// H[(1 + sqrt(1 - C^2))/2] with C = |sum_j alpha_j^2| in the magic basis.
double pure_entanglement(const PureState &v);

/// Concurrence-like quantity C of a pure state.
double pure_concurrence(const PureState &v);

/// S(Tr_A |v><v|), computed from the reduced density matrix directly.
double entanglement_entropy(const PureState &v);

/// Reduced state of Bob's qubit.
Matrix2c reduced_density_b(const PureState &v);

/// H(1/2 + sqrt(f(1-f))) for f >= 1/2, else 0.
double h_bound(double f);

double eof_bell_diagonal(const BellDiagonal &w);

/// Phases theta_j with sum_j p_j exp(i theta_j) = 0. Requires max p <= 1/2.
std::array<double, 4> closure_phases(const BellDiagonal &w);

/// Equal-weight eight-state decomposition achieving E(W). For max p >= 1/2
/// every member has entanglement h(max p); otherwise every member is a
/// product state. Identical members are merged.
Ensemble minimal_ensemble(const BellDiagonal &w);

/// Zero-entanglement ensemble for caller-supplied closure phases.
Ensemble minimal_ensemble(const BellDiagonal &w, const std::array<double, 4> &phases);

double von_neumann_entropy(const BellDiagonal &w);
double von_neumann_entropy(const DensityMatrix &m);

/// Eigenvalues of a density matrix, ascending.
Eigen::Vector4d spectrum(const DensityMatrix &m);

/// p00 = F, the rest (1-F)/3 each.
BellDiagonal werner(double fidelity);

/// Maximally mixed state, (1/4, 1/4, 1/4, 1/4).
BellDiagonal garbage();

/// (1/2)|00><00| + (1/2)|Psi+><Psi+|: f = 1/2 yet not separable.
DensityMatrix counter_state();

/// (1-p)|00><00| + p|Psi+><Psi+|.
DensityMatrix up_up_psi_plus_mixture(double p);

}  // namespace mixent
