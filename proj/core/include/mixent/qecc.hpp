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

// State-vector checks for the five-qubit code: codewords, the
// error-correction conditions, a decoder built from those conditions, and
// the transpose ("ricochet") identity for maximally entangled states.
//
// Qubit 0 is the most significant bit of a basis index, so |10000> is
// index 16.

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mixent/twirl.hpp"

namespace mixent {

using VectorXc = Eigen::VectorXcd;
using MatrixXc = Eigen::MatrixXcd;

class StateVector {
   public:
    explicit StateVector(VectorXc amplitudes);

    const VectorXc &amplitudes() const { return v_; }
    std::size_t qubits() const { return qubits_; }
    std::size_t dimension() const { return static_cast<std::size_t>(v_.size()); }

   private:
    VectorXc v_;
    std::size_t qubits_ = 0;
};

struct Codeword {
    StateVector v0;
    StateVector v1;
};

/// v0 is a signed sum of the sixteen even-parity five-qubit kets, v1 its
/// bit complement.
Codeword published_codewords();

/// |00000> and |11111>: a repetition pair that fails against phase errors.
Codeword repetition_codewords(std::size_t n);

class ErrorOperator {
   public:
    enum class Kind { Identity, Pauli, Unitary };

    static ErrorOperator identity();
    static ErrorOperator pauli(Axis axis, std::size_t qubit);
    /// Throws InputError unless u is unitary within 1e-12.
    static ErrorOperator unitary(const Matrix2c &u, std::size_t qubit);

    Kind kind() const { return kind_; }
    std::size_t qubit() const { return qubit_; }
    const Matrix2c &matrix() const { return u_; }

    /// e.g. "I", "X3", "U2".
    std::string label() const;

    VectorXc apply(const VectorXc &v, std::size_t n) const;

   private:
    Kind kind_ = Kind::Identity;
    std::size_t qubit_ = 0;
    Matrix2c u_ = Matrix2c::Identity();
    char axis_ = 'I';
};

/// X, Y, Z on each qubit, qubit-major.
std::vector<ErrorOperator> single_qubit_paulis(std::size_t n);

/// Identity followed by single_qubit_paulis(n).
std::vector<ErrorOperator> standard_error_set(std::size_t n);

struct KLResult {
    bool ok = true;
    double max_residual = 0.0;
    std::optional<std::pair<std::size_t, std::size_t>> witness;  // first failing (i, j)
};

/// <v0|Ri^dag Rj|v0> = <v1|Ri^dag Rj|v1> and <v1|Ri^dag Rj|v0> = 0 for all i, j.
KLResult kl_check(const Codeword &c, const std::vector<ErrorOperator> &errors, double tol = 1e-10);

/// Recovery built from the condition matrix C_ij = <v0|Ri^dag Rj|v0>:
/// diagonalizing C gives orthogonal error subspaces span{F_k v0, F_k v1};
/// syndrome k projects onto one of them and F_k^dag / sqrt(d_k) maps it back.
class KLDecoder {
   public:
    KLDecoder(Codeword code, std::vector<ErrorOperator> errors, double tol = 1e-10);

    std::size_t branches() const { return branches_.size(); }

    struct Outcome {
        double fidelity = 0.0;                    // expected over syndrome outcomes
        std::vector<double> branch_probability;  // one per syndrome
        double leaked = 0.0;                      // weight outside every error subspace
    };

    /// Encodes alpha v0 + beta v1, applies `error`, decodes.
    Outcome run(Complex alpha, Complex beta, const ErrorOperator &error) const;

   private:
    struct Branch {
        VectorXc f0;  // F_k v0 / sqrt(d_k)
        VectorXc f1;  // F_k v1 / sqrt(d_k)
    };
    Codeword code_;
    std::vector<Branch> branches_;
};

/// Fidelity |<xi|xi_f>|^2 after encoding, the error, and decoding against
/// the identity plus single-qubit Paulis.
double decode_simulate(const Codeword &c, Complex alpha, Complex beta, const ErrorOperator &e);

/// Haar-random unitary via QR of a complex Gaussian matrix.
MatrixXc random_unitary(std::size_t dim, std::mt19937_64 &rng);

/// Random normalized (alpha, beta).
std::pair<Complex, Complex> random_logical_state(std::mt19937_64 &rng);

MatrixXc kron(const MatrixXc &a, const MatrixXc &b);

/// ||(U (x) I)|Phi> - (I (x) U^T)|Phi>|| with |Phi> = 2^(-n/2) sum_x |x>|x>.
double ricochet_check(const MatrixXc &u, std::size_t n);

/// Whether the reduced-density obstruction rules out a code: n == 4t.
bool kl_no_code_argument(std::size_t n, std::size_t t);

/// Reduced density matrix on the listed qubits (ascending), tracing out the rest.
MatrixXc reduced_density(const StateVector &v, const std::vector<std::size_t> &keep);

struct ReducedComparison {
    double max_difference = 0.0;  // max ||rho0 - rho1|| over subsets
    double max_overlap = 0.0;     // max ||rho0 rho1|| over subsets
};

/// Compares the reduced states of v0 and v1 on every k-qubit subset.
ReducedComparison compare_reduced(const Codeword &c, std::size_t k);

}  // namespace mixent
