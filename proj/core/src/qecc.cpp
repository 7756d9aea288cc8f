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

#include "mixent/qecc.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string_view>

#include "mixent/error.hpp"

namespace mixent {

namespace {

std::size_t qubit_count(std::size_t dim) {
    if (dim == 0 || !std::has_single_bit(dim)) {
        throw InputError("state dimension must be a power of two");
    }
    return static_cast<std::size_t>(std::countr_zero(dim));
}

VectorXc basis_sum(std::initializer_list<std::pair<int, std::string_view>> terms, bool complement) {
    VectorXc v = VectorXc::Zero(32);
    for (const auto &[sign, ket] : terms) {
        std::size_t index = 0;
        for (char c : ket) index = (index << 1) | static_cast<std::size_t>((c == '1') != complement);
        v(static_cast<Eigen::Index>(index)) = 0.25 * sign;
    }
    return v;
}

void for_each_subset(std::size_t n, std::size_t k, const auto &visit) {
    std::vector<std::size_t> chosen(k);
    for (std::size_t i = 0; i < k; ++i) chosen[i] = i;
    while (true) {
        visit(chosen);
        std::size_t i = k;
        while (i > 0 && chosen[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++chosen[i - 1];
        for (std::size_t j = i; j < k; ++j) chosen[j] = chosen[j - 1] + 1;
    }
}

}  // namespace

StateVector::StateVector(VectorXc amplitudes) : v_(std::move(amplitudes)) {
    qubits_ = qubit_count(static_cast<std::size_t>(v_.size()));
    if (std::abs(v_.norm() - 1.0) > 1e-12) {
        throw InputError("state vector is not normalized");
    }
}

Codeword published_codewords() {
    const std::initializer_list<std::pair<int, std::string_view>> terms = {
        {-1, "00000"}, {-1, "11000"}, {-1, "01100"}, {-1, "00110"}, {-1, "00011"}, {-1, "10001"},
        {+1, "10010"}, {+1, "10100"}, {+1, "01001"}, {+1, "01010"}, {+1, "00101"}, {+1, "11110"},
        {+1, "11101"}, {+1, "11011"}, {+1, "10111"}, {+1, "01111"},
    };
    return {StateVector(basis_sum(terms, false)), StateVector(basis_sum(terms, true))};
}

Codeword repetition_codewords(std::size_t n) {
    detail::require(n >= 1 && n <= 20, "repetition code size must lie in [1, 20]");
    const Eigen::Index dim = Eigen::Index{1} << n;
    VectorXc v0 = VectorXc::Zero(dim);
    VectorXc v1 = VectorXc::Zero(dim);
    v0(0) = 1.0;
    v1(dim - 1) = 1.0;
    return {StateVector(v0), StateVector(v1)};
}

ErrorOperator ErrorOperator::identity() { return ErrorOperator(); }

ErrorOperator ErrorOperator::pauli(Axis axis, std::size_t qubit) {
    ErrorOperator e;
    e.kind_ = Kind::Pauli;
    e.qubit_ = qubit;
    e.u_ = mixent::pauli(axis);
    e.axis_ = axis == Axis::X ? 'X' : axis == Axis::Y ? 'Y' : 'Z';
    return e;
}

ErrorOperator ErrorOperator::unitary(const Matrix2c &u, std::size_t qubit) {
    if ((u.adjoint() * u - Matrix2c::Identity()).cwiseAbs().maxCoeff() > 1e-12) {
        throw InputError("error operator matrix is not unitary");
    }
    ErrorOperator e;
    e.kind_ = Kind::Unitary;
    e.qubit_ = qubit;
    e.u_ = u;
    e.axis_ = 'U';
    return e;
}

std::string ErrorOperator::label() const {
    if (kind_ == Kind::Identity) return "I";
    return std::string(1, axis_) + std::to_string(qubit_);
}

VectorXc ErrorOperator::apply(const VectorXc &v, std::size_t n) const {
    if (kind_ == Kind::Identity) return v;
    if (qubit_ >= n) throw InputError("error acts on qubit " + std::to_string(qubit_) + " of " + std::to_string(n));
    const std::size_t bit = std::size_t{1} << (n - 1 - qubit_);
    VectorXc out(v.size());
    for (std::size_t i = 0; i < static_cast<std::size_t>(v.size()); ++i) {
        if (i & bit) continue;
        const auto i0 = static_cast<Eigen::Index>(i);
        const auto i1 = static_cast<Eigen::Index>(i | bit);
        out(i0) = u_(0, 0) * v(i0) + u_(0, 1) * v(i1);
        out(i1) = u_(1, 0) * v(i0) + u_(1, 1) * v(i1);
    }
    return out;
}

std::vector<ErrorOperator> single_qubit_paulis(std::size_t n) {
    std::vector<ErrorOperator> out;
    for (std::size_t q = 0; q < n; ++q) {
        for (Axis a : {Axis::X, Axis::Y, Axis::Z}) out.push_back(ErrorOperator::pauli(a, q));
    }
    return out;
}

std::vector<ErrorOperator> standard_error_set(std::size_t n) {
    std::vector<ErrorOperator> out{ErrorOperator::identity()};
    for (auto &e : single_qubit_paulis(n)) out.push_back(std::move(e));
    return out;
}

KLResult kl_check(const Codeword &c, const std::vector<ErrorOperator> &errors, double tol) {
    const std::size_t n = c.v0.qubits();
    detail::require(c.v1.qubits() == n, "codewords differ in size");
    std::vector<VectorXc> a;
    std::vector<VectorXc> b;
    for (const auto &e : errors) {
        a.push_back(e.apply(c.v0.amplitudes(), n));
        b.push_back(e.apply(c.v1.amplitudes(), n));
    }
    KLResult r;
    for (std::size_t i = 0; i < errors.size(); ++i) {
        for (std::size_t j = 0; j < errors.size(); ++j) {
            const double diagonal = std::abs(a[i].dot(a[j]) - b[i].dot(b[j]));
            const double cross = std::abs(b[i].dot(a[j]));
            const double residual = std::max(diagonal, cross);
            r.max_residual = std::max(r.max_residual, residual);
            if (residual > tol && !r.witness) {
                r.ok = false;
                r.witness = std::pair(i, j);
            }
        }
    }
    return r;
}

KLDecoder::KLDecoder(Codeword code, std::vector<ErrorOperator> errors, double tol) : code_(std::move(code)) {
    const std::size_t n = code_.v0.qubits();
    const auto count = static_cast<Eigen::Index>(errors.size());
    std::vector<VectorXc> a;
    std::vector<VectorXc> b;
    for (const auto &e : errors) {
        a.push_back(e.apply(code_.v0.amplitudes(), n));
        b.push_back(e.apply(code_.v1.amplitudes(), n));
    }
    MatrixXc gram(count, count);
    for (Eigen::Index i = 0; i < count; ++i) {
        for (Eigen::Index j = 0; j < count; ++j) gram(i, j) = a[i].dot(a[j]);
    }
    Eigen::SelfAdjointEigenSolver<MatrixXc> solver(gram);
    for (Eigen::Index k = 0; k < count; ++k) {
        const double d = solver.eigenvalues()(k);
        if (d <= tol) continue;
        Branch br{VectorXc::Zero(code_.v0.amplitudes().size()), VectorXc::Zero(code_.v0.amplitudes().size())};
        for (Eigen::Index i = 0; i < count; ++i) {
            const Complex coeff = solver.eigenvectors()(i, k);
            br.f0 += coeff * a[i];
            br.f1 += coeff * b[i];
        }
        br.f0 /= std::sqrt(d);
        br.f1 /= std::sqrt(d);
        branches_.push_back(std::move(br));
    }
}

KLDecoder::Outcome KLDecoder::run(Complex alpha, Complex beta, const ErrorOperator &error) const {
    const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
    detail::require(std::abs(norm - 1.0) < 1e-12, "logical amplitudes must be normalized");
    const VectorXc xi = alpha * code_.v0.amplitudes() + beta * code_.v1.amplitudes();
    const VectorXc corrupted = error.apply(xi, code_.v0.qubits());
    Outcome out;
    double captured = 0.0;
    for (const auto &br : branches_) {
        const Complex a = br.f0.dot(corrupted);
        const Complex b = br.f1.dot(corrupted);
        const double p = std::norm(a) + std::norm(b);
        out.branch_probability.push_back(p);
        captured += p;
        out.fidelity += std::norm(std::conj(alpha) * a + std::conj(beta) * b);
    }
    out.leaked = std::max(0.0, 1.0 - captured);
    return out;
}

double decode_simulate(const Codeword &c, Complex alpha, Complex beta, const ErrorOperator &e) {
    const KLDecoder decoder(c, standard_error_set(c.v0.qubits()));
    return decoder.run(alpha, beta, e).fidelity;
}

MatrixXc random_unitary(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const auto d = static_cast<Eigen::Index>(dim);
    MatrixXc z(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) z(i, j) = Complex(gauss(rng), gauss(rng));
    }
    Eigen::HouseholderQR<MatrixXc> qr(z);
    MatrixXc q = qr.householderQ();
    const MatrixXc r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < d; ++j) {
        const Complex rjj = r(j, j);
        q.col(j) *= std::abs(rjj) > 0.0 ? rjj / std::abs(rjj) : Complex(1.0, 0.0);
    }
    return q;
}

std::pair<Complex, Complex> random_logical_state(std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Complex alpha(gauss(rng), gauss(rng));
    Complex beta(gauss(rng), gauss(rng));
    const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
    return {alpha / norm, beta / norm};
}

MatrixXc kron(const MatrixXc &a, const MatrixXc &b) {
    MatrixXc out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

double ricochet_check(const MatrixXc &u, std::size_t n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    detail::require(u.rows() == dim && u.cols() == dim, "unitary size does not match n");
    VectorXc phi = VectorXc::Zero(dim * dim);
    for (Eigen::Index x = 0; x < dim; ++x) phi(x * dim + x) = 1.0;
    phi /= std::sqrt(static_cast<double>(dim));
    const MatrixXc id = MatrixXc::Identity(dim, dim);
    const VectorXc left = kron(u, id) * phi;
    const VectorXc right = kron(id, u.transpose()) * phi;
    return (left - right).norm();
}

bool kl_no_code_argument(std::size_t n, std::size_t t) { return t > 0 && n == 4 * t; }

MatrixXc reduced_density(const StateVector &v, const std::vector<std::size_t> &keep) {
    const std::size_t n = v.qubits();
    for (std::size_t i = 0; i < keep.size(); ++i) {
        detail::require(keep[i] < n, "kept qubit out of range");
        detail::require(i == 0 || keep[i] > keep[i - 1], "kept qubits must be ascending and distinct");
    }
    const std::size_t k = keep.size();
    const Eigen::Index rows = Eigen::Index{1} << k;
    const Eigen::Index cols = Eigen::Index{1} << (n - k);
    MatrixXc psi = MatrixXc::Zero(rows, cols);
    for (std::size_t full = 0; full < v.dimension(); ++full) {
        std::size_t kept = 0;
        std::size_t env = 0;
        std::size_t next = 0;
        for (std::size_t q = 0; q < n; ++q) {
            const std::size_t bit = (full >> (n - 1 - q)) & 1u;
            if (next < k && keep[next] == q) {
                kept = (kept << 1) | bit;
                ++next;
            } else {
                env = (env << 1) | bit;
            }
        }
        psi(static_cast<Eigen::Index>(kept), static_cast<Eigen::Index>(env)) =
            v.amplitudes()(static_cast<Eigen::Index>(full));
    }
    return psi * psi.adjoint();
}

ReducedComparison compare_reduced(const Codeword &c, std::size_t k) {
    const std::size_t n = c.v0.qubits();
    detail::require(k >= 1 && k <= n, "subset size must lie in [1, n]");
    ReducedComparison out;
    for_each_subset(n, k, [&](const std::vector<std::size_t> &subset) {
        const MatrixXc r0 = reduced_density(c.v0, subset);
        const MatrixXc r1 = reduced_density(c.v1, subset);
        out.max_difference = std::max(out.max_difference, (r0 - r1).norm());
        out.max_overlap = std::max(out.max_overlap, (r0 * r1).norm());
    });
    return out;
}

}  // namespace mixent
