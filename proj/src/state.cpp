// Copyright 2026 The Bargmann Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bargmann/state.hpp"

#include <cmath>
#include <numbers>

#include "bargmann/errors.hpp"
#include "bargmann/rng.hpp"

namespace bargmann {

namespace {

// Streams keep the Gaussian draws of different generators apart even when
// callers reuse a seed.
constexpr std::uint64_t kPureStream = 0x70757265;
constexpr std::uint64_t kMixedStream = 0x6d697865;
constexpr std::uint64_t kUnitaryStream = 0x756e6974;

Complex complex_gaussian(CounterRng &rng) {
    const double re = rng.normal();
    const double im = rng.normal();
    return {re, im};
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix mat, double tol) {
    if (mat.rows() != mat.cols() || mat.rows() == 0) {
        throw DimensionError("density matrix must be square and non-empty");
    }
    check_capacity(static_cast<std::size_t>(mat.rows()), "density matrix");
    if (!all_finite(mat)) {
        throw StateError("density matrix has non-finite entries");
    }
    if (!is_hermitian(mat, tol)) {
        throw StateError("density matrix is not Hermitian");
    }
    if (std::abs(mat.trace() - Complex(1.0, 0.0)) > tol) {
        throw StateError("density matrix trace is not 1");
    }
    if (!is_psd(mat, tol)) {
        throw StateError("density matrix is not positive semidefinite");
    }
    return DensityMatrix(std::move(mat));
}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix mat) {
    return DensityMatrix(std::move(mat));
}

double DensityMatrix::purity() const {
    return (mat_ * mat_).trace().real();
}

PureState PureState::from_vector(ComplexVector vec, double tol) {
    if (vec.size() == 0) {
        throw DimensionError("pure state must be non-empty");
    }
    check_capacity(static_cast<std::size_t>(vec.size()), "pure state");
    for (Eigen::Index i = 0; i < vec.size(); ++i) {
        if (!std::isfinite(vec[i].real()) || !std::isfinite(vec[i].imag())) {
            throw StateError("pure state has non-finite amplitudes");
        }
    }
    if (std::abs(vec.norm() - 1.0) > tol) {
        throw StateError("pure state is not normalized");
    }
    return PureState(std::move(vec));
}

PureState PureState::unchecked(ComplexVector vec) {
    return PureState(std::move(vec));
}

std::size_t Povm::dim() const noexcept {
    return effects_.empty() ? 0
                            : static_cast<std::size_t>(effects_.front().rows());
}

void Povm::validate(double tol) const {
    if (effects_.empty()) {
        throw PovmError("POVM has no effects");
    }
    if (labels_.size() != effects_.size()) {
        throw PovmError("POVM label count differs from effect count");
    }
    const auto d = effects_.front().rows();
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto &e : effects_) {
        if (e.rows() != d || e.cols() != d) {
            throw PovmError("POVM effects have inconsistent dimensions");
        }
        if (!is_psd(e, tol)) {
            throw PovmError("POVM effect is not positive semidefinite");
        }
        sum += e;
    }
    if (max_abs_diff(sum, ComplexMatrix::Identity(d, d)) > tol) {
        throw PovmError("POVM effects do not sum to the identity");
    }
}

Povm Povm::create(std::vector<ComplexMatrix> effects,
                  std::vector<std::string> labels, double tol) {
    Povm povm(std::move(effects), std::move(labels));
    povm.validate(tol);
    return povm;
}

Povm Povm::unchecked(std::vector<ComplexMatrix> effects,
                     std::vector<std::string> labels) {
    return Povm(std::move(effects), std::move(labels));
}

Observable Observable::create(std::vector<double> coefficients, Povm povm) {
    povm.validate();
    if (coefficients.size() != povm.size()) {
        throw PovmError("observable needs one coefficient per effect");
    }
    return Observable{std::move(coefficients), std::move(povm)};
}

ComplexMatrix Observable::matrix() const {
    const auto d = static_cast<Eigen::Index>(povm.dim());
    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    for (std::size_t j = 0; j < povm.size(); ++j) {
        out += coefficients.at(j) * povm.effect(j);
    }
    return out;
}

DensityMatrix pure_to_density(const PureState &psi) {
    return DensityMatrix::unchecked(outer(psi.vector(), psi.vector()));
}

PureState random_pure_state(std::size_t dim, std::uint64_t seed) {
    if (dim == 0) {
        throw ParameterError("random_pure_state: dim must be >= 1");
    }
    check_capacity(dim, "random_pure_state");
    CounterRng rng(seed, kPureStream);
    ComplexVector v(static_cast<Eigen::Index>(dim));
    for (auto &z : v) {
        z = complex_gaussian(rng);
    }
    v /= v.norm();
    return PureState::unchecked(std::move(v));
}

DensityMatrix random_density_matrix(std::size_t dim, std::size_t rank,
                                    std::uint64_t seed) {
    if (rank < 1 || rank > dim) {
        throw ParameterError("random_density_matrix: rank " +
                             std::to_string(rank) + " outside [1, " +
                             std::to_string(dim) + "]");
    }
    check_capacity(dim, "random_density_matrix");
    CounterRng rng(seed, kMixedStream);
    ComplexMatrix g(static_cast<Eigen::Index>(dim),
                    static_cast<Eigen::Index>(rank));
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
            g(i, j) = complex_gaussian(rng);
        }
    }
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    // Exact Hermiticity; the product is Hermitian only up to rounding.
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix::unchecked(std::move(rho));
}

ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed) {
    if (dim == 0) {
        throw ParameterError("random_unitary: dim must be >= 1");
    }
    check_capacity(dim, "random_unitary");
    CounterRng rng(seed, kUnitaryStream);
    Eigen::MatrixXcd g(static_cast<Eigen::Index>(dim),
                       static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
            g(i, j) = complex_gaussian(rng);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        const Complex diag = r(j, j);
        const double mag = std::abs(diag);
        q.col(j) *= mag > 0.0 ? diag / mag : Complex(1.0, 0.0);
    }
    return q;
}

Povm povm_from_known_state(const DensityMatrix &known) {
    const ComplexMatrix &rho = known.matrix();
    if (!is_hermitian(rho) || !is_psd(rho) ||
        std::abs(rho.trace() - Complex(1.0, 0.0)) > kDefaultTolerance) {
        throw StateError("povm_from_known_state: invalid density matrix");
    }
    ComplexMatrix miss = ComplexMatrix::Identity(rho.rows(), rho.cols()) - rho;
    return Povm::unchecked({rho, std::move(miss)}, {"hit", "miss"});
}

Povm r_povm() {
    const double s = 1.0 / std::sqrt(2.0);
    const Complex i(0.0, 1.0);
    std::vector<ComplexVector> kets(4, ComplexVector(2));
    kets[0] << s, s;
    kets[1] << s, -s;
    kets[2] << s, i * s;
    kets[3] << s, -i * s;
    std::vector<ComplexMatrix> effects;
    for (const auto &k : kets) {
        effects.push_back(0.5 * outer(k, k));
    }
    return Povm::unchecked(std::move(effects), {"R0", "R1", "R2", "R3"});
}

Povm projective_povm(const ComplexMatrix &basis,
                     std::vector<std::string> labels) {
    if (!is_unitary(basis)) {
        throw PovmError("projective_povm: basis matrix is not unitary");
    }
    std::vector<ComplexMatrix> effects;
    for (Eigen::Index j = 0; j < basis.cols(); ++j) {
        const ComplexVector col = basis.col(j);
        effects.push_back(outer(col, col));
    }
    return Povm::create(std::move(effects), std::move(labels));
}

Povm computational_povm(std::size_t dim) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < dim; ++i) {
        labels.push_back(std::to_string(i));
    }
    return projective_povm(identity(dim), std::move(labels));
}

PureState preset_state(std::string_view name) {
    const double s = 1.0 / std::sqrt(2.0);
    const Complex i(0.0, 1.0);
    ComplexVector v(2);
    if (name == "zero") {
        v << 1.0, 0.0;
    } else if (name == "one") {
        v << 0.0, 1.0;
    } else if (name == "plus") {
        v << s, s;
    } else if (name == "minus") {
        v << s, -s;
    } else if (name == "plus_i") {
        v << s, i * s;
    } else if (name == "minus_i") {
        v << s, -i * s;
    } else {
        throw ParameterError("unknown state preset '" + std::string(name) +
                             "'");
    }
    return PureState::unchecked(std::move(v));
}

}  // namespace bargmann
