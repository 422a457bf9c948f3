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

#include "bargmann/numerics.hpp"

#include <cmath>
#include <string>

#include "bargmann/errors.hpp"

namespace bargmann {

namespace {

void require_square(const ComplexMatrix &a, const char *op) {
    if (a.rows() != a.cols()) {
        throw DimensionError(std::string(op) + ": matrix is " +
                             std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + ", expected square");
    }
}

}  // namespace

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Dimension:
        return "DimensionError";
    case ErrorKind::Capacity:
        return "CapacityError";
    case ErrorKind::Parameter:
        return "ParameterError";
    case ErrorKind::State:
        return "StateError";
    case ErrorKind::Povm:
        return "PovmError";
    case ErrorKind::UnsupportedDimension:
        return "UnsupportedDimension";
    case ErrorKind::InternalConsistency:
        return "InternalConsistencyError";
    }
    return "Error";
}

void check_capacity(std::size_t dim, const char *what) {
    if (dim > kDimensionCap) {
        throw CapacityError(std::string(what) + ": dimension " +
                            std::to_string(dim) + " exceeds cap " +
                            std::to_string(kDimensionCap));
    }
}

std::size_t checked_power(std::size_t base, std::size_t exponent,
                          const char *what) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (base != 0 && out > kDimensionCap / base + 1) {
            check_capacity(kDimensionCap + 1, what);
        }
        out *= base;
        check_capacity(out, what);
    }
    return out;
}

ComplexMatrix identity(std::size_t dim) {
    check_capacity(dim, "identity");
    return ComplexMatrix::Identity(static_cast<Eigen::Index>(dim),
                                   static_cast<Eigen::Index>(dim));
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matmul: inner dimensions " +
                             std::to_string(a.cols()) + " and " +
                             std::to_string(b.rows()) + " differ");
    }
    return a * b;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const auto rows = static_cast<std::size_t>(a.rows() * b.rows());
    const auto cols = static_cast<std::size_t>(a.cols() * b.cols());
    check_capacity(rows, "kron");
    check_capacity(cols, "kron");
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

Complex trace(const ComplexMatrix &a) {
    require_square(a, "trace");
    return a.trace();
}

ComplexMatrix adjoint(const ComplexMatrix &a) { return a.adjoint(); }

ComplexMatrix outer(const ComplexVector &ket, const ComplexVector &bra) {
    return ket * bra.adjoint();
}

double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("frobenius_distance: shape mismatch");
    }
    return (a - b).norm();
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("max_abs_diff: shape mismatch");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix &a) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const Complex z = a.data()[i];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

bool is_unitary(const ComplexMatrix &a, double tol) {
    require_square(a, "is_unitary");
    const ComplexMatrix product = a.adjoint() * a;
    return max_abs_diff(product, ComplexMatrix::Identity(a.rows(), a.cols())) <=
           tol;
}

bool is_hermitian(const ComplexMatrix &a, double tol) {
    require_square(a, "is_hermitian");
    return max_abs_diff(a, a.adjoint()) <= tol;
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix &a) {
    require_square(a, "hermitian_eigenvalues");
    const Eigen::MatrixXcd herm = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        herm, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

bool is_psd(const ComplexMatrix &a, double tol) {
    if (!is_hermitian(a, tol)) {
        return false;
    }
    if (a.rows() == 0) {
        return true;
    }
    return hermitian_eigenvalues(a).minCoeff() >= -tol;
}

}  // namespace bargmann
