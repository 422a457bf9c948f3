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

#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace bargmann {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

/// Largest total Hilbert-space dimension any operator may have.
inline constexpr std::size_t kDimensionCap = std::size_t{1} << 14;

/// Default tolerance for the validation predicates.
inline constexpr double kDefaultTolerance = 1e-9;

ComplexMatrix identity(std::size_t dim);

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);

/// Kronecker product with `a` as the slower-varying factor. Throws
/// CapacityError if either resulting dimension exceeds kDimensionCap.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

Complex trace(const ComplexMatrix &a);

ComplexMatrix adjoint(const ComplexMatrix &a);

ComplexMatrix outer(const ComplexVector &ket, const ComplexVector &bra);

double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b);

/// Largest absolute entrywise difference. Equality throughout the library
/// means this is below the tolerance in use.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

bool all_finite(const ComplexMatrix &a);

bool is_unitary(const ComplexMatrix &a, double tol = kDefaultTolerance);
bool is_hermitian(const ComplexMatrix &a, double tol = kDefaultTolerance);

/// Hermitian and min eigenvalue >= -tol.
bool is_psd(const ComplexMatrix &a, double tol = kDefaultTolerance);

/// Eigenvalues of the Hermitian part of `a`, ascending.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix &a);

/// Throws CapacityError when `dim` exceeds kDimensionCap.
void check_capacity(std::size_t dim, const char *what);

/// base^exponent with a CapacityError instead of overflow past the cap.
std::size_t checked_power(std::size_t base, std::size_t exponent,
                          const char *what);

}  // namespace bargmann
