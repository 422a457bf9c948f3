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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bargmann/errors.hpp"
#include "bargmann/numerics.hpp"
#include "test_util.hpp"

using namespace bargmann;
using testutil::mat2;
using testutil::near;

TEST_SUITE("numerics") {

TEST_CASE("matmul: identity, X*X, H*H") {
    const ComplexMatrix m = mat2({1, 2}, {0, -1}, 3, {0.5, 0.5});
    CHECK(near(matmul(identity(2), m), m, 0.0));
    CHECK(near(matmul(testutil::pauli_x(), testutil::pauli_x()), identity(2),
               0.0));
    CHECK(near(matmul(testutil::hadamard(), testutil::hadamard()), identity(2),
               1e-15));
}

TEST_CASE("matmul rejects mismatched shapes") {
    CHECK_THROWS_AS(matmul(identity(2), identity(3)), DimensionError);
}

TEST_CASE("kron basis and diagonal cases") {
    CHECK(near(kron(identity(2), identity(3)), identity(6), 0.0));

    const ComplexMatrix p0 = mat2(1, 0, 0, 0);
    const ComplexMatrix p1 = mat2(0, 0, 0, 1);
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected(1, 1) = 1.0;
    CHECK(near(kron(p0, p1), expected, 0.0));

    const ComplexMatrix a = mat2(1, 0, 0, 2);
    const ComplexMatrix b = mat2(3, 0, 0, 4);
    ComplexMatrix d = ComplexMatrix::Zero(4, 4);
    d.diagonal() << 3.0, 4.0, 6.0, 8.0;
    CHECK(near(kron(a, b), d, 0.0));
}

TEST_CASE("kron enforces the dimension cap") {
    const ComplexMatrix big = identity(std::size_t{1} << 8);
    CHECK_THROWS_AS(kron(big, identity(std::size_t{1} << 7)), CapacityError);
    CHECK_NOTHROW(check_capacity(kDimensionCap, "cap"));
    CHECK_THROWS_AS(check_capacity(kDimensionCap + 1, "cap"), CapacityError);
}

TEST_CASE("trace") {
    CHECK(trace(identity(5)) == Complex(5.0));
    CHECK(trace(mat2(0, 1, 0, 0)) == Complex(0.0));
    CHECK(near(trace(random_density_matrix(3, 2, 9).matrix()), 1.0, 1e-12));
    CHECK_THROWS_AS(trace(ComplexMatrix::Zero(2, 3)), DimensionError);
}

TEST_CASE("predicates") {
    CHECK(is_unitary(testutil::hadamard(), 1e-12));
    CHECK_FALSE(is_unitary(mat2(1, 1, 0, 1), 1e-12));
    CHECK_FALSE(is_psd(-identity(2), 1e-12));
    CHECK(is_psd(mat2(0.5, 0.5, 0.5, 0.5), 1e-12));
    CHECK_FALSE(is_hermitian(mat2(0, 1, 0, 0), 1e-12));
    CHECK(is_hermitian(mat2(1, {0, -1}, {0, 1}, 2), 1e-12));
}

TEST_CASE("adjoint and distances") {
    const ComplexMatrix m = mat2({1, 1}, 2, {0, 3}, 4);
    const ComplexMatrix a = adjoint(m);
    CHECK(a(0, 1) == Complex(0, -3));
    CHECK(a(0, 0) == Complex(1, -1));
    CHECK(frobenius_distance(m, m) == 0.0);
    CHECK(frobenius_distance(identity(2), -identity(2)) ==
          doctest::Approx(std::sqrt(8.0)));
}

TEST_CASE("hermitian eigenvalues ascend") {
    const Eigen::VectorXd ev = hermitian_eigenvalues(mat2(2, 1, 1, 2));
    CHECK(ev(0) == doctest::Approx(1.0));
    CHECK(ev(1) == doctest::Approx(3.0));
}

TEST_CASE("checked_power overflow guard") {
    CHECK(checked_power(2, 10, "p") == 1024);
    CHECK_THROWS_AS(checked_power(2, 15, "p"), CapacityError);
}

}  // TEST_SUITE
