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

#include <cmath>
#include <complex>

#include "bargmann/numerics.hpp"
#include "bargmann/state.hpp"

namespace testutil {

using bargmann::Complex;
using bargmann::ComplexMatrix;
using bargmann::ComplexVector;

inline bool near(Complex a, Complex b, double tol) {
    return std::abs(a - b) <= tol;
}

inline bool near(const ComplexMatrix &a, const ComplexMatrix &b, double tol) {
    return a.rows() == b.rows() && a.cols() == b.cols() &&
           bargmann::max_abs_diff(a, b) <= tol;
}

inline bargmann::DensityMatrix preset(const char *name) {
    return bargmann::pure_to_density(bargmann::preset_state(name));
}

inline ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

inline ComplexVector ket(std::initializer_list<Complex> entries) {
    ComplexVector v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (Complex e : entries) {
        v(i++) = e;
    }
    return v;
}

inline const ComplexMatrix &pauli_x() {
    static const ComplexMatrix x = mat2(0, 1, 1, 0);
    return x;
}

inline const ComplexMatrix &hadamard() {
    static const ComplexMatrix h =
        mat2(1, 1, 1, -1) * Complex(1.0 / std::sqrt(2.0));
    return h;
}

}  // namespace testutil
