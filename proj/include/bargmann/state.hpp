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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bargmann/numerics.hpp"

namespace bargmann {

/// Unit-trace, Hermitian, positive semidefinite operator.
///
/// Construction through `from_matrix` validates all three properties at
/// tolerance 1e-9. `unchecked` skips validation and exists for simulator
/// outputs and deliberately invalid test inputs.
class DensityMatrix {
  public:
    static DensityMatrix from_matrix(ComplexMatrix mat,
                                     double tol = kDefaultTolerance);
    static DensityMatrix unchecked(ComplexMatrix mat);

    std::size_t dim() const noexcept {
        return static_cast<std::size_t>(mat_.rows());
    }
    const ComplexMatrix &matrix() const noexcept { return mat_; }

    /// Tr[rho^2].
    double purity() const;

  private:
    explicit DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {}
    ComplexMatrix mat_;
};

class PureState {
  public:
    static PureState from_vector(ComplexVector vec,
                                 double tol = kDefaultTolerance);
    static PureState unchecked(ComplexVector vec);

    std::size_t dim() const noexcept {
        return static_cast<std::size_t>(vec_.size());
    }
    const ComplexVector &vector() const noexcept { return vec_; }

  private:
    explicit PureState(ComplexVector vec) : vec_(std::move(vec)) {}
    ComplexVector vec_;
};

/// Ordered list of PSD effects summing to the identity.
class Povm {
  public:
    static Povm create(std::vector<ComplexMatrix> effects,
                       std::vector<std::string> labels,
                       double tol = kDefaultTolerance);
    static Povm unchecked(std::vector<ComplexMatrix> effects,
                          std::vector<std::string> labels);

    std::size_t dim() const noexcept;
    std::size_t size() const noexcept { return effects_.size(); }
    const std::vector<ComplexMatrix> &effects() const noexcept {
        return effects_;
    }
    const ComplexMatrix &effect(std::size_t i) const { return effects_.at(i); }
    const std::vector<std::string> &labels() const noexcept { return labels_; }

    /// Re-runs the PSD and completeness checks. Throws PovmError.
    void validate(double tol = kDefaultTolerance) const;

  private:
    Povm(std::vector<ComplexMatrix> effects, std::vector<std::string> labels)
        : effects_(std::move(effects)), labels_(std::move(labels)) {}
    std::vector<ComplexMatrix> effects_;
    std::vector<std::string> labels_;
};

/// A = sum_j x_j P_j over the effects of a complete POVM.
struct Observable {
    std::vector<double> coefficients;
    Povm povm;

    static Observable create(std::vector<double> coefficients, Povm povm);
    ComplexMatrix matrix() const;
};

DensityMatrix pure_to_density(const PureState &psi);

/// Haar-random pure state: normalized vector of i.i.d. standard complex
/// Gaussians drawn from the counter RNG.
PureState random_pure_state(std::size_t dim, std::uint64_t seed);

/// G G^dagger / Tr[G G^dagger] for a dim x rank complex Gaussian G.
DensityMatrix random_density_matrix(std::size_t dim, std::size_t rank,
                                    std::uint64_t seed);

/// Haar-random unitary (QR of a complex Gaussian matrix, phases fixed by
/// the diagonal of R).
ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed);

/// Two-outcome POVM {rho, 1 - rho} labelled (hit, miss).
Povm povm_from_known_state(const DensityMatrix &known);

/// Four-outcome ancilla POVM {|+><+|, |-><-|, |+i><+i|, |-i><-i|} / 2.
Povm r_povm();

/// Projective measurement onto the columns of a unitary.
Povm projective_povm(const ComplexMatrix &basis,
                     std::vector<std::string> labels);

Povm computational_povm(std::size_t dim);

/// Named single-qubit presets: zero, one, plus, minus, plus_i, minus_i.
PureState preset_state(std::string_view name);

}  // namespace bargmann
