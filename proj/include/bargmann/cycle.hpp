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
#include <map>
#include <string>
#include <vector>

#include "bargmann/circuit.hpp"
#include "bargmann/numerics.hpp"

namespace bargmann {

/// Basis index of the cyclic left shift |a1 a2 ... an> -> |a2 ... an a1>,
/// computed digit by digit.
std::vector<std::size_t> cyc_permutation_direct(std::size_t n, std::size_t d);

/// The same permutation composed from adjacent transpositions,
/// SWAP_{n-1,n} ... SWAP_{2,3} SWAP_{1,2}.
std::vector<std::size_t> cyc_permutation_from_swaps(std::size_t n,
                                                    std::size_t d);

/// Permutation matrix of the n-cycle on n registers of dimension d. Both
/// constructions above are built and must agree; a mismatch throws
/// InternalConsistencyError.
ComplexMatrix cyc_unitary(std::size_t n, std::size_t d);

/// Control qubit on register 0, systems on 1..nprime. Gates are
/// cSWAP(0,1,2), cSWAP(0,2,3), ..., so the total unitary is
/// |0><0| (x) 1 + |1><1| (x) CYC_nprime.
Circuit controlled_cyc(std::size_t nprime, std::size_t d);

/// Bitstrings are stored as integers with the first qubit as the most
/// significant of `n` bits.
using Bits = std::uint32_t;

Bits rotate_left(Bits x, std::size_t n);
int hamming_weight(Bits x);
std::string bits_to_string(Bits x, std::size_t n);

struct CyclicOrbit {
    std::size_t n = 0;
    Bits representative = 0;  // smallest rotation
    std::size_t period = 0;
    std::vector<Bits> members;  // rep, CYC rep, CYC^2 rep, ...
    int weight = 0;
};

struct OrbitDecomposition {
    std::size_t n = 0;
    std::map<int, std::vector<CyclicOrbit>> orbits_by_weight;

    std::size_t orbit_count() const;
};

inline constexpr std::size_t kMaxOrbitLength = 20;

/// All rotation classes of n-bit strings, by Hamming weight, each weight's
/// orbits sorted by representative. Requires 1 <= n <= 20.
OrbitDecomposition enumerate_orbits(std::size_t n);

/// Number of binary necklaces, (1/n) sum_{d | n} phi(d) 2^(n/d).
std::uint64_t necklace_count(std::size_t n);

/// One Fourier vector on a cyclic orbit:
/// (1/sqrt r) sum_j e^{2 pi i ell j / r} |member_j>.
struct CycleEigenvector {
    CyclicOrbit orbit;
    std::size_t ell = 0;
    Complex eigenvalue;  // measured by applying the shift, e^{-2 pi i ell / r}
    std::vector<Complex> amplitudes;  // one per orbit member

    ComplexVector dense() const;
};

/// Eigenvalue of Fourier vector ell on an orbit of the given period,
/// e^{-2 pi i ell / r}. Needs no 2^n storage.
Complex fourier_eigenvalue(std::size_t period, std::size_t ell);

/// Complete orthonormal eigenbasis of CYC_n on n qubits.
std::vector<CycleEigenvector> cyc_eigenbasis(std::size_t n);

struct SpectralProjector {
    int weight;
    int ell;  // eigenvalue is omega^ell, omega = e^{2 pi i / 3}
    Complex eigenvalue;
    ComplexMatrix projector;
};

/// The eight rank-one projectors of CYC_3 grouped by eigenvalue 1, omega,
/// omega^2 (weights 0..3 for eigenvalue 1; weights 1 and 2 otherwise).
std::vector<SpectralProjector> cyc3_spectral_projectors();

}  // namespace bargmann
