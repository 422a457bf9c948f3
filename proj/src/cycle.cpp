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

#include "bargmann/cycle.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "bargmann/errors.hpp"

namespace bargmann {

namespace {

std::vector<std::size_t> digits_of(std::size_t index, std::size_t n,
                                   std::size_t d) {
    std::vector<std::size_t> digits(n);
    for (std::size_t k = n; k-- > 0;) {
        digits[k] = index % d;
        index /= d;
    }
    return digits;
}

std::size_t index_of(const std::vector<std::size_t> &digits, std::size_t d) {
    std::size_t index = 0;
    for (std::size_t v : digits) {
        index = index * d + v;
    }
    return index;
}

void check_cycle_args(std::size_t n, std::size_t d) {
    if (n < 1) {
        throw ParameterError("cycle: n must be >= 1");
    }
    if (d < 2) {
        throw ParameterError("cycle: local dimension must be >= 2");
    }
}

std::uint64_t euler_phi(std::uint64_t m) {
    std::uint64_t result = m;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) {
                m /= p;
            }
            result -= result / p;
        }
    }
    if (m > 1) {
        result -= result / m;
    }
    return result;
}

}  // namespace

std::vector<std::size_t> cyc_permutation_direct(std::size_t n, std::size_t d) {
    check_cycle_args(n, d);
    const std::size_t total = checked_power(d, n, "cyc_unitary");
    std::vector<std::size_t> perm(total);
    for (std::size_t i = 0; i < total; ++i) {
        auto digits = digits_of(i, n, d);
        std::vector<std::size_t> shifted(digits.begin() + 1, digits.end());
        shifted.push_back(digits.front());
        perm[i] = index_of(shifted, d);
    }
    return perm;
}

std::vector<std::size_t> cyc_permutation_from_swaps(std::size_t n,
                                                    std::size_t d) {
    check_cycle_args(n, d);
    const std::size_t total = checked_power(d, n, "cyc_unitary");
    std::vector<std::size_t> perm(total);
    for (std::size_t i = 0; i < total; ++i) {
        perm[i] = i;
    }
    // SWAP_{1,2} acts first.
    for (std::size_t k = 0; k + 1 < n; ++k) {
        for (auto &image : perm) {
            auto digits = digits_of(image, n, d);
            std::swap(digits[k], digits[k + 1]);
            image = index_of(digits, d);
        }
    }
    return perm;
}

ComplexMatrix cyc_unitary(std::size_t n, std::size_t d) {
    const auto direct = cyc_permutation_direct(n, d);
    if (direct != cyc_permutation_from_swaps(n, d)) {
        throw InternalConsistencyError(
            "cyc_unitary: permutation and SWAP-product constructions differ");
    }
    const auto total = static_cast<Eigen::Index>(direct.size());
    ComplexMatrix m = ComplexMatrix::Zero(total, total);
    for (Eigen::Index i = 0; i < total; ++i) {
        m(static_cast<Eigen::Index>(direct[static_cast<std::size_t>(i)]), i) =
            1.0;
    }
    return m;
}

Circuit controlled_cyc(std::size_t nprime, std::size_t d) {
    check_cycle_args(nprime, d);
    Layout layout{2};
    layout.insert(layout.end(), nprime, d);
    Circuit circuit(std::move(layout));
    GateParams params;
    params.dim = d;
    for (std::size_t k = 1; k < nprime; ++k) {
        circuit.add("cSWAP", {0, k, k + 1}, params);
    }
    return circuit;
}

Bits rotate_left(Bits x, std::size_t n) {
    if (n <= 1) {
        return x;
    }
    const Bits mask = static_cast<Bits>((std::uint64_t{1} << n) - 1);
    return static_cast<Bits>(((x << 1) | (x >> (n - 1))) & mask);
}

int hamming_weight(Bits x) { return std::popcount(x); }

std::string bits_to_string(Bits x, std::size_t n) {
    std::string s(n, '0');
    for (std::size_t k = 0; k < n; ++k) {
        if ((x >> (n - 1 - k)) & 1U) {
            s[k] = '1';
        }
    }
    return s;
}

std::size_t OrbitDecomposition::orbit_count() const {
    std::size_t count = 0;
    for (const auto &[weight, orbits] : orbits_by_weight) {
        count += orbits.size();
    }
    return count;
}

OrbitDecomposition enumerate_orbits(std::size_t n) {
    if (n < 1 || n > kMaxOrbitLength) {
        throw ParameterError("enumerate_orbits: n = " + std::to_string(n) +
                             " outside [1, " +
                             std::to_string(kMaxOrbitLength) + "]");
    }
    OrbitDecomposition out;
    out.n = n;
    for (int k = 0; k <= static_cast<int>(n); ++k) {
        out.orbits_by_weight[k];
    }
    const Bits count = static_cast<Bits>(std::uint64_t{1} << n);
    for (Bits x = 0; x < count; ++x) {
        // canonical strings are their own smallest rotation
        bool canonical = true;
        Bits y = rotate_left(x, n);
        while (y != x) {
            if (y < x) {
                canonical = false;
                break;
            }
            y = rotate_left(y, n);
        }
        if (!canonical) {
            continue;
        }
        CyclicOrbit orbit;
        orbit.n = n;
        orbit.representative = x;
        orbit.weight = hamming_weight(x);
        y = x;
        do {
            orbit.members.push_back(y);
            y = rotate_left(y, n);
        } while (y != x);
        orbit.period = orbit.members.size();
        out.orbits_by_weight[orbit.weight].push_back(std::move(orbit));
    }
    return out;
}

std::uint64_t necklace_count(std::size_t n) {
    if (n < 1 || n > 63) {
        throw ParameterError("necklace_count: n outside [1, 63]");
    }
    std::uint64_t sum = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d == 0) {
            sum += euler_phi(d) * (std::uint64_t{1} << (n / d));
        }
    }
    return sum / n;
}

ComplexVector CycleEigenvector::dense() const {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << orbit.n);
    ComplexVector v = ComplexVector::Zero(dim);
    for (std::size_t j = 0; j < orbit.members.size(); ++j) {
        v[static_cast<Eigen::Index>(orbit.members[j])] = amplitudes[j];
    }
    return v;
}

Complex fourier_eigenvalue(std::size_t period, std::size_t ell) {
    if (period == 0 || ell >= period) {
        throw ParameterError("fourier_eigenvalue: need ell < period");
    }
    return std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(ell) /
                               static_cast<double>(period));
}

std::vector<CycleEigenvector> cyc_eigenbasis(std::size_t n) {
    check_capacity(std::size_t{1} << std::min<std::size_t>(n, 62),
                   "cyc_eigenbasis");
    const OrbitDecomposition decomposition = enumerate_orbits(n);
    std::vector<CycleEigenvector> basis;
    for (const auto &[weight, orbits] : decomposition.orbits_by_weight) {
        for (const auto &orbit : orbits) {
            const std::size_t r = orbit.period;
            const double norm = 1.0 / std::sqrt(static_cast<double>(r));
            for (std::size_t ell = 0; ell < r; ++ell) {
                CycleEigenvector ev;
                ev.orbit = orbit;
                ev.ell = ell;
                for (std::size_t j = 0; j < r; ++j) {
                    // (ell * j) mod r keeps the phase argument small
                    const double angle = 2.0 * std::numbers::pi *
                                         static_cast<double>((ell * j) % r) /
                                         static_cast<double>(r);
                    ev.amplitudes.push_back(std::polar(norm, angle));
                }
                // The shift carries member_j to member_{j+1}, so the image
                // has amplitude a_{r-1} on member_0.
                ev.eigenvalue = ev.amplitudes[r - 1] / ev.amplitudes[0];
                basis.push_back(std::move(ev));
            }
        }
    }
    return basis;
}

std::vector<SpectralProjector> cyc3_spectral_projectors() {
    const auto basis = cyc_eigenbasis(3);
    std::vector<SpectralProjector> out;
    for (int ell = 0; ell < 3; ++ell) {
        const Complex target =
            std::polar(1.0, 2.0 * std::numbers::pi * ell / 3.0);
        for (int k = 0; k <= 3; ++k) {
            for (const auto &ev : basis) {
                if (ev.orbit.weight == k &&
                    std::abs(ev.eigenvalue - target) < 1e-9) {
                    const ComplexVector v = ev.dense();
                    out.push_back({k, ell, target, outer(v, v)});
                }
            }
        }
    }
    if (out.size() != 8) {
        throw InternalConsistencyError(
            "cyc3_spectral_projectors: expected 8 projectors");
    }
    return out;
}

}  // namespace bargmann
