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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bargmann/circuit.hpp"
#include "bargmann/cycle.hpp"
#include "bargmann/distribution.hpp"
#include "bargmann/estimation.hpp"
#include "bargmann/state.hpp"

namespace bargmann {

enum class Mode { Exact, Sampled };

struct RunOptions {
    Mode mode = Mode::Exact;
    std::size_t shots = 1000;  // per measurement setting, sampled mode only
    std::uint64_t seed = 0;
};

struct ResourceCount {
    std::size_t system_registers = 0;
    std::size_t ancilla_qubits = 0;
    std::size_t fredkin_gates = 0;
    std::size_t measured_registers = 0;

    friend bool operator==(const ResourceCount &, const ResourceCount &) =
        default;
};

struct InvariantEstimate {
    Complex value;
    double stderr_re = 0.0;
    double stderr_im = 0.0;
    std::size_t shots_used = 0;
    ResourceCount resources;
};

/// Unknown states rho_1..rho_n' go into the circuit; known states
/// rho~_1..rho~_m (m <= n') are only used through their classical
/// description. Order of the estimated invariant is n' + m.
struct ProtocolConfig {
    std::vector<DensityMatrix> unknown_states;
    std::vector<DensityMatrix> known_states;
    RunOptions options;

    std::size_t local_dim() const;
    /// Throws DimensionError for mixed dimensions, ParameterError for
    /// m > n' or an empty unknown tuple.
    void validate() const;
};

enum class Protocol {
    Swap,
    DestructiveSwap,
    Cycle,
    MeCycle,
    DestructiveThirdOrder,
    DestructiveCycle,
    Destructive3Cycle,
};

inline constexpr std::array<Protocol, 7> kAllProtocols = {
    Protocol::Swap,          Protocol::DestructiveSwap,
    Protocol::Cycle,         Protocol::MeCycle,
    Protocol::DestructiveThirdOrder, Protocol::DestructiveCycle,
    Protocol::Destructive3Cycle,
};

/// CLI names: swap, destructive-swap, cycle, me-cycle,
/// destructive-third-order, destructive-cycle, destructive-3cycle.
std::string_view protocol_name(Protocol protocol);
Protocol protocol_from_name(std::string_view name);

/// Registers, ancillas, Fredkin gates and measured registers a protocol
/// needs for an order-n invariant with m classically known states. Throws
/// ParameterError, with the reason, when the protocol does not apply.
ResourceCount resources_for(Protocol protocol, std::size_t n, std::size_t m);

/// Tr[rho_1 rho_2 ... rho_n] by plain matrix products.
Complex direct_invariant(std::span<const DensityMatrix> states);

/// Hadamard test with one Fredkin gate; returns 2 p(0) - 1.
InvariantEstimate swap_test(const DensityMatrix &a, const DensityMatrix &b,
                            const RunOptions &options);

/// CNOT, H on the first qubit, Z on both; returns 1 - 2 p(1,1). Qubits only.
InvariantEstimate destructive_swap_test(const DensityMatrix &a,
                                        const DensityMatrix &b,
                                        const RunOptions &options);

/// Two Hadamard tests with the controlled n-cycle, P^s on the ancilla
/// (s = 0 real part, s = 1 imaginary part).
InvariantEstimate cycle_test(std::span<const DensityMatrix> states,
                             const RunOptions &options);

/// Joint distribution over (j_1..j_m, c) from simulating
/// |+><+| (x) rho_1 (x) ... (x) rho_n', the controlled cycle, POVMs on
/// registers 1..m and R on the ancilla.
OutcomeDistribution
me_joint_distribution_circuit(const ProtocolConfig &config,
                              const std::vector<Povm> &povms);

/// The same distribution from its closed form in the single-register traces
/// and the interleaved trace. The second trace product uses
/// rho_{(i mod n') + 1}.
OutcomeDistribution
me_joint_distribution_closed_form(const ProtocolConfig &config,
                                  const std::vector<Povm> &povms);

/// Circuit distribution, checked against the closed form to 1e-10.
/// Throws InternalConsistencyError on disagreement.
OutcomeDistribution me_joint_distribution(const ProtocolConfig &config,
                                          const std::vector<Povm> &povms);

inline constexpr double kCrossCheckTolerance = 1e-10;

/// Tr[rho_n' ... rho_{m+1} P_m rho_m ... P_1 rho_1] by explicit products.
Complex interleaved_trace(std::span<const DensityMatrix> unknown,
                          std::span<const ComplexMatrix> effects);

/// Estimates Tr[rho_n' ... rho_{m+1} A_m rho_m ... A_1 rho_1] for
/// observables A_i = sum_j x_j P_j measured on registers 1..m.
InvariantEstimate
estimate_interleaved_trace(const ProtocolConfig &config,
                           const std::vector<Observable> &observables);

/// Bargmann invariant of order n' + m using A_i = {rho~_i, 1 - rho~_i} with
/// coefficients (1, 0).
InvariantEstimate estimate_bargmann_me(const ProtocolConfig &config);

/// The tuple (rho_n', ..., rho_{m+1}, rho~_m, rho_m, ..., rho~_1, rho_1)
/// whose direct invariant estimate_bargmann_me targets.
std::vector<DensityMatrix> me_invariant_tuple(const ProtocolConfig &config);

/// <psi|phi><phi|Z|psi> for single-qubit pure states.
Complex chi(const PureState &psi, const PureState &phi);

/// |a|^2|b|^2 - |a'|^2|b'|^2 + 2i Im[a b* a'* b'].
Complex chi_closed_form(const PureState &psi, const PureState &phi);

/// Householder reflection U with U|psi> proportional to |0>.
ComplexMatrix reflection_to_zero(const PureState &psi);

/// Dominant eigenvector of a rank-one density matrix; StateError otherwise.
PureState rank_one_ket(const DensityMatrix &rho);

/// Probabilities read off the two-qubit destructive circuit after U (x) U.
struct ThirdOrderProbabilities {
    double p11 = 0.0;          // Z (x) Z, outcome (1,1)
    double p_plus_0 = 0.0;     // X (x) Z
    double p_minus_0 = 0.0;
    double p_plus_i_1 = 0.0;   // Y (x) Z
    double p_minus_i_1 = 0.0;
};

ThirdOrderProbabilities
destructive_third_order_probabilities(const DensityMatrix &rho1,
                                      const DensityMatrix &rho2,
                                      const DensityMatrix &known);

/// Delta_2 = 1 - 2 p11, Re chi = p(+,0) - p(-,0),
/// Im chi = p(+i,1) - p(-i,1); returns (Delta_2 + chi) / 2.
Complex combine_third_order(const ThirdOrderProbabilities &p);

/// Delta_3(rho_1, rho_2, psi~_3) on two qubits. The known state must be
/// pure.
InvariantEstimate destructive_third_order(const DensityMatrix &rho1,
                                          const DensityMatrix &rho2,
                                          const DensityMatrix &known,
                                          const RunOptions &options);

/// Tr[rho_1 (x) ... (x) rho_n |v><v|] for every vector of cyc_eigenbasis(n),
/// computed from the product structure without forming the full state.
std::vector<double>
eigenbasis_probabilities(std::span<const DensityMatrix> states,
                         const std::vector<CycleEigenvector> &basis);

/// Sum over eigenvectors of eigenvalue * probability. Qubits only.
InvariantEstimate destructive_cycle_test(std::span<const DensityMatrix> states,
                                         const RunOptions &options);

/// Three-qubit circuit k in {1, 2} with phase omega^{-ell}, ell in {0,1,2}:
/// X on qubit 1 (k = 1) or qubits 2 and 3 (k = 2), CNOT(1,2), CNOT(2,3),
/// cP(omega^{-ell}) and cH controlled by qubit 1 on qubit 2, then
/// P(omega^{-ell}) and Ry(-2 arccos(1/sqrt 3)) on qubit 1. It maps the CYC_3
/// eigenvector of weight k and eigenvalue omega^ell to |000>.
Circuit destructive_3cycle_circuit(int k, int ell);

/// p~[k-1][ell]: probability of reading 000 after circuit (k, ell).
using ThreeCycleTable = std::array<std::array<double, 3>, 2>;
ThreeCycleTable destructive_3cycle_probabilities(
    std::span<const DensityMatrix> states);

/// 1 - (1 - w)(p_1^(1) + p_1^(2)) - (1 - w^2)(p_2^(1) + p_2^(2)).
Complex combine_3cycle(const ThreeCycleTable &p);

InvariantEstimate destructive_3cycle_test(std::span<const DensityMatrix> states,
                                          const RunOptions &options);

/// Dispatches to one protocol. Only me-cycle and destructive-third-order
/// accept known states; the latter wants exactly two unknown and one known.
InvariantEstimate run_protocol(Protocol protocol, const ProtocolConfig &config);

/// The tuple whose direct invariant run_protocol estimates.
std::vector<DensityMatrix> target_tuple(Protocol protocol,
                                        const ProtocolConfig &config);

}  // namespace bargmann
