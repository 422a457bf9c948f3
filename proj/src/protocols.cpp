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

#include "bargmann/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bargmann/errors.hpp"

namespace bargmann {

namespace {

constexpr double kPi = std::numbers::pi;

// Sampling streams; distinct measurement settings never share draws.
enum Stream : std::uint64_t {
    kStreamMain = 1,
    kStreamReal = 2,
    kStreamImag = 3,
    kStreamZZ = 4,
    kStreamXZ = 5,
    kStreamYZ = 6,
    kStreamThreeCycle = 16,
};

Complex omega_power(int k) { return std::polar(1.0, 2.0 * kPi * k / 3.0); }

std::size_t common_dim(std::span<const DensityMatrix> states,
                       const char *where) {
    if (states.empty()) {
        throw ParameterError(std::string(where) + ": no states given");
    }
    const std::size_t d = states.front().dim();
    for (const auto &s : states) {
        if (s.dim() != d) {
            throw DimensionError(std::string(where) +
                                 ": states have different dimensions");
        }
    }
    return d;
}

void require_qubits(std::span<const DensityMatrix> states, const char *where) {
    if (common_dim(states, where) != 2) {
        throw UnsupportedDimension(std::string(where) +
                                   ": only single-qubit states are supported");
    }
}

ComplexMatrix plus_projector() {
    ComplexMatrix m(2, 2);
    m.setConstant(0.5);
    return m;
}

DensityMatrix product_state(std::span<const DensityMatrix> states,
                            const ComplexMatrix *ancilla) {
    ComplexMatrix m = ancilla != nullptr ? *ancilla : identity(1);
    for (const auto &s : states) {
        m = kron(m, s.matrix());
    }
    return DensityMatrix::unchecked(std::move(m));
}

Povm x_basis_povm() {
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix basis(2, 2);
    basis << s, s, s, -s;
    return projective_povm(basis, {"+", "-"});
}

Povm y_basis_povm() {
    const double s = 1.0 / std::sqrt(2.0);
    const Complex i(0.0, 1.0);
    ComplexMatrix basis(2, 2);
    basis << s, s, i * s, -i * s;
    return projective_povm(basis, {"+i", "-i"});
}

/// Either the exact expectation of `value` or a sampled mean over `shots`.
EstimatorResult run_setting(const OutcomeDistribution &dist,
                            const ValueFunction &value,
                            const RunOptions &options, std::uint64_t stream) {
    if (options.mode == Mode::Exact) {
        return expectation(dist, value);
    }
    const SampleBatch batch =
        sample_distribution(dist, options.shots, options.seed, stream);
    return estimate_mean(batch, value);
}

InvariantEstimate to_estimate(const EstimatorResult &r,
                              const ResourceCount &resources) {
    return InvariantEstimate{r.mean, r.stderr_re, r.stderr_im, r.shots,
                             resources};
}

void check_options(const RunOptions &options) {
    if (options.mode == Mode::Sampled && options.shots == 0) {
        throw ParameterError("sampled mode needs a positive shot count");
    }
}

}  // namespace

std::size_t ProtocolConfig::local_dim() const {
    return common_dim(unknown_states, "protocol config");
}

void ProtocolConfig::validate() const {
    const std::size_t d = local_dim();
    for (const auto &s : known_states) {
        if (s.dim() != d) {
            throw DimensionError(
                "protocol config: known and unknown dimensions differ");
        }
    }
    if (known_states.size() > unknown_states.size()) {
        throw ParameterError("protocol config: m = " +
                             std::to_string(known_states.size()) +
                             " exceeds n' = " +
                             std::to_string(unknown_states.size()));
    }
    check_options(options);
}

std::string_view protocol_name(Protocol protocol) {
    switch (protocol) {
    case Protocol::Swap:
        return "swap";
    case Protocol::DestructiveSwap:
        return "destructive-swap";
    case Protocol::Cycle:
        return "cycle";
    case Protocol::MeCycle:
        return "me-cycle";
    case Protocol::DestructiveThirdOrder:
        return "destructive-third-order";
    case Protocol::DestructiveCycle:
        return "destructive-cycle";
    case Protocol::Destructive3Cycle:
        return "destructive-3cycle";
    }
    return "unknown";
}

Protocol protocol_from_name(std::string_view name) {
    for (Protocol p : kAllProtocols) {
        if (protocol_name(p) == name) {
            return p;
        }
    }
    throw ParameterError("unknown protocol '" + std::string(name) + "'");
}

ResourceCount resources_for(Protocol protocol, std::size_t n, std::size_t m) {
    auto fail = [&](const std::string &why) {
        throw ParameterError(std::string(protocol_name(protocol)) +
                             " not applicable: " + why);
    };
    if (n < 1) {
        fail("order must be at least 1");
    }
    if (m > n) {
        fail("more known states than the order");
    }
    switch (protocol) {
    case Protocol::Swap:
        if (n != 2) {
            fail("estimates second-order invariants only");
        }
        return {2, 1, 1, 1};
    case Protocol::DestructiveSwap:
        if (n != 2) {
            fail("estimates second-order invariants only");
        }
        return {2, 0, 0, 2};
    case Protocol::Cycle:
        return {n, 1, n - 1, 1};
    case Protocol::MeCycle: {
        const std::size_t nprime = n - m;
        if (m > nprime) {
            fail("needs m <= n - m");
        }
        return {nprime, 1, nprime - 1, m + 1};
    }
    case Protocol::DestructiveThirdOrder:
        if (n != 3) {
            fail("estimates third-order invariants only");
        }
        if (m < 1) {
            fail("needs the classical description of one state");
        }
        return {2, 0, 0, 2};
    case Protocol::DestructiveCycle:
        return {n, 0, 0, n};
    case Protocol::Destructive3Cycle:
        if (n != 3) {
            fail("estimates third-order invariants only");
        }
        return {3, 0, 0, 3};
    }
    fail("unknown protocol");
    return {};
}

Complex direct_invariant(std::span<const DensityMatrix> states) {
    const std::size_t d = common_dim(states, "direct_invariant");
    ComplexMatrix product = identity(d);
    for (const auto &s : states) {
        product = product * s.matrix();
    }
    return product.trace();
}

InvariantEstimate swap_test(const DensityMatrix &a, const DensityMatrix &b,
                            const RunOptions &options) {
    check_options(options);
    const std::array<DensityMatrix, 2> states{a, b};
    const std::size_t d = common_dim(states, "swap_test");
    Circuit circuit = controlled_cyc(2, d);
    circuit.add("H", {0});
    const ComplexMatrix plus = plus_projector();
    const DensityMatrix out =
        apply_circuit(circuit, product_state(states, &plus));
    const auto dist =
        measure_local(out, circuit.layout(), {{0, computational_povm(2)}});
    const auto r = run_setting(
        dist,
        [](const Outcome &o) { return Complex(o[0] == 0 ? 1.0 : -1.0, 0.0); },
        options, kStreamMain);
    return to_estimate(r, resources_for(Protocol::Swap, 2, 0));
}

InvariantEstimate destructive_swap_test(const DensityMatrix &a,
                                        const DensityMatrix &b,
                                        const RunOptions &options) {
    check_options(options);
    const std::array<DensityMatrix, 2> states{a, b};
    require_qubits(states, "destructive_swap_test");
    Circuit circuit({2, 2});
    circuit.add("CNOT", {0, 1}).add("H", {0});
    const DensityMatrix out =
        apply_circuit(circuit, product_state(states, nullptr));
    const auto dist = measure_local(
        out, circuit.layout(),
        {{0, computational_povm(2)}, {1, computational_povm(2)}});
    const auto r = run_setting(
        dist,
        [](const Outcome &o) {
            return Complex(o[0] == 1 && o[1] == 1 ? -1.0 : 1.0, 0.0);
        },
        options, kStreamMain);
    return to_estimate(r, resources_for(Protocol::DestructiveSwap, 2, 0));
}

InvariantEstimate cycle_test(std::span<const DensityMatrix> states,
                             const RunOptions &options) {
    check_options(options);
    const std::size_t d = common_dim(states, "cycle_test");
    const std::size_t n = states.size();
    if (n < 2) {
        throw ParameterError("cycle_test: needs at least two states");
    }
    const ComplexMatrix plus = plus_projector();
    const DensityMatrix input = product_state(states, &plus);

    std::array<EstimatorResult, 2> parts;
    for (int s = 0; s < 2; ++s) {
        Circuit circuit = controlled_cyc(n, d);
        GateParams phase;
        phase.s = s;
        circuit.add("Ps", {0}, phase).add("H", {0});
        const DensityMatrix out = apply_circuit(circuit, input);
        const auto dist =
            measure_local(out, circuit.layout(), {{0, computational_povm(2)}});
        // s = 0: Re = 2 p(0) - 1.  s = 1: Im = 1 - 2 p(0).
        const ValueFunction value =
            s == 0 ? ValueFunction([](const Outcome &o) {
                return Complex(o[0] == 0 ? 1.0 : -1.0, 0.0);
            })
                   : ValueFunction([](const Outcome &o) {
                         return Complex(0.0, o[0] == 0 ? -1.0 : 1.0);
                     });
        parts[static_cast<std::size_t>(s)] = run_setting(
            dist, value, options, s == 0 ? kStreamReal : kStreamImag);
    }
    return to_estimate(combine_independent(parts),
                       resources_for(Protocol::Cycle, n, 0));
}

namespace {

void check_povms(const ProtocolConfig &config, const std::vector<Povm> &povms) {
    config.validate();
    if (povms.size() > config.unknown_states.size()) {
        throw ParameterError("me-cycle: " + std::to_string(povms.size()) +
                             " measured registers exceed n' = " +
                             std::to_string(config.unknown_states.size()));
    }
    for (const auto &p : povms) {
        if (p.dim() != config.local_dim()) {
            throw DimensionError("me-cycle: POVM dimension differs from the "
                                 "state dimension");
        }
        p.validate();
    }
}

}  // namespace

OutcomeDistribution
me_joint_distribution_circuit(const ProtocolConfig &config,
                              const std::vector<Povm> &povms) {
    check_povms(config, povms);
    const std::size_t nprime = config.unknown_states.size();
    const Circuit circuit = controlled_cyc(nprime, config.local_dim());
    const ComplexMatrix plus = plus_projector();
    const DensityMatrix out = apply_circuit(
        circuit, product_state(config.unknown_states, &plus));
    std::vector<LocalMeasurement> measurements;
    for (std::size_t i = 0; i < povms.size(); ++i) {
        measurements.push_back({i + 1, povms[i]});
    }
    measurements.push_back({0, r_povm()});
    return measure_local(out, circuit.layout(), measurements);
}

OutcomeDistribution
me_joint_distribution_closed_form(const ProtocolConfig &config,
                                  const std::vector<Povm> &povms) {
    check_povms(config, povms);
    const auto &rho = config.unknown_states;
    const std::size_t nprime = rho.size();
    const std::size_t m = povms.size();

    std::size_t count = 4;
    for (const auto &p : povms) {
        count *= p.size();
    }
    std::vector<Outcome> outcomes;
    std::vector<double> probs;
    for (std::size_t flat = 0; flat < count; ++flat) {
        Outcome o(m + 1, 0);
        std::size_t rest = flat;
        o[m] = static_cast<int>(rest % 4);
        rest /= 4;
        for (std::size_t i = m; i-- > 0;) {
            o[i] = static_cast<int>(rest % povms[i].size());
            rest /= povms[i].size();
        }
        std::vector<ComplexMatrix> effects;
        double direct = 1.0;
        double shifted = 1.0;
        for (std::size_t i = 0; i < m; ++i) {
            const ComplexMatrix &e =
                povms[i].effect(static_cast<std::size_t>(o[i]));
            effects.push_back(e);
            direct *= (e * rho[i].matrix()).trace().real();
            shifted *= (e * rho[(i + 1) % nprime].matrix()).trace().real();
        }
        const Complex box = interleaved_trace(rho, effects);
        const int c = o[m];
        const double sign = (c % 2 == 0) ? 1.0 : -1.0;
        // theta(1 - c) selects c in {0, 1}; theta(c - 2) selects {2, 3}.
        const double re_term = c <= 1 ? 2.0 * sign * box.real() : 0.0;
        const double im_term = c >= 2 ? -2.0 * sign * box.imag() : 0.0;
        outcomes.push_back(std::move(o));
        probs.push_back((direct + shifted + re_term + im_term) / 8.0);
    }
    return OutcomeDistribution::from_raw(std::move(outcomes), std::move(probs));
}

OutcomeDistribution me_joint_distribution(const ProtocolConfig &config,
                                          const std::vector<Povm> &povms) {
    OutcomeDistribution simulated = me_joint_distribution_circuit(config, povms);
    const OutcomeDistribution closed =
        me_joint_distribution_closed_form(config, povms);
    if (simulated.outcomes() != closed.outcomes()) {
        throw InternalConsistencyError(
            "me_joint_distribution: outcome enumerations differ");
    }
    for (std::size_t i = 0; i < simulated.size(); ++i) {
        const double diff =
            std::abs(simulated.probability(i) - closed.probability(i));
        if (diff > kCrossCheckTolerance) {
            throw InternalConsistencyError(
                "me_joint_distribution: circuit and closed form differ by " +
                std::to_string(diff));
        }
    }
    return simulated;
}

Complex interleaved_trace(std::span<const DensityMatrix> unknown,
                          std::span<const ComplexMatrix> effects) {
    const std::size_t d = common_dim(unknown, "interleaved_trace");
    if (effects.size() > unknown.size()) {
        throw ParameterError("interleaved_trace: more effects than states");
    }
    ComplexMatrix product = identity(d);
    for (std::size_t i = unknown.size(); i-- > 0;) {
        if (i < effects.size()) {
            if (static_cast<std::size_t>(effects[i].rows()) != d) {
                throw DimensionError("interleaved_trace: effect dimension");
            }
            product = product * effects[i];
        }
        product = product * unknown[i].matrix();
    }
    return product.trace();
}

InvariantEstimate
estimate_interleaved_trace(const ProtocolConfig &config,
                           const std::vector<Observable> &observables) {
    std::vector<Povm> povms;
    CoefficientTable coefficients;
    for (const auto &obs : observables) {
        obs.povm.validate();
        if (obs.coefficients.size() != obs.povm.size()) {
            throw PovmError("observable needs one coefficient per effect");
        }
        povms.push_back(obs.povm);
        coefficients.push_back(obs.coefficients);
    }
    const OutcomeDistribution dist = me_joint_distribution(config, povms);
    EstimatorResult r;
    if (config.options.mode == Mode::Exact) {
        r = aggregate(dist, coefficients);
    } else {
        const SampleBatch batch = sample_distribution(
            dist, config.options.shots, config.options.seed, kStreamMain);
        r = aggregate(batch, coefficients);
    }
    const std::size_t nprime = config.unknown_states.size();
    const std::size_t m = observables.size();
    return to_estimate(r, resources_for(Protocol::MeCycle, nprime + m, m));
}

InvariantEstimate estimate_bargmann_me(const ProtocolConfig &config) {
    config.validate();
    std::vector<Observable> observables;
    for (const auto &known : config.known_states) {
        observables.push_back(
            Observable::create({1.0, 0.0}, povm_from_known_state(known)));
    }
    return estimate_interleaved_trace(config, observables);
}

std::vector<DensityMatrix> me_invariant_tuple(const ProtocolConfig &config) {
    config.validate();
    std::vector<DensityMatrix> tuple;
    const auto &rho = config.unknown_states;
    const auto &known = config.known_states;
    for (std::size_t i = rho.size(); i-- > 0;) {
        if (i < known.size()) {
            tuple.push_back(known[i]);
        }
        tuple.push_back(rho[i]);
    }
    return tuple;
}

namespace {

void require_qubit_ket(const PureState &s, const char *where) {
    if (s.dim() != 2) {
        throw UnsupportedDimension(std::string(where) +
                                   ": single-qubit states only");
    }
}

}  // namespace

Complex chi(const PureState &psi, const PureState &phi) {
    require_qubit_ket(psi, "chi");
    require_qubit_ket(phi, "chi");
    const ComplexVector &p = psi.vector();
    const ComplexVector &f = phi.vector();
    ComplexVector zp(2);
    zp << p[0], -p[1];
    return p.dot(f) * f.dot(zp);
}

Complex chi_closed_form(const PureState &psi, const PureState &phi) {
    require_qubit_ket(psi, "chi_closed_form");
    require_qubit_ket(phi, "chi_closed_form");
    const Complex a = psi.vector()[0];
    const Complex ap = psi.vector()[1];
    const Complex b = phi.vector()[0];
    const Complex bp = phi.vector()[1];
    const double re = std::norm(a) * std::norm(b) - std::norm(ap) * std::norm(bp);
    const double im = 2.0 * (a * std::conj(b) * std::conj(ap) * bp).imag();
    return {re, im};
}

ComplexMatrix reflection_to_zero(const PureState &psi) {
    const ComplexVector &x = psi.vector();
    const auto dim = x.size();
    const double mag = std::abs(x[0]);
    const Complex phase = mag > 0.0 ? x[0] / mag : Complex(1.0, 0.0);
    ComplexVector v = x;
    v[0] -= phase * x.norm();
    const double vv = v.squaredNorm();
    ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
    if (vv < 1e-28) {
        return u;
    }
    u -= (2.0 / vv) * (v * v.adjoint());
    return u;
}

PureState rank_one_ket(const DensityMatrix &rho) {
    if (std::abs(rho.purity() - 1.0) > kDefaultTolerance) {
        throw StateError("state must be pure (rank one)");
    }
    const Eigen::MatrixXcd herm = 0.5 * (rho.matrix() + rho.matrix().adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
    ComplexVector ket = solver.eigenvectors().col(herm.rows() - 1);
    ket /= ket.norm();
    return PureState::unchecked(std::move(ket));
}

namespace {

Circuit third_order_circuit(const DensityMatrix &known) {
    const ComplexMatrix u = reflection_to_zero(rank_one_ket(known));
    Circuit circuit({2, 2});
    circuit.add(Gate{"U", u, {0}})
        .add(Gate{"U", u, {1}})
        .add("CNOT", {0, 1})
        .add("H", {0});
    return circuit;
}

struct ThirdOrderDistributions {
    OutcomeDistribution zz;
    OutcomeDistribution xz;
    OutcomeDistribution yz;
};

ThirdOrderDistributions third_order_distributions(const DensityMatrix &rho1,
                                                  const DensityMatrix &rho2,
                                                  const DensityMatrix &known) {
    const std::array<DensityMatrix, 3> states{rho1, rho2, known};
    require_qubits(states, "destructive_third_order");
    const Circuit circuit = third_order_circuit(known);
    const std::array<DensityMatrix, 2> inputs{rho1, rho2};
    const DensityMatrix out =
        apply_circuit(circuit, product_state(inputs, nullptr));
    const Povm z = computational_povm(2);
    return {measure_local(out, circuit.layout(), {{0, z}, {1, z}}),
            measure_local(out, circuit.layout(), {{0, x_basis_povm()}, {1, z}}),
            measure_local(out, circuit.layout(), {{0, y_basis_povm()}, {1, z}})};
}

}  // namespace

ThirdOrderProbabilities
destructive_third_order_probabilities(const DensityMatrix &rho1,
                                      const DensityMatrix &rho2,
                                      const DensityMatrix &known) {
    const auto d = third_order_distributions(rho1, rho2, known);
    ThirdOrderProbabilities p;
    p.p11 = d.zz.probability_of({1, 1});
    p.p_plus_0 = d.xz.probability_of({0, 0});
    p.p_minus_0 = d.xz.probability_of({1, 0});
    p.p_plus_i_1 = d.yz.probability_of({0, 1});
    p.p_minus_i_1 = d.yz.probability_of({1, 1});
    return p;
}

Complex combine_third_order(const ThirdOrderProbabilities &p) {
    const double overlap = 1.0 - 2.0 * p.p11;
    const Complex chi_value(p.p_plus_0 - p.p_minus_0,
                            p.p_plus_i_1 - p.p_minus_i_1);
    return 0.5 * (overlap + chi_value);
}

InvariantEstimate destructive_third_order(const DensityMatrix &rho1,
                                          const DensityMatrix &rho2,
                                          const DensityMatrix &known,
                                          const RunOptions &options) {
    check_options(options);
    const auto d = third_order_distributions(rho1, rho2, known);
    const std::array<EstimatorResult, 3> parts{
        run_setting(
            d.zz,
            [](const Outcome &o) {
                return Complex(o[0] == 1 && o[1] == 1 ? -0.5 : 0.5, 0.0);
            },
            options, kStreamZZ),
        run_setting(
            d.xz,
            [](const Outcome &o) {
                if (o[1] != 0) {
                    return Complex(0.0, 0.0);
                }
                return Complex(o[0] == 0 ? 0.5 : -0.5, 0.0);
            },
            options, kStreamXZ),
        run_setting(
            d.yz,
            [](const Outcome &o) {
                if (o[1] != 1) {
                    return Complex(0.0, 0.0);
                }
                return Complex(0.0, o[0] == 0 ? 0.5 : -0.5);
            },
            options, kStreamYZ),
    };
    return to_estimate(combine_independent(parts),
                       resources_for(Protocol::DestructiveThirdOrder, 3, 1));
}

std::vector<double>
eigenbasis_probabilities(std::span<const DensityMatrix> states,
                         const std::vector<CycleEigenvector> &basis) {
    require_qubits(states, "eigenbasis_probabilities");
    const std::size_t n = states.size();
    // <x| rho_1 (x) ... (x) rho_n |y> for basis strings x, y
    auto element = [&](Bits x, Bits y) {
        Complex value = 1.0;
        for (std::size_t q = 0; q < n; ++q) {
            const auto xq = static_cast<Eigen::Index>((x >> (n - 1 - q)) & 1U);
            const auto yq = static_cast<Eigen::Index>((y >> (n - 1 - q)) & 1U);
            value *= states[q].matrix()(xq, yq);
        }
        return value;
    };
    std::vector<double> probs;
    probs.reserve(basis.size());
    for (const auto &ev : basis) {
        if (ev.orbit.n != n) {
            throw DimensionError("eigenbasis_probabilities: basis length");
        }
        Complex p = 0.0;
        const auto &members = ev.orbit.members;
        for (std::size_t j = 0; j < members.size(); ++j) {
            for (std::size_t k = 0; k < members.size(); ++k) {
                p += std::conj(ev.amplitudes[j]) * ev.amplitudes[k] *
                     element(members[j], members[k]);
            }
        }
        probs.push_back(p.real());
    }
    return probs;
}

InvariantEstimate destructive_cycle_test(std::span<const DensityMatrix> states,
                                         const RunOptions &options) {
    check_options(options);
    require_qubits(states, "destructive_cycle_test");
    const std::size_t n = states.size();
    const auto basis = cyc_eigenbasis(n);
    const auto probs = eigenbasis_probabilities(states, basis);
    std::vector<Outcome> outcomes;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        outcomes.push_back({static_cast<int>(i)});
    }
    const auto dist =
        OutcomeDistribution::from_raw(std::move(outcomes), probs);
    const auto r = run_setting(
        dist,
        [&](const Outcome &o) {
            return basis[static_cast<std::size_t>(o[0])].eigenvalue;
        },
        options, kStreamMain);
    return to_estimate(r, resources_for(Protocol::DestructiveCycle, n, 0));
}

Circuit destructive_3cycle_circuit(int k, int ell) {
    if (k != 1 && k != 2) {
        throw ParameterError("destructive_3cycle_circuit: k must be 1 or 2");
    }
    if (ell < 0 || ell > 2) {
        throw ParameterError(
            "destructive_3cycle_circuit: ell must be 0, 1 or 2");
    }
    Circuit circuit({2, 2, 2});
    if (k == 1) {
        circuit.add("X", {0});
    } else {
        circuit.add("X", {1}).add("X", {2});
    }
    GateParams phase;
    phase.angle = -2.0 * kPi * ell / 3.0;
    GateParams ry;
    ry.angle = -2.0 * std::acos(1.0 / std::sqrt(3.0));
    circuit.add("CNOT", {0, 1})
        .add("CNOT", {1, 2})
        .add("cP", {0, 1}, phase)
        .add("cH", {0, 1})
        .add("P", {0}, phase)
        .add("Ry", {0}, ry);
    return circuit;
}

namespace {

double all_zero_probability(const Circuit &circuit, const DensityMatrix &input) {
    const DensityMatrix out = apply_circuit(circuit, input);
    return out.matrix()(0, 0).real();
}

}  // namespace

ThreeCycleTable
destructive_3cycle_probabilities(std::span<const DensityMatrix> states) {
    require_qubits(states, "destructive_3cycle");
    if (states.size() != 3) {
        throw ParameterError("destructive_3cycle: needs exactly three states");
    }
    const DensityMatrix input = product_state(states, nullptr);
    ThreeCycleTable table{};
    for (int k = 1; k <= 2; ++k) {
        for (int ell = 0; ell < 3; ++ell) {
            table[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(
                ell)] = all_zero_probability(destructive_3cycle_circuit(k, ell),
                                             input);
        }
    }
    return table;
}

Complex combine_3cycle(const ThreeCycleTable &p) {
    return 1.0 - (1.0 - omega_power(1)) * (p[0][1] + p[1][1]) -
           (1.0 - omega_power(2)) * (p[0][2] + p[1][2]);
}

InvariantEstimate destructive_3cycle_test(std::span<const DensityMatrix> states,
                                          const RunOptions &options) {
    check_options(options);
    require_qubits(states, "destructive_3cycle_test");
    if (states.size() != 3) {
        throw ParameterError("destructive_3cycle: needs exactly three states");
    }
    const DensityMatrix input = product_state(states, nullptr);
    std::vector<EstimatorResult> parts;
    parts.push_back(EstimatorResult{Complex(1.0, 0.0), 0.0, 0.0, 0});
    for (int k = 1; k <= 2; ++k) {
        for (int ell = 1; ell <= 2; ++ell) {
            const Circuit circuit = destructive_3cycle_circuit(k, ell);
            const Povm z = computational_povm(2);
            const auto dist =
                measure_local(apply_circuit(circuit, input), circuit.layout(),
                              {{0, z}, {1, z}, {2, z}});
            const Complex weight = -(1.0 - omega_power(ell));
            parts.push_back(run_setting(
                dist,
                [weight](const Outcome &o) {
                    const bool all_zero = o[0] == 0 && o[1] == 0 && o[2] == 0;
                    return all_zero ? weight : Complex(0.0, 0.0);
                },
                options,
                kStreamThreeCycle + static_cast<std::uint64_t>(2 * k + ell)));
        }
    }
    return to_estimate(combine_independent(parts),
                       resources_for(Protocol::Destructive3Cycle, 3, 0));
}

namespace {

void check_shape(Protocol protocol, const ProtocolConfig &config) {
    config.validate();
    const std::size_t n = config.unknown_states.size();
    const std::size_t m = config.known_states.size();
    const std::string name(protocol_name(protocol));
    if (protocol == Protocol::DestructiveThirdOrder) {
        if (n != 2 || m != 1) {
            throw ParameterError(name +
                                 " needs two unknown states and one known");
        }
        return;
    }
    if (protocol != Protocol::MeCycle && m != 0) {
        throw ParameterError(name + " does not use known states");
    }
    resources_for(protocol, n + m, m);
}

}  // namespace

InvariantEstimate run_protocol(Protocol protocol, const ProtocolConfig &config) {
    check_shape(protocol, config);
    const auto &u = config.unknown_states;
    const auto &opt = config.options;
    switch (protocol) {
    case Protocol::Swap:
        return swap_test(u[0], u[1], opt);
    case Protocol::DestructiveSwap:
        return destructive_swap_test(u[0], u[1], opt);
    case Protocol::Cycle:
        return cycle_test(u, opt);
    case Protocol::MeCycle:
        return estimate_bargmann_me(config);
    case Protocol::DestructiveThirdOrder:
        return destructive_third_order(u[0], u[1], config.known_states[0], opt);
    case Protocol::DestructiveCycle:
        return destructive_cycle_test(u, opt);
    case Protocol::Destructive3Cycle:
        return destructive_3cycle_test(u, opt);
    }
    throw ParameterError("unknown protocol");
}

std::vector<DensityMatrix> target_tuple(Protocol protocol,
                                        const ProtocolConfig &config) {
    check_shape(protocol, config);
    if (protocol == Protocol::MeCycle) {
        return me_invariant_tuple(config);
    }
    std::vector<DensityMatrix> tuple = config.unknown_states;
    tuple.insert(tuple.end(), config.known_states.begin(),
                 config.known_states.end());
    return tuple;
}

}  // namespace bargmann
