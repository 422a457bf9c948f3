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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "bargmann/cycle.hpp"
#include "bargmann/estimation.hpp"
#include "bargmann/protocols.hpp"
#include "bargmann/rng.hpp"
#include "bargmann/validation.hpp"

using namespace bargmann;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool passed = true;
    std::string detail;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char *pattern, double a, double b = 0.0,
                double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

DensityMatrix random_state(CounterRng &rng, std::size_t d, bool allow_mixed) {
    const std::size_t rank = allow_mixed && rng.next_u64() % 2 == 1 ? 2 : 1;
    return random_density_matrix(d, rank, rng.next_u64());
}

std::vector<DensityMatrix> random_tuple(CounterRng &rng, std::size_t n,
                                        std::size_t d) {
    std::vector<DensityMatrix> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(random_state(rng, d, true));
    }
    return out;
}

std::size_t pick(CounterRng &rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng.next_u64() % (hi - lo + 1));
}

const RunOptions kExact{Mode::Exact, 1, 0};

// 1. Exact-mode oracle equivalence for every protocol.
Verdict criterion_oracle_equivalence() {
    const auto t0 = Clock::now();
    const int configs = 100;
    double worst = 0.0;
    CounterRng rng(101);
    for (Protocol p : kAllProtocols) {
        for (int t = 0; t < configs; ++t) {
            ProtocolConfig config;
            switch (p) {
            case Protocol::Swap:
                config.unknown_states = random_tuple(rng, 2, pick(rng, 2, 3));
                break;
            case Protocol::DestructiveSwap:
                config.unknown_states = random_tuple(rng, 2, 2);
                break;
            case Protocol::Cycle:
                config.unknown_states =
                    random_tuple(rng, pick(rng, 2, 5), pick(rng, 2, 3));
                break;
            case Protocol::MeCycle: {
                const std::size_t d = pick(rng, 2, 3);
                const std::size_t nprime = pick(rng, 1, 3);
                config.unknown_states = random_tuple(rng, nprime, d);
                config.known_states =
                    random_tuple(rng, pick(rng, 0, nprime), d);
                break;
            }
            case Protocol::DestructiveThirdOrder:
                config.unknown_states = random_tuple(rng, 2, 2);
                config.known_states = {random_state(rng, 2, false)};
                break;
            case Protocol::DestructiveCycle:
                config.unknown_states = random_tuple(rng, pick(rng, 2, 4), 2);
                break;
            case Protocol::Destructive3Cycle:
                config.unknown_states = random_tuple(rng, 3, 2);
                break;
            }
            const Complex est = run_protocol(p, config).value;
            const Complex oracle = direct_invariant(target_tuple(p, config));
            worst = std::max(worst, std::abs(est - oracle));
        }
    }
    const double secs = seconds_since(t0);
    return {worst < 1e-10 && secs < 60.0,
            fmt("max |estimate - oracle| = %.2e over 7 x 100 configs, %.1f s",
                worst, secs)};
}

// Two-register reference distribution with P on register 1.
double two_register_reference(const DensityMatrix &r1, const DensityMatrix &r2,
                              const ComplexMatrix &p, int c) {
    const Complex q = (p * r1.matrix() * r2.matrix()).trace();
    const double theta_re = c <= 1 ? 1.0 : 0.0;
    const double theta_im = c >= 2 ? 1.0 : 0.0;
    const double sign = c % 2 == 0 ? 1.0 : -1.0;
    return ((p * r1.matrix()).trace().real() + (p * r2.matrix()).trace().real() +
            2.0 * theta_re * sign * q.real() -
            2.0 * theta_im * sign * q.imag()) /
           8.0;
}

// 2. Joint distribution: circuit vs closed form, and the m = 1 reduction.
Verdict criterion_joint_distribution() {
    CounterRng rng(202);
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
        const std::size_t d = pick(rng, 2, 3);
        const std::size_t nprime = pick(rng, 1, 3);
        const std::size_t m = pick(rng, 0, nprime);
        ProtocolConfig config;
        config.unknown_states = random_tuple(rng, nprime, d);
        std::vector<Povm> povms;
        for (std::size_t i = 0; i < m; ++i) {
            povms.push_back(povm_from_known_state(random_state(rng, d, true)));
        }
        const auto a = me_joint_distribution_circuit(config, povms);
        const auto b = me_joint_distribution_closed_form(config, povms);
        for (std::size_t i = 0; i < a.size(); ++i) {
            worst = std::max(worst, std::abs(a.probability(i) -
                                             b.probability_of(a.outcome(i))));
        }
    }
    double worst_reduction = 0.0;
    for (int t = 0; t < 20; ++t) {
        const std::size_t d = pick(rng, 2, 3);
        ProtocolConfig config;
        config.unknown_states = random_tuple(rng, 2, d);
        const Povm povm = povm_from_known_state(random_state(rng, d, true));
        const auto dist = me_joint_distribution_circuit(config, {povm});
        for (int j = 0; j < 2; ++j) {
            for (int c = 0; c < 4; ++c) {
                const double ref = two_register_reference(
                    config.unknown_states[0], config.unknown_states[1],
                    povm.effect(static_cast<std::size_t>(j)), c);
                worst_reduction = std::max(
                    worst_reduction, std::abs(dist.probability_of({j, c}) - ref));
            }
        }
    }
    return {worst < 1e-10 && worst_reduction < 1e-12,
            fmt("circuit vs closed form %.2e (50 configs); two-register "
                "reduction %.2e (20 configs)",
                worst, worst_reduction)};
}

// 3. Exact-weighted estimator equals the interleaved trace; the
// trace-product background drops out of the ancilla sum.
Verdict criterion_estimator() {
    CounterRng rng(303);
    double worst = 0.0;
    double background = 0.0;
    for (int t = 0; t < 50; ++t) {
        const std::size_t d = pick(rng, 2, 3);
        const std::size_t nprime = pick(rng, 1, 3);
        const std::size_t m = pick(rng, 0, nprime);
        ProtocolConfig config;
        config.unknown_states = random_tuple(rng, nprime, d);
        std::vector<Povm> povms;
        CoefficientTable coeffs;
        std::vector<ComplexMatrix> observables;
        for (std::size_t i = 0; i < m; ++i) {
            povms.push_back(povm_from_known_state(random_state(rng, d, true)));
            const double x0 = 2.0 * rng.uniform() - 1.0;
            const double x1 = 2.0 * rng.uniform() - 1.0;
            coeffs.push_back({x0, x1});
            observables.push_back(Complex(x0) * povms.back().effect(0) +
                                  Complex(x1) * povms.back().effect(1));
        }
        const auto dist = me_joint_distribution(config, povms);
        worst = std::max(worst,
                         std::abs(aggregate(dist, coeffs).mean -
                                  interleaved_trace(config.unknown_states,
                                                    observables)));
        // c-independent terms carry zero net weight for every j tuple
        for (std::size_t i = 0; i < dist.size(); i += 4) {
            const auto &o = dist.outcome(i);
            const std::span<const int> j(o.data(), o.size() - 1);
            Complex sum = 0.0;
            for (int c = 0; c < 4; ++c) {
                sum += xtilde(j, c, coeffs);
            }
            background = std::max(background, std::abs(sum));
        }
    }
    return {worst < 1e-12 && background == 0.0,
            fmt("max |E[X] - interleaved trace| = %.2e; max |sum_c x(j,c)| = "
                "%.1e",
                worst, background)};
}

// 4. Sampled-mode convergence of the measurement-enhanced test.
Verdict criterion_sampled_convergence() {
    const auto t0 = Clock::now();
    ProtocolConfig config;
    config.unknown_states = {pure_to_density(preset_state("zero")),
                             pure_to_density(preset_state("plus"))};
    config.known_states = {pure_to_density(preset_state("plus_i"))};
    const Complex target(0.25, 0.25);
    int inside = 0;
    double worst_ratio = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        config.options = {Mode::Sampled, 1000000, seed};
        const auto est = estimate_bargmann_me(config);
        const double radius = 3.0 * (est.stderr_re + est.stderr_im);
        const double err = std::abs(est.value - target);
        inside += err <= radius ? 1 : 0;
        worst_ratio = std::max(worst_ratio, err / radius);
    }
    const double secs = seconds_since(t0);
    return {inside >= 99 && secs < 300.0,
            fmt("%.0f/100 seeds within 3 standard errors at 1e6 shots "
                "(worst error/radius %.2f), %.1f s",
                inside, worst_ratio, secs)};
}

// 5. Destructive 3-cycle circuits against spectral projectors.
Verdict criterion_three_cycle() {
    CounterRng rng(505);
    const auto projectors = cyc3_spectral_projectors();
    double worst_p = 0.0;
    double worst_delta = 0.0;
    for (int t = 0; t < 50; ++t) {
        const auto s = random_tuple(rng, 3, 2);
        const ComplexMatrix product =
            kron(kron(s[0].matrix(), s[1].matrix()), s[2].matrix());
        const auto table = destructive_3cycle_probabilities(s);
        for (const auto &p : projectors) {
            if (p.weight != 1 && p.weight != 2) {
                continue;
            }
            const double expected = (product * p.projector).trace().real();
            worst_p = std::max(
                worst_p,
                std::abs(table[static_cast<std::size_t>(p.weight - 1)]
                              [static_cast<std::size_t>(p.ell)] -
                         expected));
        }
        worst_delta = std::max(
            worst_delta, std::abs(combine_3cycle(table) - direct_invariant(s)));
    }
    return {worst_p < 1e-10 && worst_delta < 1e-10,
            fmt("6 (k, ell) circuits vs projectors %.2e; recombined invariant "
                "%.2e (50 inputs)",
                worst_p, worst_delta)};
}

// 6. Destructive third-order probability relations.
Verdict criterion_third_order() {
    CounterRng rng(606);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const PureState k1 = random_pure_state(2, rng.next_u64());
        const PureState k2 = random_pure_state(2, rng.next_u64());
        const PureState k3 = random_pure_state(2, rng.next_u64());
        const ComplexMatrix u = reflection_to_zero(k3);
        const PureState psi = PureState::unchecked(u * k1.vector());
        const PureState phi = PureState::unchecked(u * k2.vector());
        const auto p = destructive_third_order_probabilities(
            pure_to_density(k1), pure_to_density(k2), pure_to_density(k3));
        const Complex measured_chi(p.p_plus_0 - p.p_minus_0,
                                   p.p_plus_i_1 - p.p_minus_i_1);
        const std::vector<DensityMatrix> triple = {
            pure_to_density(k1), pure_to_density(k2), pure_to_density(k3)};
        worst = std::max({worst, std::abs(measured_chi - chi(psi, phi)),
                          std::abs(measured_chi - chi_closed_form(psi, phi)),
                          std::abs(combine_third_order(p) -
                                   direct_invariant(triple))});
    }
    const auto report = run_validation({20, 2024});
    std::string note = "missing";
    bool documented = false;
    for (const auto &c : report.checks) {
        if (c.name == "uncorrected Y-basis relation rejected") {
            documented = c.passed;
            note = c.detail;
        }
    }
    Verdict out{worst < 1e-10 && documented,
                fmt("chi and invariant max deviation %.2e (100 triples)",
                    worst)};
    out.detail += "; validation report: " + note;
    return out;
}

// 7. Resource halving, by formula and by circuit inspection.
Verdict criterion_resources() {
    bool ok = true;
    std::string detail;
    for (std::size_t n : {4, 6, 8}) {
        const auto me = resources_for(Protocol::MeCycle, n, n / 2);
        const auto cy = resources_for(Protocol::Cycle, n, 0);
        const std::size_t me_gates = controlled_cyc(n / 2, 2).count("cSWAP");
        const std::size_t cy_gates = controlled_cyc(n, 2).count("cSWAP");
        ok = ok && me.system_registers == n / 2 &&
             me.fredkin_gates == n / 2 - 1 && cy.system_registers == n &&
             cy.fredkin_gates == n - 1 && me_gates == me.fredkin_gates &&
             cy_gates == cy.fredkin_gates;
        detail += fmt("n=%.0f: (%.0f, %.0f)", static_cast<double>(n),
                      static_cast<double>(me.system_registers),
                      static_cast<double>(me.fredkin_gates)) +
                  fmt(" vs (%.0f, %.0f); ",
                      static_cast<double>(cy.system_registers),
                      static_cast<double>(cy.fredkin_gates));
    }
    detail.resize(detail.size() - 2);
    return {ok, detail};
}

// 8. Orbit combinatorics.
Verdict criterion_orbits() {
    bool counts = true;
    for (std::size_t n = 1; n <= 16; ++n) {
        counts = counts && enumerate_orbits(n).orbit_count() == necklace_count(n);
    }
    const OrbitDecomposition four = enumerate_orbits(4);
    const auto &w2 = four.orbits_by_weight.at(2);
    const bool split =
        w2.size() == 2 && w2[0].period == 4 && w2[1].period == 2 &&
        std::set<Bits>(w2[0].members.begin(), w2[0].members.end()) ==
            std::set<Bits>{0b0011, 0b0110, 0b1100, 0b1001} &&
        std::set<Bits>(w2[1].members.begin(), w2[1].members.end()) ==
            std::set<Bits>{0b0101, 0b1010};
    return {counts && split,
            std::string(counts ? "orbit count = necklace count for n <= 16"
                               : "orbit count mismatch") +
                (split ? "; n=4 weight 2 -> {0011,0110,1100,1001} (r=4), "
                         "{0101,1010} (r=2)"
                       : "; n=4 weight-2 split wrong")};
}

// 9. Invariant suite.
Verdict criterion_invariants() {
    CounterRng rng(909);
    double unitary = 0.0;
    double cyclic = 0.0;
    double reversal = 0.0;
    double bound = 0.0;
    double completeness = 0.0;
    const Povm r = r_povm();
    for (int t = 0; t < 100; ++t) {
        const std::size_t d = pick(rng, 2, 4);
        auto s = random_tuple(rng, pick(rng, 2, 5), d);
        const Complex forward = direct_invariant(s);

        const ComplexMatrix u = random_unitary(d, rng.next_u64());
        std::vector<DensityMatrix> rotated;
        for (const auto &x : s) {
            rotated.push_back(
                DensityMatrix::unchecked(u * x.matrix() * u.adjoint()));
        }
        unitary = std::max(unitary, std::abs(direct_invariant(rotated) - forward));

        std::rotate(s.begin(), s.begin() + 1, s.end());
        cyclic = std::max(cyclic, std::abs(direct_invariant(s) - forward));
        std::rotate(s.rbegin(), s.rbegin() + 1, s.rend());
        std::reverse(s.begin(), s.end());
        reversal = std::max(reversal,
                            std::abs(direct_invariant(s) - std::conj(forward)));
        bound = std::max(bound, std::abs(forward) - 1.0);

        const DensityMatrix q = random_state(rng, 2, true);
        Complex total = 0.0;
        ComplexMatrix sum = ComplexMatrix::Zero(2, 2);
        for (const auto &e : r.effects()) {
            total += (e * q.matrix()).trace();
            sum += e;
        }
        completeness = std::max({completeness, std::abs(total - 1.0),
                                 max_abs_diff(sum, identity(2))});
    }
    const bool ok = unitary < 1e-10 && cyclic < 1e-10 && reversal < 1e-10 &&
                    bound <= 1e-10 && completeness < 1e-10;
    return {ok, fmt("unitary %.1e, cyclic %.1e, reversal %.1e", unitary, cyclic,
                    reversal) +
                    fmt(", max(|Delta| - 1) %.2f, R completeness %.1e "
                        "(100 trials each)",
                        bound, completeness)};
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria = {
        {"oracle equivalence, exact mode", criterion_oracle_equivalence},
        {"joint distribution consistency", criterion_joint_distribution},
        {"estimator correctness", criterion_estimator},
        {"sampled-mode convergence", criterion_sampled_convergence},
        {"destructive 3-cycle", criterion_three_cycle},
        {"destructive third-order", criterion_third_order},
        {"resource halving", criterion_resources},
        {"orbit combinatorics", criterion_orbits},
        {"invariant suite", criterion_invariants},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict o;
        try {
            o = criteria[i].run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.passed ? 0 : 1;
        std::printf("%s %zu %s: %s\n", o.passed ? "PASS" : "FAIL", i + 1,
                    criteria[i].name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
