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

#include <cmath>
#include <vector>

#include "bargmann/errors.hpp"
#include "bargmann/protocols.hpp"
#include "bargmann/rng.hpp"
#include "test_util.hpp"

using namespace bargmann;
using testutil::near;
using testutil::preset;

namespace {

const Complex kI(0.0, 1.0);
const Complex kThird(0.25, 0.25);  // <0|+><+|+i><+i|0>
const RunOptions kExact{Mode::Exact, 1, 0};

ProtocolConfig me_config(std::vector<DensityMatrix> unknown,
                         std::vector<DensityMatrix> known) {
    ProtocolConfig c;
    c.unknown_states = std::move(unknown);
    c.known_states = std::move(known);
    return c;
}

std::vector<DensityMatrix> zpi() {
    return {preset("zero"), preset("plus"), preset("plus_i")};
}

}  // namespace

TEST_SUITE("protocols") {

TEST_CASE("direct_invariant examples") {
    CHECK(near(direct_invariant(std::vector{random_density_matrix(3, 2, 1)}),
               1.0, 1e-14));
    const auto mixed = DensityMatrix::from_matrix(identity(2) / Complex(2.0));
    CHECK(near(direct_invariant(std::vector{mixed, mixed}), 0.5, 1e-15));
    CounterRng rng(4);
    for (int t = 0; t < 100; ++t) {
        std::vector<DensityMatrix> s;
        const std::size_t n = 2 + rng.next_u64() % 4;
        for (std::size_t i = 0; i < n; ++i) {
            s.push_back(random_density_matrix(3, 1 + i % 3, rng.next_u64()));
        }
        const Complex forward = direct_invariant(s);
        std::reverse(s.begin(), s.end());
        CHECK(near(direct_invariant(s), std::conj(forward), 1e-12));
    }
}

TEST_CASE("swap test") {
    const auto psi = random_density_matrix(3, 1, 2);
    CHECK(near(swap_test(psi, psi, kExact).value, 1.0, 1e-12));
    CHECK(near(swap_test(preset("zero"), preset("one"), kExact).value, 0.0,
               1e-15));
    CHECK(near(swap_test(preset("zero"), preset("plus"), kExact).value, 0.5,
               1e-15));
    CHECK(swap_test(psi, psi, kExact).resources ==
          ResourceCount{2, 1, 1, 1});
}

TEST_CASE("destructive swap test") {
    const auto psi = random_density_matrix(2, 1, 3);
    CHECK(near(destructive_swap_test(psi, psi, kExact).value, 1.0, 1e-12));
    CHECK(near(destructive_swap_test(preset("zero"), preset("one"), kExact)
                   .value,
               0.0, 1e-15));
    CHECK(near(destructive_swap_test(preset("zero"), preset("plus"), kExact)
                   .value,
               0.5, 1e-15));
    CHECK_THROWS_AS(destructive_swap_test(random_density_matrix(3, 1, 1),
                                          random_density_matrix(3, 1, 2),
                                          kExact),
                    UnsupportedDimension);
}

TEST_CASE("cycle test") {
    const auto psi = random_density_matrix(3, 1, 5);
    CHECK(near(cycle_test(std::vector{psi, psi, psi, psi}, kExact).value, 1.0,
               1e-12));
    CHECK(near(cycle_test(zpi(), kExact).value, kThird, 1e-14));

    const std::vector<DensityMatrix> four = {preset("zero"), preset("plus"),
                                             preset("one"), preset("minus")};
    CHECK(near(cycle_test(four, kExact).value, -0.25, 1e-14));
    // every third-order invariant containing an orthogonal pair vanishes
    for (int skip = 0; skip < 4; ++skip) {
        std::vector<DensityMatrix> three;
        for (int i = 0; i < 4; ++i) {
            if (i != skip) {
                three.push_back(four[static_cast<std::size_t>(i)]);
            }
        }
        CHECK(near(direct_invariant(three), 0.0, 1e-15));
    }
}

TEST_CASE("me joint distribution examples") {
    const auto psi = random_density_matrix(2, 1, 6);
    // (1/8)(2 + 2 Re) with Re = 1: the ancilla stays |+>
    const auto m0 = me_joint_distribution(me_config({psi, psi}, {}), {});
    CHECK(m0.probability_of({0}) == doctest::Approx(4.0 / 8));
    CHECK(m0.probability_of({1}) == doctest::Approx(0.0));
    CHECK(m0.probability_of({2}) == doctest::Approx(2.0 / 8));
    CHECK(m0.probability_of({3}) == doctest::Approx(2.0 / 8));

    const auto m1 = me_joint_distribution(
        me_config({preset("zero"), preset("plus")}, {}),
        {povm_from_known_state(preset("plus_i"))});
    CHECK(m1.probability_of({0, 0}) == doctest::Approx(3.0 / 16));
    CHECK(std::abs(m1.total() - 1.0) < 1e-10);
}

TEST_CASE("me joint distribution: circuit equals closed form") {
    CounterRng rng(12);
    for (int t = 0; t < 50; ++t) {
        const std::size_t d = 2 + rng.next_u64() % 2;
        const std::size_t nprime = 1 + rng.next_u64() % 3;
        const std::size_t m = rng.next_u64() % (nprime + 1);
        ProtocolConfig config;
        for (std::size_t i = 0; i < nprime; ++i) {
            config.unknown_states.push_back(
                random_density_matrix(d, 1 + rng.next_u64() % 2, rng.next_u64()));
        }
        std::vector<Povm> povms;
        for (std::size_t i = 0; i < m; ++i) {
            povms.push_back(povm_from_known_state(
                random_density_matrix(d, 2, rng.next_u64())));
        }
        const auto a = me_joint_distribution_circuit(config, povms);
        const auto b = me_joint_distribution_closed_form(config, povms);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a.outcome(i) == b.outcome(i));
            CHECK(std::abs(a.probability(i) - b.probability(i)) < 1e-10);
        }
    }
}

TEST_CASE("estimate_interleaved_trace and estimate_bargmann_me") {
    const auto psi = random_density_matrix(3, 1, 8);
    CHECK(near(estimate_interleaved_trace(me_config({psi, psi}, {}), {}).value,
               1.0, 1e-12));
    const auto cfg = me_config({preset("zero"), preset("plus")},
                               {preset("plus_i")});
    CHECK(near(estimate_bargmann_me(cfg).value, kThird, 1e-14));
    const auto all_zero =
        me_config({preset("zero"), preset("zero")}, {preset("zero")});
    CHECK(near(estimate_bargmann_me(all_zero).value, 1.0, 1e-14));
    CHECK(estimate_bargmann_me(cfg).resources == ResourceCount{2, 1, 1, 2});
}

TEST_CASE("me_invariant_tuple order") {
    const auto r1 = random_density_matrix(2, 1, 1);
    const auto r2 = random_density_matrix(2, 1, 2);
    const auto r3 = random_density_matrix(2, 1, 3);
    const auto k1 = random_density_matrix(2, 1, 4);
    const auto k2 = random_density_matrix(2, 1, 5);
    const auto tuple = me_invariant_tuple(me_config({r1, r2, r3}, {k1, k2}));
    const std::vector<const DensityMatrix *> expected = {&r3, &k2, &r2, &k1,
                                                         &r1};
    REQUIRE(tuple.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(tuple[i].matrix() == expected[i]->matrix());
    }
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(
        estimate_bargmann_me(me_config({preset("zero")},
                                       {preset("zero"), preset("one")})),
        ParameterError);
    CHECK_THROWS_AS(estimate_bargmann_me(me_config(
                        {preset("zero"), random_density_matrix(3, 1, 1)}, {})),
                    DimensionError);
    ProtocolConfig c = me_config({preset("zero")}, {});
    c.options = {Mode::Sampled, 0, 1};
    CHECK_THROWS_AS(estimate_bargmann_me(c), ParameterError);
}

TEST_CASE("chi examples and closed form") {
    const auto k = [](const char *n) { return preset_state(n); };
    CHECK(near(chi(k("zero"), k("zero")), 1.0, 1e-15));
    CHECK(near(chi(k("zero"), k("one")), 0.0, 1e-15));
    CHECK(near(chi(k("plus"), k("plus_i")), 0.5 * kI, 1e-15));
    CHECK(near(chi_closed_form(k("plus"), k("plus_i")), 0.5 * kI, 1e-15));
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto a = random_pure_state(2, 2 * s);
        const auto b = random_pure_state(2, 2 * s + 1);
        CHECK(near(chi(a, b), chi_closed_form(a, b), 1e-14));
    }
}

TEST_CASE("reflection_to_zero") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto psi = random_pure_state(2, s);
        const ComplexMatrix u = reflection_to_zero(psi);
        CHECK(is_unitary(u, 1e-12));
        const ComplexVector out = u * psi.vector();
        CHECK(std::abs(std::abs(out(0)) - 1.0) < 1e-12);
    }
}

TEST_CASE("destructive third order") {
    const auto psi = random_density_matrix(2, 1, 9);
    CHECK(near(destructive_third_order(psi, psi, psi, kExact).value, 1.0,
               1e-12));
    CHECK(near(destructive_third_order(preset("zero"), preset("plus"),
                                       preset("plus_i"), kExact)
                   .value,
               kThird, 1e-14));
    CHECK(near(destructive_third_order(preset("plus"), preset("minus"),
                                       random_density_matrix(2, 1, 10), kExact)
                   .value,
               0.0, 1e-14));
    CHECK_THROWS_AS(destructive_third_order(preset("zero"), preset("plus"),
                                            random_density_matrix(2, 2, 1),
                                            kExact),
                    StateError);
}

TEST_CASE("destructive cycle test") {
    CHECK(near(destructive_cycle_test(
                   std::vector{preset("zero"), preset("zero"), preset("zero")},
                   kExact)
                   .value,
               1.0, 1e-15));
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto a = random_density_matrix(2, 1 + s % 2, 3 * s);
        const auto b = random_density_matrix(2, 1, 3 * s + 1);
        CHECK(near(destructive_cycle_test(std::vector{a, b}, kExact).value,
                   destructive_swap_test(a, b, kExact).value, 1e-10));
    }
    CHECK(near(destructive_cycle_test(zpi(), kExact).value, kThird, 1e-14));
}

TEST_CASE("destructive 3-cycle circuits") {
    const std::vector<DensityMatrix> zeros(3, preset("zero"));
    const auto p0 = destructive_3cycle_probabilities(zeros);
    for (const auto &row : p0) {
        for (double p : row) {
            CHECK(std::abs(p) < 1e-15);
        }
    }

    const double s = 1.0 / std::sqrt(3.0);
    ComplexVector w = ComplexVector::Zero(8);
    w(0b001) = w(0b010) = w(0b100) = s;
    const auto w_state = DensityMatrix::unchecked(w * w.adjoint());
    const Circuit c = destructive_3cycle_circuit(1, 0);
    const auto out = apply_circuit(c, w_state);
    CHECK(std::abs(out.matrix()(0, 0) - 1.0) < 1e-14);

    // omega-eigenvector of weight 1 with phases (omega^2, omega, 1)
    const Complex om = std::polar(1.0, 2 * M_PI / 3);
    ComplexVector v = ComplexVector::Zero(8);
    v(0b001) = om * om * s;
    v(0b010) = om * s;
    v(0b100) = s;
    CHECK((cyc_unitary(3, 2) * v - om * v).norm() < 1e-14);
    const auto v_out = apply_circuit(destructive_3cycle_circuit(1, 1),
                                     DensityMatrix::unchecked(v * v.adjoint()));
    CHECK(std::abs(v_out.matrix()(0, 0) - 1.0) < 1e-14);

    CHECK(near(destructive_3cycle_test(zpi(), kExact).value, kThird, 1e-14));
    CHECK(near(combine_3cycle(destructive_3cycle_probabilities(zpi())),
               kThird, 1e-14));
    CHECK_THROWS_AS(destructive_3cycle_circuit(3, 0), ParameterError);
}

TEST_CASE("oracle equivalence on random inputs") {
    CounterRng rng(99);
    for (int t = 0; t < 25; ++t) {
        std::vector<DensityMatrix> s;
        for (int i = 0; i < 3; ++i) {
            s.push_back(random_density_matrix(2, 1 + rng.next_u64() % 2,
                                              rng.next_u64()));
        }
        const Complex oracle = direct_invariant(s);
        CHECK(near(cycle_test(s, kExact).value, oracle, 1e-10));
        CHECK(near(destructive_cycle_test(s, kExact).value, oracle, 1e-10));
        CHECK(near(destructive_3cycle_test(s, kExact).value, oracle, 1e-10));
    }
}

TEST_CASE("sampled mode is seeded and unbiased-looking") {
    const RunOptions opt{Mode::Sampled, 200000, 42};
    const auto a = destructive_3cycle_test(zpi(), opt);
    const auto b = destructive_3cycle_test(zpi(), opt);
    CHECK(a.value == b.value);
    CHECK(std::abs(a.value.real() - 0.25) <= 5 * a.stderr_re + 1e-12);
    CHECK(std::abs(a.value.imag() - 0.25) <= 5 * a.stderr_im + 1e-12);
    const auto c = cycle_test(zpi(), opt);
    CHECK(std::abs(c.value - kThird) <= 5 * (c.stderr_re + c.stderr_im));
    const auto d = destructive_third_order(preset("zero"), preset("plus"),
                                           preset("plus_i"), opt);
    CHECK(std::abs(d.value - kThird) <= 5 * (d.stderr_re + d.stderr_im));
}

TEST_CASE("resources and applicability") {
    CHECK(resources_for(Protocol::MeCycle, 5, 2) == ResourceCount{3, 1, 2, 3});
    CHECK(resources_for(Protocol::Cycle, 5, 0) == ResourceCount{5, 1, 4, 1});
    CHECK(resources_for(Protocol::Swap, 2, 0) == ResourceCount{2, 1, 1, 1});
    CHECK(resources_for(Protocol::DestructiveSwap, 2, 0) ==
          ResourceCount{2, 0, 0, 2});
    const auto me6 = resources_for(Protocol::MeCycle, 6, 3);
    const auto cy6 = resources_for(Protocol::Cycle, 6, 0);
    CHECK(static_cast<double>(me6.fredkin_gates) / cy6.fredkin_gates ==
          doctest::Approx(2.0 / 5.0));
    CHECK_THROWS_AS(resources_for(Protocol::MeCycle, 5, 3), ParameterError);
    CHECK_THROWS_AS(resources_for(Protocol::Swap, 3, 0), ParameterError);
    CHECK_THROWS_AS(resources_for(Protocol::Destructive3Cycle, 4, 0),
                    ParameterError);
    for (Protocol p : kAllProtocols) {
        CHECK(protocol_from_name(protocol_name(p)) == p);
    }
    CHECK_THROWS_AS(protocol_from_name("nope"), ParameterError);
}

TEST_CASE("run_protocol dispatch and target tuple") {
    const auto cfg = me_config({preset("zero"), preset("plus")},
                               {preset("plus_i")});
    for (Protocol p : {Protocol::MeCycle, Protocol::DestructiveThirdOrder}) {
        CHECK(near(run_protocol(p, cfg).value, kThird, 1e-14));
        CHECK(near(direct_invariant(target_tuple(p, cfg)), kThird, 1e-14));
    }
    CHECK_THROWS_AS(run_protocol(Protocol::Cycle, cfg), ParameterError);
    CHECK_THROWS_AS(run_protocol(Protocol::Swap, me_config(zpi(), {})),
                    ParameterError);
}

}  // TEST_SUITE
