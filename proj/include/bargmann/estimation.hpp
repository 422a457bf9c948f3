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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "bargmann/distribution.hpp"
#include "bargmann/numerics.hpp"

namespace bargmann {

/// I.i.d. draws from an OutcomeDistribution, stored as indices into it.
struct SampleBatch {
    std::vector<Outcome> labels;       // copy of the distribution's outcomes
    std::vector<std::uint32_t> draws;  // one index per shot
    std::size_t shots = 0;
    std::uint64_t seed = 0;

    const Outcome &outcome(std::size_t shot) const {
        return labels.at(draws.at(shot));
    }
};

struct EstimatorResult {
    Complex mean;
    double stderr_re = 0.0;
    double stderr_im = 0.0;
    std::size_t shots = 0;
};

/// Shot i is drawn by inverse CDF from counter_uniform(seed, stream, i), so
/// the batch is a pure function of (distribution, shots, seed, stream) for
/// any thread count. Throws ParameterError when shots == 0.
SampleBatch sample_distribution(const OutcomeDistribution &dist,
                                std::size_t shots, std::uint64_t seed,
                                std::uint64_t stream = 0,
                                unsigned threads = 1);

/// Coefficient table for the measured registers: coefficients[i][j] is the
/// weight x_j of effect j of the i-th observable.
using CoefficientTable = std::vector<std::vector<double>>;

/// Value of the complex random variable for outcome (j_1..j_m, c):
/// 2 x_{j_1}...x_{j_m} (-1)^c [theta(1-c) - i theta(c-2)], theta(0) = 1.
/// c = 0 -> +2X, c = 1 -> -2X, c = 2 -> -2iX, c = 3 -> +2iX.
Complex xtilde(std::span<const int> j, int c,
               const CoefficientTable &coefficients);

/// Convenience for outcome tuples that end in the ancilla result c.
Complex xtilde(const Outcome &outcome, const CoefficientTable &coefficients);

using ValueFunction = std::function<Complex(const Outcome &)>;

/// Sample mean with separate standard errors of the real and imaginary
/// parts (sample standard deviation / sqrt(shots)).
EstimatorResult estimate_mean(const SampleBatch &batch,
                              const ValueFunction &value);

/// Expectation of `value` under the exact distribution; zero standard error.
EstimatorResult expectation(const OutcomeDistribution &dist,
                            const ValueFunction &value);

/// Mean of xtilde over a batch. Throws ParameterError on an empty batch.
EstimatorResult aggregate(const SampleBatch &batch,
                          const CoefficientTable &coefficients);

/// Exact weighting of xtilde by the distribution.
EstimatorResult aggregate(const OutcomeDistribution &dist,
                          const CoefficientTable &coefficients);

/// Smallest N with 2 exp(-2 N eps^2 / range^2) <= delta.
std::size_t hoeffding_shots(double epsilon, double delta, double range_bound);

/// Adds independent estimates; standard errors combine in quadrature.
EstimatorResult combine_independent(std::span<const EstimatorResult> parts);

}  // namespace bargmann
