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

#include "bargmann/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "bargmann/errors.hpp"
#include "bargmann/rng.hpp"

namespace bargmann {

namespace {

struct RunningMoments {
    double sum = 0.0;
    double sum_sq = 0.0;

    void add(double v) {
        sum += v;
        sum_sq += v * v;
    }

    double standard_error(std::size_t n) const {
        if (n < 2) {
            return 0.0;
        }
        const double mean = sum / static_cast<double>(n);
        const double var = std::max(
            0.0, (sum_sq - static_cast<double>(n) * mean * mean) /
                     static_cast<double>(n - 1));
        return std::sqrt(var / static_cast<double>(n));
    }
};

}  // namespace

SampleBatch sample_distribution(const OutcomeDistribution &dist,
                                std::size_t shots, std::uint64_t seed,
                                std::uint64_t stream, unsigned threads) {
    if (shots == 0) {
        throw ParameterError("sample_distribution: shots must be positive");
    }
    if (dist.size() == 0) {
        throw ParameterError("sample_distribution: empty distribution");
    }
    std::vector<double> cdf(dist.size());
    double running = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        running += dist.probability(i);
        cdf[i] = running;
    }
    // Guard the last bucket against rounding in the cumulative sum.
    std::size_t last = dist.size() - 1;
    while (last > 0 && dist.probability(last) == 0.0) {
        --last;
    }
    SampleBatch batch;
    batch.labels = dist.outcomes();
    batch.draws.resize(shots);
    batch.shots = shots;
    batch.seed = seed;

    auto fill = [&](std::size_t begin, std::size_t end) {
        for (std::size_t shot = begin; shot < end; ++shot) {
            const double u = counter_uniform(seed, stream, shot) * running;
            auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
            std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
            batch.draws[shot] = static_cast<std::uint32_t>(std::min(idx, last));
        }
    };
    threads = std::max(1U, threads);
    if (threads == 1 || shots < 4096) {
        fill(0, shots);
    } else {
        std::vector<std::jthread> workers;
        const std::size_t chunk = (shots + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t begin = t * chunk;
            const std::size_t end = std::min(shots, begin + chunk);
            if (begin < end) {
                workers.emplace_back(fill, begin, end);
            }
        }
    }
    return batch;
}

Complex xtilde(std::span<const int> j, int c,
               const CoefficientTable &coefficients) {
    if (c < 0 || c > 3) {
        throw ParameterError("xtilde: ancilla outcome " + std::to_string(c) +
                             " outside {0,1,2,3}");
    }
    if (j.size() != coefficients.size()) {
        throw ParameterError("xtilde: one coefficient row per measured "
                             "register is required");
    }
    double product = 2.0;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto &row = coefficients[i];
        if (j[i] < 0 || static_cast<std::size_t>(j[i]) >= row.size()) {
            throw ParameterError("xtilde: effect index out of range");
        }
        product *= row[static_cast<std::size_t>(j[i])];
    }
    switch (c) {
    case 0:
        return {product, 0.0};
    case 1:
        return {-product, 0.0};
    case 2:
        return {0.0, -product};
    default:
        return {0.0, product};
    }
}

Complex xtilde(const Outcome &outcome, const CoefficientTable &coefficients) {
    if (outcome.empty()) {
        throw ParameterError("xtilde: outcome tuple lacks the ancilla result");
    }
    return xtilde(std::span<const int>(outcome.data(), outcome.size() - 1),
                  outcome.back(), coefficients);
}

EstimatorResult estimate_mean(const SampleBatch &batch,
                              const ValueFunction &value) {
    if (batch.draws.empty()) {
        throw ParameterError("estimate_mean: empty batch");
    }
    // Values depend only on the outcome index, so evaluate each once.
    std::vector<Complex> table;
    table.reserve(batch.labels.size());
    for (const auto &label : batch.labels) {
        table.push_back(value(label));
    }
    RunningMoments re;
    RunningMoments im;
    for (std::uint32_t idx : batch.draws) {
        re.add(table[idx].real());
        im.add(table[idx].imag());
    }
    const std::size_t n = batch.draws.size();
    EstimatorResult out;
    out.mean = {re.sum / static_cast<double>(n),
                im.sum / static_cast<double>(n)};
    out.stderr_re = re.standard_error(n);
    out.stderr_im = im.standard_error(n);
    out.shots = n;
    return out;
}

EstimatorResult expectation(const OutcomeDistribution &dist,
                            const ValueFunction &value) {
    Complex mean = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        mean += dist.probability(i) * value(dist.outcome(i));
    }
    return EstimatorResult{mean, 0.0, 0.0, 0};
}

EstimatorResult aggregate(const SampleBatch &batch,
                          const CoefficientTable &coefficients) {
    return estimate_mean(batch, [&](const Outcome &o) {
        return xtilde(o, coefficients);
    });
}

EstimatorResult aggregate(const OutcomeDistribution &dist,
                          const CoefficientTable &coefficients) {
    return expectation(dist, [&](const Outcome &o) {
        return xtilde(o, coefficients);
    });
}

std::size_t hoeffding_shots(double epsilon, double delta, double range_bound) {
    if (!(epsilon > 0.0 && epsilon < 1.0) || !(delta > 0.0 && delta < 1.0) ||
        !(range_bound > 0.0)) {
        throw ParameterError("hoeffding_shots: need epsilon, delta in (0,1) "
                             "and positive range");
    }
    const double n = range_bound * range_bound * std::log(2.0 / delta) /
                     (2.0 * epsilon * epsilon);
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(n)));
}

EstimatorResult combine_independent(std::span<const EstimatorResult> parts) {
    EstimatorResult out{};
    double var_re = 0.0;
    double var_im = 0.0;
    for (const auto &p : parts) {
        out.mean += p.mean;
        var_re += p.stderr_re * p.stderr_re;
        var_im += p.stderr_im * p.stderr_im;
        out.shots += p.shots;
    }
    out.stderr_re = std::sqrt(var_re);
    out.stderr_im = std::sqrt(var_im);
    return out;
}

}  // namespace bargmann
