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

#include "bargmann/distribution.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "bargmann/errors.hpp"

namespace bargmann {

OutcomeDistribution
OutcomeDistribution::from_raw(std::vector<Outcome> outcomes,
                              std::vector<double> probabilities) {
    if (outcomes.size() != probabilities.size()) {
        throw ParameterError("distribution: outcome/probability count differ");
    }
    if (outcomes.empty()) {
        throw ParameterError("distribution: no outcomes");
    }
    for (double &p : probabilities) {
        if (!std::isfinite(p)) {
            throw ParameterError("distribution: non-finite probability");
        }
        if (p < 0.0) {
            if (p < -kNegativeClamp) {
                throw ParameterError("distribution: negative probability " +
                                     std::to_string(p));
            }
            p = 0.0;
        }
    }
    const double sum =
        std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
    if (std::abs(sum - 1.0) > kNormalizationTolerance) {
        throw ParameterError("distribution: probabilities sum to " +
                             std::to_string(sum));
    }
    for (double &p : probabilities) {
        p /= sum;
    }
    OutcomeDistribution out;
    out.outcomes_ = std::move(outcomes);
    out.probabilities_ = std::move(probabilities);
    return out;
}

double OutcomeDistribution::probability_of(const Outcome &outcome) const {
    for (std::size_t i = 0; i < outcomes_.size(); ++i) {
        if (outcomes_[i] == outcome) {
            return probabilities_[i];
        }
    }
    return 0.0;
}

double OutcomeDistribution::total() const noexcept {
    return std::accumulate(probabilities_.begin(), probabilities_.end(), 0.0);
}

}  // namespace bargmann
