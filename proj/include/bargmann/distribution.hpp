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
#include <vector>

namespace bargmann {

using Outcome = std::vector<int>;

/// Probability distribution over a finite list of outcome tuples.
///
/// Probabilities are non-negative and sum to one within 1e-9. Slightly
/// negative inputs (>= -1e-12, floating-point noise) are clamped to zero and
/// the remainder renormalized; anything more negative is rejected.
class OutcomeDistribution {
  public:
    OutcomeDistribution() = default;

    /// Throws ParameterError on size mismatch, negative mass below -1e-12,
    /// or total mass not within 1e-9 of one.
    static OutcomeDistribution from_raw(std::vector<Outcome> outcomes,
                                        std::vector<double> probabilities);

    std::size_t size() const noexcept { return outcomes_.size(); }
    const std::vector<Outcome> &outcomes() const noexcept { return outcomes_; }
    const std::vector<double> &probabilities() const noexcept {
        return probabilities_;
    }
    const Outcome &outcome(std::size_t i) const { return outcomes_.at(i); }
    double probability(std::size_t i) const { return probabilities_.at(i); }

    /// Probability of a given tuple, 0 if absent.
    double probability_of(const Outcome &outcome) const;

    double total() const noexcept;

  private:
    std::vector<Outcome> outcomes_;
    std::vector<double> probabilities_;
};

inline constexpr double kNegativeClamp = 1e-12;
inline constexpr double kNormalizationTolerance = 1e-9;

}  // namespace bargmann
