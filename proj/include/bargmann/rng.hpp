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

namespace bargmann {

/// Stateless SplitMix64-style hash of (seed, stream, counter). Every random
/// draw in the library is a pure function of these three values, so results
/// do not depend on evaluation order or on how work is split across threads.
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t counter) noexcept;

/// Uniform double in [0, 1) with 53 random bits.
double counter_uniform(std::uint64_t seed, std::uint64_t stream,
                       std::uint64_t counter) noexcept;

/// Sequential view over the counter hash for code that wants a stream of
/// draws. Copying the object forks the stream.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream) {}

    std::uint64_t next_u64() noexcept {
        return counter_hash(seed_, stream_, counter_++);
    }
    double uniform() noexcept {
        return counter_uniform(seed_, stream_, counter_++);
    }
    /// Standard normal via Box-Muller; consumes two counters.
    double normal() noexcept;

    std::uint64_t counter() const noexcept { return counter_; }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

}  // namespace bargmann
