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
#include <string>
#include <vector>

namespace bargmann {

struct ValidationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    bool all_passed() const;
};

struct ValidationOptions {
    std::size_t trials = 20;
    std::uint64_t seed = 2024;
};

/// Property suite over random inputs: exact-mode oracle agreement of every
/// protocol, distribution cross-checks, invariances of the direct trace,
/// cycle-structure combinatorics, destructive-circuit relations and the
/// resource law. Each check records its worst deviation in `detail`.
ValidationReport run_validation(const ValidationOptions &options = {});

}  // namespace bargmann
