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
#include <string>
#include <string_view>
#include <vector>

#include "bargmann/distribution.hpp"
#include "bargmann/numerics.hpp"
#include "bargmann/state.hpp"

namespace bargmann {

/// Local dimensions of the registers of a circuit, slowest-varying first.
using Layout = std::vector<std::size_t>;

std::size_t layout_dim(const Layout &layout);

/// Unitary acting on an ordered list of registers. The first target is the
/// slowest-varying factor of the gate's own index.
struct Gate {
    std::string name;
    ComplexMatrix unitary;
    std::vector<std::size_t> targets;
};

/// Parameters for `standard_gate`; each gate reads only what it needs.
struct GateParams {
    std::size_t dim = 2;   // local dimension for SWAP and cSWAP
    double angle = 0.0;    // P, cP, Ry
    int s = 0;             // Ps
    ComplexMatrix unitary; // cU
};

/// Matrix for a named gate. Known names: H, X, Y, Z, CNOT, SWAP, cSWAP, cU,
/// P, Ps, Ry, cH, cP. Controlled gates put the control qubit first.
/// Throws ParameterError for anything else.
ComplexMatrix standard_unitary(std::string_view name,
                               const GateParams &params = {});

Gate standard_gate(std::string_view name, std::vector<std::size_t> targets,
                   const GateParams &params = {});

/// |0><0| (x) 1 + |1><1| (x) u.
ComplexMatrix controlled(const ComplexMatrix &u);

class Circuit {
  public:
    explicit Circuit(Layout layout);

    /// Throws ParameterError for out-of-range or repeated targets and
    /// DimensionError when the unitary does not fit the target registers.
    Circuit &add(Gate gate);
    Circuit &add(std::string_view name, std::vector<std::size_t> targets,
                 const GateParams &params = {});

    const Layout &layout() const noexcept { return layout_; }
    const std::vector<Gate> &gates() const noexcept { return gates_; }
    std::size_t dim() const noexcept { return dim_; }

    std::size_t count(std::string_view gate_name) const;

  private:
    Layout layout_;
    std::size_t dim_;
    std::vector<Gate> gates_;
};

/// U rho U^dagger with gates applied in order, each acting locally on its
/// target registers.
DensityMatrix apply_circuit(const Circuit &circuit, const DensityMatrix &input);

ComplexVector apply_circuit(const Circuit &circuit, const ComplexVector &input);

/// Total unitary, built by embedding each gate with identities elsewhere.
/// Independent of the local-update path used by `apply_circuit`.
ComplexMatrix circuit_unitary(const Circuit &circuit);

/// Gate unitary tensored with identities on the other registers.
ComplexMatrix embed_gate(const Gate &gate, const Layout &layout);

/// Reduced operator on the `keep` registers (listed in ascending order).
ComplexMatrix partial_trace(const ComplexMatrix &state, const Layout &layout,
                            const std::vector<std::size_t> &keep);

struct LocalMeasurement {
    std::size_t register_index;
    Povm povm;
};

/// Joint distribution of local POVMs, unmeasured registers traced out.
/// Outcome tuples list effect indices in the order of `measurements`,
/// enumerated with the last measurement varying fastest.
OutcomeDistribution
measure_local(const DensityMatrix &state, const Layout &layout,
              const std::vector<LocalMeasurement> &measurements);

}  // namespace bargmann
