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

#include "bargmann/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bargmann/errors.hpp"

namespace bargmann {

namespace {

std::vector<std::size_t> strides_of(const Layout &layout) {
    std::vector<std::size_t> strides(layout.size(), 1);
    for (std::size_t k = layout.size(); k-- > 1;) {
        strides[k - 1] = strides[k] * layout[k];
    }
    return strides;
}

std::size_t digit(std::size_t index, std::size_t reg, const Layout &layout,
                  const std::vector<std::size_t> &strides) {
    return (index / strides[reg]) % layout[reg];
}

/// Index of `full` restricted to `targets`, first target slowest.
std::size_t sub_index(std::size_t full, const std::vector<std::size_t> &targets,
                      const Layout &layout,
                      const std::vector<std::size_t> &strides) {
    std::size_t out = 0;
    for (std::size_t t : targets) {
        out = out * layout[t] + digit(full, t, layout, strides);
    }
    return out;
}

/// Offsets into the full index for every local index of the targets.
std::vector<std::size_t> target_offsets(const std::vector<std::size_t> &targets,
                                        const Layout &layout,
                                        const std::vector<std::size_t> &strides) {
    std::vector<std::size_t> offsets{0};
    for (std::size_t t : targets) {
        std::vector<std::size_t> next;
        next.reserve(offsets.size() * layout[t]);
        for (std::size_t base : offsets) {
            for (std::size_t v = 0; v < layout[t]; ++v) {
                next.push_back(base + v * strides[t]);
            }
        }
        offsets = std::move(next);
    }
    return offsets;
}

/// Replaces the rows of `m` by (gate (x) identity) * m.
void apply_left(ComplexMatrix &m, const Gate &gate, const Layout &layout) {
    const auto strides = strides_of(layout);
    const auto offsets = target_offsets(gate.targets, layout, strides);
    const auto g = static_cast<Eigen::Index>(offsets.size());
    const std::size_t total = layout_dim(layout);
    ComplexMatrix gathered(g, m.cols());
    for (std::size_t base = 0; base < total; ++base) {
        bool is_base = true;
        for (std::size_t t : gate.targets) {
            if (digit(base, t, layout, strides) != 0) {
                is_base = false;
                break;
            }
        }
        if (!is_base) {
            continue;
        }
        for (Eigen::Index a = 0; a < g; ++a) {
            gathered.row(a) = m.row(static_cast<Eigen::Index>(base + offsets[a]));
        }
        const ComplexMatrix updated = gate.unitary * gathered;
        for (Eigen::Index a = 0; a < g; ++a) {
            m.row(static_cast<Eigen::Index>(base + offsets[a])) = updated.row(a);
        }
    }
}

ComplexMatrix diag2(Complex a, Complex b) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

ComplexMatrix swap_matrix(std::size_t d) {
    if (d < 1) {
        throw ParameterError("SWAP: local dimension must be >= 1");
    }
    const std::size_t dd = checked_power(d, 2, "SWAP");
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(dd),
                                          static_cast<Eigen::Index>(dd));
    for (std::size_t u = 0; u < d; ++u) {
        for (std::size_t v = 0; v < d; ++v) {
            m(static_cast<Eigen::Index>(v * d + u),
              static_cast<Eigen::Index>(u * d + v)) = 1.0;
        }
    }
    return m;
}

}  // namespace

std::size_t layout_dim(const Layout &layout) {
    std::size_t dim = 1;
    for (std::size_t d : layout) {
        if (d == 0) {
            throw DimensionError("layout: register dimension 0");
        }
        if (dim > kDimensionCap / d) {
            check_capacity(kDimensionCap + 1, "layout");
        }
        dim *= d;
    }
    check_capacity(dim, "layout");
    return dim;
}

ComplexMatrix controlled(const ComplexMatrix &u) {
    const auto n = u.rows();
    ComplexMatrix m = ComplexMatrix::Zero(2 * n, 2 * n);
    m.topLeftCorner(n, n) = ComplexMatrix::Identity(n, n);
    m.bottomRightCorner(n, n) = u;
    return m;
}

ComplexMatrix standard_unitary(std::string_view name, const GateParams &params) {
    const Complex i(0.0, 1.0);
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix h(2, 2);
    h << s, s, s, -s;
    ComplexMatrix x(2, 2);
    x << 0.0, 1.0, 1.0, 0.0;
    ComplexMatrix y(2, 2);
    y << 0.0, -i, i, 0.0;

    if (name == "H") {
        return h;
    }
    if (name == "X") {
        return x;
    }
    if (name == "Y") {
        return y;
    }
    if (name == "Z") {
        return diag2(1.0, -1.0);
    }
    if (name == "CNOT") {
        return controlled(x);
    }
    if (name == "SWAP") {
        return swap_matrix(params.dim);
    }
    if (name == "cSWAP") {
        return controlled(swap_matrix(params.dim));
    }
    if (name == "cU") {
        if (params.unitary.size() == 0 || !is_unitary(params.unitary)) {
            throw ParameterError("cU: parameter is not a unitary");
        }
        return controlled(params.unitary);
    }
    if (name == "P") {
        return diag2(1.0, std::polar(1.0, params.angle));
    }
    if (name == "Ps") {
        // i^s for any integer s, exact for the four residues.
        static const Complex powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        return diag2(1.0, powers[((params.s % 4) + 4) % 4]);
    }
    if (name == "Ry") {
        const double c = std::cos(params.angle / 2.0);
        const double sn = std::sin(params.angle / 2.0);
        ComplexMatrix r(2, 2);
        r << c, -sn, sn, c;
        return r;
    }
    if (name == "cH") {
        return controlled(h);
    }
    if (name == "cP") {
        return controlled(diag2(1.0, std::polar(1.0, params.angle)));
    }
    throw ParameterError("unknown gate '" + std::string(name) + "'");
}

Gate standard_gate(std::string_view name, std::vector<std::size_t> targets,
                   const GateParams &params) {
    return Gate{std::string(name), standard_unitary(name, params),
                std::move(targets)};
}

Circuit::Circuit(Layout layout)
    : layout_(std::move(layout)), dim_(layout_dim(layout_)) {}

Circuit &Circuit::add(Gate gate) {
    if (gate.targets.empty()) {
        throw ParameterError("gate '" + gate.name + "' has no targets");
    }
    std::size_t local = 1;
    for (std::size_t k = 0; k < gate.targets.size(); ++k) {
        const std::size_t t = gate.targets[k];
        if (t >= layout_.size()) {
            throw ParameterError("gate '" + gate.name + "' targets register " +
                                 std::to_string(t) + " of " +
                                 std::to_string(layout_.size()));
        }
        if (std::find(gate.targets.begin(), gate.targets.begin() + k, t) !=
            gate.targets.begin() + k) {
            throw ParameterError("gate '" + gate.name +
                                 "' repeats a target register");
        }
        local *= layout_[t];
    }
    if (static_cast<std::size_t>(gate.unitary.rows()) != local ||
        gate.unitary.rows() != gate.unitary.cols()) {
        throw DimensionError("gate '" + gate.name + "' has dimension " +
                             std::to_string(gate.unitary.rows()) +
                             ", targets need " + std::to_string(local));
    }
    if (!is_unitary(gate.unitary)) {
        throw ParameterError("gate '" + gate.name + "' is not unitary");
    }
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit &Circuit::add(std::string_view name, std::vector<std::size_t> targets,
                      const GateParams &params) {
    return add(standard_gate(name, std::move(targets), params));
}

std::size_t Circuit::count(std::string_view gate_name) const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(),
                      [&](const Gate &g) { return g.name == gate_name; }));
}

DensityMatrix apply_circuit(const Circuit &circuit, const DensityMatrix &input) {
    if (input.dim() != circuit.dim()) {
        throw DimensionError("apply_circuit: state dimension " +
                             std::to_string(input.dim()) +
                             " does not match layout dimension " +
                             std::to_string(circuit.dim()));
    }
    ComplexMatrix rho = input.matrix();
    for (const Gate &gate : circuit.gates()) {
        // U rho U^dagger = (U (U rho)^dagger)^dagger
        apply_left(rho, gate, circuit.layout());
        rho.adjointInPlace();
        apply_left(rho, gate, circuit.layout());
        rho.adjointInPlace();
    }
    return DensityMatrix::unchecked(std::move(rho));
}

ComplexVector apply_circuit(const Circuit &circuit, const ComplexVector &input) {
    if (static_cast<std::size_t>(input.size()) != circuit.dim()) {
        throw DimensionError("apply_circuit: vector dimension mismatch");
    }
    ComplexMatrix v = input;
    for (const Gate &gate : circuit.gates()) {
        apply_left(v, gate, circuit.layout());
    }
    return v.col(0);
}

ComplexMatrix embed_gate(const Gate &gate, const Layout &layout) {
    const std::size_t total = layout_dim(layout);
    const auto strides = strides_of(layout);
    std::vector<std::size_t> others;
    for (std::size_t r = 0; r < layout.size(); ++r) {
        if (std::find(gate.targets.begin(), gate.targets.end(), r) ==
            gate.targets.end()) {
            others.push_back(r);
        }
    }
    const auto n = static_cast<Eigen::Index>(total);
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (std::size_t row = 0; row < total; ++row) {
        const std::size_t row_rest = sub_index(row, others, layout, strides);
        const std::size_t row_local =
            sub_index(row, gate.targets, layout, strides);
        for (std::size_t col = 0; col < total; ++col) {
            if (sub_index(col, others, layout, strides) != row_rest) {
                continue;
            }
            m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
                gate.unitary(static_cast<Eigen::Index>(row_local),
                             static_cast<Eigen::Index>(sub_index(
                                 col, gate.targets, layout, strides)));
        }
    }
    return m;
}

ComplexMatrix circuit_unitary(const Circuit &circuit) {
    ComplexMatrix u = identity(circuit.dim());
    for (const Gate &gate : circuit.gates()) {
        u = embed_gate(gate, circuit.layout()) * u;
    }
    return u;
}

ComplexMatrix partial_trace(const ComplexMatrix &state, const Layout &layout,
                            const std::vector<std::size_t> &keep) {
    const std::size_t total = layout_dim(layout);
    if (static_cast<std::size_t>(state.rows()) != total ||
        state.rows() != state.cols()) {
        throw DimensionError("partial_trace: state does not match layout");
    }
    if (!std::is_sorted(keep.begin(), keep.end()) ||
        std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
        throw ParameterError("partial_trace: keep list must be ascending");
    }
    std::vector<std::size_t> traced;
    for (std::size_t r = 0; r < layout.size(); ++r) {
        if (std::find(keep.begin(), keep.end(), r) == keep.end()) {
            traced.push_back(r);
        }
    }
    for (std::size_t k : keep) {
        if (k >= layout.size()) {
            throw ParameterError("partial_trace: register out of range");
        }
    }
    const auto strides = strides_of(layout);
    const auto keep_offsets = target_offsets(keep, layout, strides);
    const auto traced_offsets = target_offsets(traced, layout, strides);
    const auto k = static_cast<Eigen::Index>(keep_offsets.size());
    ComplexMatrix out = ComplexMatrix::Zero(k, k);
    for (Eigen::Index a = 0; a < k; ++a) {
        for (Eigen::Index b = 0; b < k; ++b) {
            Complex sum = 0.0;
            for (std::size_t t : traced_offsets) {
                sum += state(static_cast<Eigen::Index>(keep_offsets[a] + t),
                             static_cast<Eigen::Index>(keep_offsets[b] + t));
            }
            out(a, b) = sum;
        }
    }
    return out;
}

OutcomeDistribution
measure_local(const DensityMatrix &state, const Layout &layout,
              const std::vector<LocalMeasurement> &measurements) {
    if (state.dim() != layout_dim(layout)) {
        throw DimensionError("measure_local: state does not match layout");
    }
    std::vector<std::size_t> regs;
    for (const auto &m : measurements) {
        if (m.register_index >= layout.size()) {
            throw ParameterError("measure_local: register " +
                                 std::to_string(m.register_index) +
                                 " out of range");
        }
        if (std::find(regs.begin(), regs.end(), m.register_index) !=
            regs.end()) {
            throw ParameterError("measure_local: register measured twice");
        }
        if (m.povm.dim() != layout[m.register_index]) {
            throw DimensionError("measure_local: POVM dimension " +
                                 std::to_string(m.povm.dim()) +
                                 " does not match register dimension " +
                                 std::to_string(layout[m.register_index]));
        }
        regs.push_back(m.register_index);
    }
    std::vector<std::size_t> sorted = regs;
    std::sort(sorted.begin(), sorted.end());
    const ComplexMatrix reduced =
        partial_trace(state.matrix(), layout, sorted);

    // measurement slot for each sorted register
    std::vector<std::size_t> slot_of_sorted(sorted.size());
    for (std::size_t s = 0; s < sorted.size(); ++s) {
        slot_of_sorted[s] = static_cast<std::size_t>(
            std::find(regs.begin(), regs.end(), sorted[s]) - regs.begin());
    }

    std::size_t count = 1;
    for (const auto &m : measurements) {
        count *= m.povm.size();
    }
    std::vector<Outcome> outcomes;
    std::vector<double> probs;
    outcomes.reserve(count);
    probs.reserve(count);
    for (std::size_t flat = 0; flat < count; ++flat) {
        Outcome current(measurements.size(), 0);
        std::size_t rest = flat;
        for (std::size_t slot = measurements.size(); slot-- > 0;) {
            const std::size_t size = measurements[slot].povm.size();
            current[slot] = static_cast<int>(rest % size);
            rest /= size;
        }
        ComplexMatrix effect = ComplexMatrix::Identity(1, 1);
        for (std::size_t s = 0; s < sorted.size(); ++s) {
            const std::size_t slot = slot_of_sorted[s];
            effect = kron(effect, measurements[slot].povm.effect(
                                      static_cast<std::size_t>(current[slot])));
        }
        // Tr[E rho] = sum_ij E_ij rho_ji
        const Complex p = effect.cwiseProduct(reduced.transpose()).sum();
        outcomes.push_back(std::move(current));
        probs.push_back(p.real());
    }
    return OutcomeDistribution::from_raw(std::move(outcomes), std::move(probs));
}

}  // namespace bargmann
