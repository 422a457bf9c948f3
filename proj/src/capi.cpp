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

#include "bargmann/bargmann.h"

#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "bargmann/cycle.hpp"
#include "bargmann/errors.hpp"
#include "bargmann/estimation.hpp"
#include "bargmann/protocols.hpp"
#include "bargmann/state.hpp"
#include "bargmann/validation.hpp"

struct bg_state {
    bargmann::DensityMatrix rho;
};

struct bg_orbit_table {
    std::vector<bargmann::CyclicOrbit> rows;
    std::vector<std::vector<bargmann::Complex>> eigenvalues;
};

struct bg_validation {
    bargmann::ValidationReport report;
};

namespace {

thread_local std::string last_error;

bg_status code_for(bargmann::ErrorKind kind) {
    using bargmann::ErrorKind;
    switch (kind) {
    case ErrorKind::Dimension:
        return BG_ERR_DIMENSION;
    case ErrorKind::Capacity:
        return BG_ERR_CAPACITY;
    case ErrorKind::Parameter:
        return BG_ERR_PARAMETER;
    case ErrorKind::State:
        return BG_ERR_STATE;
    case ErrorKind::Povm:
        return BG_ERR_POVM;
    case ErrorKind::UnsupportedDimension:
        return BG_ERR_UNSUPPORTED_DIMENSION;
    case ErrorKind::InternalConsistency:
        return BG_ERR_INTERNAL_CONSISTENCY;
    }
    return BG_ERR_UNKNOWN;
}

template <typename F>
bg_status guarded(F &&body) {
    try {
        body();
        last_error.clear();
        return BG_OK;
    } catch (const bargmann::Error &e) {
        last_error = e.what();
        return code_for(e.kind());
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return BG_ERR_CAPACITY;
    } catch (const std::exception &e) {
        last_error = e.what();
        return BG_ERR_UNKNOWN;
    }
}

void require(bool ok, const char *what) {
    if (!ok) {
        throw bargmann::ParameterError(std::string("null argument: ") + what);
    }
}

std::vector<bargmann::DensityMatrix> collect(const bg_state *const *states,
                                             size_t n) {
    require(n == 0 || states != nullptr, "state array");
    std::vector<bargmann::DensityMatrix> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        require(states[i] != nullptr, "state");
        out.push_back(states[i]->rho);
    }
    return out;
}

bargmann::ProtocolConfig make_config(const bg_state *const *unknown,
                                     size_t n_unknown,
                                     const bg_state *const *known,
                                     size_t n_known) {
    bargmann::ProtocolConfig config;
    config.unknown_states = collect(unknown, n_unknown);
    config.known_states = collect(known, n_known);
    return config;
}

bg_resources to_c(const bargmann::ResourceCount &r) {
    return {r.system_registers, r.ancilla_qubits, r.fredkin_gates,
            r.measured_registers};
}

void emit_state(bargmann::DensityMatrix rho, bg_state **out) {
    require(out != nullptr, "out");
    *out = new bg_state{std::move(rho)};
}

}  // namespace

extern "C" {

const char *bg_version(void) { return "0.1.0"; }

const char *bg_last_error(void) { return last_error.c_str(); }

const char *bg_status_name(bg_status status) {
    switch (status) {
    case BG_OK:
        return "ok";
    case BG_ERR_DIMENSION:
        return "DimensionError";
    case BG_ERR_CAPACITY:
        return "CapacityError";
    case BG_ERR_PARAMETER:
        return "ParameterError";
    case BG_ERR_STATE:
        return "StateError";
    case BG_ERR_POVM:
        return "PovmError";
    case BG_ERR_UNSUPPORTED_DIMENSION:
        return "UnsupportedDimension";
    case BG_ERR_INTERNAL_CONSISTENCY:
        return "InternalConsistencyError";
    case BG_ERR_UNKNOWN:
        break;
    }
    return "unknown error";
}

bg_status bg_state_from_matrix(size_t dim, const double *values,
                               bg_state **out) {
    return guarded([&] {
        require(values != nullptr, "values");
        bargmann::check_capacity(dim, "state matrix");
        bargmann::ComplexMatrix m(dim, dim);
        for (size_t r = 0; r < dim; ++r) {
            for (size_t c = 0; c < dim; ++c) {
                const size_t k = 2 * (r * dim + c);
                m(r, c) = bargmann::Complex(values[k], values[k + 1]);
            }
        }
        emit_state(bargmann::DensityMatrix::from_matrix(m), out);
    });
}

bg_status bg_state_preset(const char *name, bg_state **out) {
    return guarded([&] {
        require(name != nullptr, "name");
        emit_state(bargmann::pure_to_density(bargmann::preset_state(name)), out);
    });
}

bg_status bg_state_random(size_t dim, size_t rank, uint64_t seed,
                          bg_state **out) {
    return guarded([&] {
        emit_state(bargmann::random_density_matrix(dim, rank, seed), out);
    });
}

void bg_state_free(bg_state *state) { delete state; }

size_t bg_state_dim(const bg_state *state) {
    return state == nullptr ? 0 : state->rho.dim();
}

bg_status bg_state_get(const bg_state *state, double *values, size_t count) {
    return guarded([&] {
        require(state != nullptr, "state");
        require(values != nullptr, "values");
        const size_t dim = state->rho.dim();
        if (count < 2 * dim * dim) {
            throw bargmann::ParameterError("output buffer too small");
        }
        const auto &m = state->rho.matrix();
        for (size_t r = 0; r < dim; ++r) {
            for (size_t c = 0; c < dim; ++c) {
                const size_t k = 2 * (r * dim + c);
                values[k] = m(r, c).real();
                values[k + 1] = m(r, c).imag();
            }
        }
    });
}

bg_status bg_direct_invariant(const bg_state *const *states, size_t n,
                              double *re, double *im) {
    return guarded([&] {
        require(re != nullptr && im != nullptr, "re/im");
        const auto tuple = collect(states, n);
        const auto v = bargmann::direct_invariant(tuple);
        *re = v.real();
        *im = v.imag();
    });
}

size_t bg_protocol_count(void) { return bargmann::kAllProtocols.size(); }

const char *bg_protocol_name(size_t index) {
    if (index >= bargmann::kAllProtocols.size()) {
        return nullptr;
    }
    // protocol_name returns views of string literals.
    return bargmann::protocol_name(bargmann::kAllProtocols[index]).data();
}

bg_status bg_run_protocol(const char *protocol, const bg_state *const *unknown,
                          size_t n_unknown, const bg_state *const *known,
                          size_t n_known, const bg_run_options *options,
                          bg_estimate *out) {
    return guarded([&] {
        require(protocol != nullptr, "protocol");
        require(options != nullptr, "options");
        require(out != nullptr, "out");
        auto config = make_config(unknown, n_unknown, known, n_known);
        config.options.mode = options->mode == BG_MODE_SAMPLED
                                  ? bargmann::Mode::Sampled
                                  : bargmann::Mode::Exact;
        config.options.shots = options->shots;
        config.options.seed = options->seed;
        const auto est = bargmann::run_protocol(
            bargmann::protocol_from_name(protocol), config);
        *out = {est.value.real(), est.value.imag(), est.stderr_re,
                est.stderr_im,    est.shots_used,   to_c(est.resources)};
    });
}

bg_status bg_protocol_oracle(const char *protocol,
                             const bg_state *const *unknown, size_t n_unknown,
                             const bg_state *const *known, size_t n_known,
                             double *re, double *im) {
    return guarded([&] {
        require(protocol != nullptr, "protocol");
        require(re != nullptr && im != nullptr, "re/im");
        const auto config = make_config(unknown, n_unknown, known, n_known);
        const auto v = bargmann::direct_invariant(bargmann::target_tuple(
            bargmann::protocol_from_name(protocol), config));
        *re = v.real();
        *im = v.imag();
    });
}

bg_status bg_resources_for(const char *protocol, size_t n, size_t m,
                           bg_resources *out) {
    return guarded([&] {
        require(protocol != nullptr, "protocol");
        require(out != nullptr, "out");
        *out = to_c(bargmann::resources_for(
            bargmann::protocol_from_name(protocol), n, m));
    });
}

bg_status bg_hoeffding_shots(double epsilon, double delta, double range_bound,
                             uint64_t *out) {
    return guarded([&] {
        require(out != nullptr, "out");
        *out = bargmann::hoeffding_shots(epsilon, delta, range_bound);
    });
}

bg_status bg_orbits_create(size_t n, bg_orbit_table **out) {
    return guarded([&] {
        require(out != nullptr, "out");
        auto table = std::make_unique<bg_orbit_table>();
        const auto decomposition = bargmann::enumerate_orbits(n);
        for (const auto &[weight, orbits] : decomposition.orbits_by_weight) {
            for (const auto &orbit : orbits) {
                table->rows.push_back(orbit);
                auto &ev = table->eigenvalues.emplace_back();
                for (size_t ell = 0; ell < orbit.period; ++ell) {
                    ev.push_back(bargmann::fourier_eigenvalue(orbit.period, ell));
                }
            }
        }
        *out = table.release();
    });
}

void bg_orbits_free(bg_orbit_table *table) { delete table; }

size_t bg_orbits_count(const bg_orbit_table *table) {
    return table == nullptr ? 0 : table->rows.size();
}

bg_status bg_orbits_row(const bg_orbit_table *table, size_t index,
                        bg_orbit_row *out) {
    return guarded([&] {
        require(table != nullptr && out != nullptr, "table/out");
        if (index >= table->rows.size()) {
            throw bargmann::ParameterError("orbit index out of range");
        }
        const auto &o = table->rows[index];
        *out = {o.n, o.weight, o.representative, o.period};
    });
}

bg_status bg_orbits_eigenvalue(const bg_orbit_table *table, size_t index,
                               size_t ell, double *re, double *im) {
    return guarded([&] {
        require(table != nullptr, "table");
        require(re != nullptr && im != nullptr, "re/im");
        if (index >= table->rows.size() ||
            ell >= table->eigenvalues[index].size()) {
            throw bargmann::ParameterError("orbit or ell index out of range");
        }
        *re = table->eigenvalues[index][ell].real();
        *im = table->eigenvalues[index][ell].imag();
    });
}

bg_status bg_necklace_count(size_t n, uint64_t *out) {
    return guarded([&] {
        require(out != nullptr, "out");
        *out = bargmann::necklace_count(n);
    });
}

bg_status bg_validate(size_t trials, uint64_t seed, bg_validation **out) {
    return guarded([&] {
        require(out != nullptr, "out");
        bargmann::ValidationOptions options;
        options.trials = trials;
        options.seed = seed;
        *out = new bg_validation{bargmann::run_validation(options)};
    });
}

void bg_validation_free(bg_validation *report) { delete report; }

size_t bg_validation_count(const bg_validation *report) {
    return report == nullptr ? 0 : report->report.checks.size();
}

bg_status bg_validation_check(const bg_validation *report, size_t index,
                              const char **name, int *passed,
                              const char **detail) {
    return guarded([&] {
        require(report != nullptr, "report");
        if (index >= report->report.checks.size()) {
            throw bargmann::ParameterError("check index out of range");
        }
        const auto &c = report->report.checks[index];
        if (name != nullptr) {
            *name = c.name.c_str();
        }
        if (passed != nullptr) {
            *passed = c.passed ? 1 : 0;
        }
        if (detail != nullptr) {
            *detail = c.detail.c_str();
        }
    });
}

int bg_validation_all_passed(const bg_validation *report) {
    return report != nullptr && report->report.all_passed() ? 1 : 0;
}

}  // extern "C"
