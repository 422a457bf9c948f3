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

// Experiment runner over the bargmann C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bargmann/bargmann.h"

namespace {

using nlohmann::json;

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

// Bad input the user can fix: exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Failure reported by the library: exit 1.
struct LibraryError : std::runtime_error {
    LibraryError(bg_status s, const std::string &what)
        : std::runtime_error(std::string(bg_status_name(s)) + ": " + what),
          status(s) {}
    bg_status status;
};

void check(bg_status s) {
    if (s != BG_OK) {
        throw LibraryError(s, bg_last_error());
    }
}

struct StateDeleter {
    void operator()(bg_state *s) const { bg_state_free(s); }
};
using StatePtr = std::unique_ptr<bg_state, StateDeleter>;

struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> shots;
    std::optional<std::string> mode;
};

bg_mode parse_mode(const std::string &m) {
    if (m == "exact") {
        return BG_MODE_EXACT;
    }
    if (m == "sampled") {
        return BG_MODE_SAMPLED;
    }
    throw UsageError("mode must be 'exact' or 'sampled', got '" + m + "'");
}

StatePtr state_from_spec(const json &spec) {
    bg_state *raw = nullptr;
    if (spec.is_string()) {
        check(bg_state_preset(spec.get<std::string>().c_str(), &raw));
        return StatePtr(raw);
    }
    if (!spec.is_object()) {
        throw UsageError("state must be a preset name or an object");
    }
    if (spec.contains("random")) {
        const json &r = spec.at("random");
        check(bg_state_random(r.value("dim", std::size_t{2}),
                              r.value("rank", std::size_t{1}),
                              r.value("seed", std::uint64_t{0}), &raw));
        return StatePtr(raw);
    }
    if (!spec.contains("rows")) {
        throw UsageError("state object needs 'rows' or 'random'");
    }
    const json &rows = spec.at("rows");
    const std::size_t dim = spec.value("dim", rows.size());
    if (rows.size() != dim) {
        throw UsageError("state 'rows' count does not match 'dim'");
    }
    std::vector<double> values;
    values.reserve(2 * dim * dim);
    for (const json &row : rows) {
        if (row.size() != dim) {
            throw UsageError("state row length does not match 'dim'");
        }
        for (const json &entry : row) {
            if (!entry.is_array() || entry.size() != 2) {
                throw UsageError("matrix entries are [re, im] pairs");
            }
            values.push_back(entry[0].get<double>());
            values.push_back(entry[1].get<double>());
        }
    }
    check(bg_state_from_matrix(dim, values.data(), &raw));
    return StatePtr(raw);
}

std::vector<StatePtr> states_from(const json &list, const char *key) {
    if (!list.is_array()) {
        throw UsageError(std::string("'") + key + "' must be an array");
    }
    std::vector<StatePtr> out;
    for (const json &spec : list) {
        out.push_back(state_from_spec(spec));
    }
    return out;
}

std::vector<const bg_state *> raw(const std::vector<StatePtr> &states) {
    std::vector<const bg_state *> out;
    for (const auto &s : states) {
        out.push_back(s.get());
    }
    return out;
}

json complex_json(double re, double im) { return {{"re", re}, {"im", im}}; }

json resources_json(const bg_resources &r) {
    return {{"system_registers", r.system_registers},
            {"ancilla_qubits", r.ancilla_qubits},
            {"fredkin_gates", r.fredkin_gates},
            {"measured_registers", r.measured_registers}};
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw UsageError("cannot parse '" + path + "': " + e.what());
    }
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << text;
}

std::string utc_timestamp() {
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Resolved experiment: config keys after overrides, plus live states.
struct Experiment {
    json echo;
    std::string protocol;
    std::vector<StatePtr> unknown;
    std::vector<StatePtr> known;
    bg_run_options options{BG_MODE_EXACT, 1000, 0};
    std::string output;
};

Experiment load_experiment(const json &config, const Overrides &ov) {
    if (!config.is_object()) {
        throw UsageError("config must be a JSON object");
    }
    Experiment e;
    try {
        e.protocol = config.at("protocol").get<std::string>();
        e.echo = config;
        if (ov.mode) {
            e.echo["mode"] = *ov.mode;
        }
        if (ov.shots) {
            e.echo["shots"] = *ov.shots;
        }
        if (ov.seed) {
            e.echo["seed"] = *ov.seed;
        }
        e.options.mode = parse_mode(e.echo.value("mode", std::string("exact")));
        e.options.shots = e.echo.value("shots", std::uint64_t{1000});
        e.options.seed = e.echo.value("seed", std::uint64_t{0});
        e.output = config.value("output", std::string());
        e.unknown = states_from(config.at("states"), "states");
        e.known = states_from(config.value("known_states", json::array()),
                              "known_states");
        if (config.contains("n_prime") &&
            config.at("n_prime").get<std::size_t>() != e.unknown.size()) {
            throw UsageError("'n_prime' does not match the number of states");
        }
        if (config.contains("m") &&
            config.at("m").get<std::size_t>() != e.known.size()) {
            throw UsageError("'m' does not match the number of known states");
        }
    } catch (const json::exception &ex) {
        throw UsageError(std::string("bad config: ") + ex.what());
    }
    e.echo.erase("output");
    return e;
}

int cmd_run(const std::string &config_path, std::string out_path,
            const Overrides &ov) {
    const auto start = std::chrono::steady_clock::now();
    const std::string timestamp = utc_timestamp();
    Experiment e = load_experiment(read_json_file(config_path), ov);
    const auto unknown = raw(e.unknown);
    const auto known = raw(e.known);

    bg_estimate est{};
    check(bg_run_protocol(e.protocol.c_str(), unknown.data(), unknown.size(),
                          known.data(), known.size(), &e.options, &est));
    double ore = 0.0;
    double oim = 0.0;
    check(bg_protocol_oracle(e.protocol.c_str(), unknown.data(),
                             unknown.size(), known.data(), known.size(), &ore,
                             &oim));
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();

    json body;
    body["config"] = e.echo;
    body["estimate"] = complex_json(est.re, est.im);
    body["stderr"] = complex_json(est.stderr_re, est.stderr_im);
    body["oracle"] = complex_json(ore, oim);
    body["abs_error"] = std::hypot(est.re - ore, est.im - oim);
    body["shots_used"] = est.shots_used;
    body["resources"] = resources_json(est.resources);
    json report;
    report["header"] = {{"timestamp", timestamp},
                        {"duration_seconds", elapsed}};
    report["report"] = body;
    if (out_path.empty()) {
        out_path = e.output;
    }
    write_output(out_path, report.dump(2) + "\n");
    return 0;
}

int cmd_oracle(const std::string &config_path) {
    const json config = read_json_file(config_path);
    std::vector<StatePtr> states;
    try {
        states = states_from(config.at("states"), "states");
    } catch (const json::exception &ex) {
        throw UsageError(std::string("bad config: ") + ex.what());
    }
    const auto ptrs = raw(states);
    double re = 0.0;
    double im = 0.0;
    check(bg_direct_invariant(ptrs.data(), ptrs.size(), &re, &im));
    std::cout << json{{"oracle", complex_json(re, im)}}.dump(2) << "\n";
    return 0;
}

// Random qubit inputs with the shape a protocol expects for order n.
struct Inputs {
    std::vector<StatePtr> unknown;
    std::vector<StatePtr> known;
};

Inputs compare_inputs(const std::string &protocol, std::size_t n, std::size_t m,
                      std::size_t dim, std::uint64_t seed) {
    std::size_t n_unknown = n;
    std::size_t n_known = 0;
    if (protocol == "me-cycle") {
        n_unknown = n - m;
        n_known = m;
    } else if (protocol == "destructive-third-order") {
        n_unknown = 2;
        n_known = 1;
    }
    Inputs in;
    std::uint64_t k = seed * 1000;
    auto make = [&](std::size_t rank) {
        bg_state *s = nullptr;
        check(bg_state_random(dim, rank, k++, &s));
        return StatePtr(s);
    };
    for (std::size_t i = 0; i < n_unknown; ++i) {
        in.unknown.push_back(make(1 + i % 2));
    }
    for (std::size_t i = 0; i < n_known; ++i) {
        in.known.push_back(make(1));
    }
    return in;
}

std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

int cmd_compare(std::size_t n, std::size_t m, std::vector<std::string> protocols,
                std::size_t dim, const Overrides &ov,
                const std::vector<std::uint64_t> &shots_list,
                const std::string &out_path) {
    const bg_mode mode = parse_mode(ov.mode.value_or("exact"));
    const std::uint64_t seed = ov.seed.value_or(0);
    if (protocols.empty()) {
        for (std::size_t i = 0; i < bg_protocol_count(); ++i) {
            protocols.emplace_back(bg_protocol_name(i));
        }
    }
    std::vector<std::uint64_t> budgets = shots_list;
    if (mode == BG_MODE_SAMPLED && budgets.empty()) {
        budgets = {ov.shots.value_or(1000)};
    }

    std::ostringstream csv;
    csv.precision(17);
    csv << "protocol,n,m,applicable,system_registers,ancilla_qubits,"
           "fredkin_gates,measured_registers";
    if (mode == BG_MODE_EXACT) {
        csv << ",abs_error_exact";
    } else {
        for (auto s : budgets) {
            csv << ",abs_error_shots_" << s;
        }
    }
    csv << ",reason\n";

    for (const auto &p : protocols) {
        csv << csv_escape(p) << ',' << n << ',' << m << ',';
        const std::size_t columns = mode == BG_MODE_EXACT ? 1 : budgets.size();
        bg_resources r{};
        std::vector<double> errors;
        std::string reason;
        try {
            check(bg_resources_for(p.c_str(), n, m, &r));
            const Inputs in = compare_inputs(p, n, m, dim, seed);
            const auto u = raw(in.unknown);
            const auto k = raw(in.known);
            double ore = 0.0;
            double oim = 0.0;
            check(bg_protocol_oracle(p.c_str(), u.data(), u.size(), k.data(),
                                     k.size(), &ore, &oim));
            for (std::size_t c = 0; c < columns; ++c) {
                bg_run_options opt{mode,
                                   mode == BG_MODE_EXACT ? 1 : budgets[c],
                                   seed};
                bg_estimate est{};
                check(bg_run_protocol(p.c_str(), u.data(), u.size(), k.data(),
                                      k.size(), &opt, &est));
                errors.push_back(std::hypot(est.re - ore, est.im - oim));
            }
        } catch (const LibraryError &e) {
            reason = e.what();
            errors.clear();
        }
        if (!reason.empty()) {
            csv << "0,,,,";
            for (std::size_t c = 0; c < columns; ++c) {
                csv << ',';
            }
            csv << ',' << csv_escape(reason) << '\n';
            continue;
        }
        csv << "1," << r.system_registers << ',' << r.ancilla_qubits << ','
            << r.fredkin_gates << ',' << r.measured_registers;
        for (double err : errors) {
            csv << ',' << err;
        }
        csv << ",\n";
    }
    write_output(out_path, csv.str());
    return 0;
}

int cmd_orbits(std::size_t n, const std::string &out_path) {
    struct TableDeleter {
        void operator()(bg_orbit_table *t) const { bg_orbits_free(t); }
    };
    bg_orbit_table *raw_table = nullptr;
    check(bg_orbits_create(n, &raw_table));
    std::unique_ptr<bg_orbit_table, TableDeleter> table(raw_table);
    std::uint64_t necklaces = 0;
    check(bg_necklace_count(n, &necklaces));

    json rows = json::array();
    for (std::size_t i = 0; i < bg_orbits_count(table.get()); ++i) {
        bg_orbit_row row{};
        check(bg_orbits_row(table.get(), i, &row));
        std::string bits;
        for (std::size_t b = n; b-- > 0;) {
            bits += ((row.representative >> b) & 1u) != 0 ? '1' : '0';
        }
        json eig = json::array();
        for (std::size_t ell = 0; ell < row.period; ++ell) {
            double re = 0.0;
            double im = 0.0;
            check(bg_orbits_eigenvalue(table.get(), i, ell, &re, &im));
            eig.push_back({re, im});
        }
        rows.push_back({{"n", row.n},
                        {"weight", row.weight},
                        {"representative", bits},
                        {"period", row.period},
                        {"eigenvalues", eig}});
    }
    json out = {{"n", n},
                {"orbit_count", rows.size()},
                {"necklace_count", necklaces},
                {"orbits", rows}};
    write_output(out_path, out.dump(2) + "\n");
    return 0;
}

int cmd_validate(std::size_t trials, std::uint64_t seed) {
    struct ReportDeleter {
        void operator()(bg_validation *v) const { bg_validation_free(v); }
    };
    bg_validation *raw_report = nullptr;
    check(bg_validate(trials, seed, &raw_report));
    std::unique_ptr<bg_validation, ReportDeleter> report(raw_report);
    for (std::size_t i = 0; i < bg_validation_count(report.get()); ++i) {
        const char *name = nullptr;
        const char *detail = nullptr;
        int passed = 0;
        check(bg_validation_check(report.get(), i, &name, &passed, &detail));
        std::cout << (passed != 0 ? "PASS " : "FAIL ") << name << " ("
                  << detail << ")\n";
    }
    const bool ok = bg_validation_all_passed(report.get()) != 0;
    std::cout << (ok ? "validate: all checks passed\n"
                     : "validate: FAILED\n");
    return ok ? 0 : kExitRuntime;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Bargmann invariant estimation experiments"};
    app.require_subcommand(1);

    Overrides ov;
    std::string mode;
    std::uint64_t seed = 0;
    std::uint64_t shots = 0;
    auto add_overrides = [&](CLI::App *sub) {
        sub->add_option("--seed", seed, "RNG seed (overrides config)");
        sub->add_option("--shots", shots, "Shots per measurement setting")
            ->check(CLI::PositiveNumber);
        sub->add_option("--mode", mode, "exact or sampled")
            ->check(CLI::IsMember({"exact", "sampled"}));
    };

    std::string config_path;
    std::string out_path;

    auto *run = app.add_subcommand("run", "Run one protocol from a config");
    run->add_option("--config", config_path, "Experiment config (JSON)")
        ->required();
    run->add_option("--out", out_path, "Report path (default: stdout)");
    add_overrides(run);

    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t dim = 2;
    std::vector<std::string> protocols;
    std::vector<std::uint64_t> shots_list;
    auto *compare =
        app.add_subcommand("compare", "Resources and errors across protocols");
    compare->add_option("--n", n, "Invariant order")->required()->check(
        CLI::Range(1, 16));
    compare->add_option("--m", m, "Number of classically known states");
    compare->add_option("--protocols", protocols, "Protocols (default: all)")
        ->delimiter(',');
    compare->add_option("--dim", dim, "Local dimension")->check(
        CLI::Range(2, 8));
    compare->add_option("--shots-list", shots_list,
                        "Shot budgets for sampled error columns")
        ->delimiter(',');
    compare->add_option("--out", out_path, "CSV path (default: stdout)");
    add_overrides(compare);

    std::size_t orbit_n = 0;
    auto *orbits = app.add_subcommand("orbits", "Cyclic orbit table");
    orbits->add_option("n", orbit_n, "Bitstring length")->required()->check(
        CLI::Range(1, 16));
    orbits->add_option("--out", out_path, "Output path (default: stdout)");

    std::size_t trials = 20;
    std::uint64_t validate_seed = 2024;
    auto *validate = app.add_subcommand("validate", "Run the property suite");
    validate->add_option("--trials", trials, "Random trials per check")
        ->check(CLI::PositiveNumber);
    validate->add_option("--seed", validate_seed, "Seed");

    auto *oracle = app.add_subcommand(
        "oracle", "Direct trace of the states listed in a config");
    oracle->add_option("--config", config_path, "Config with 'states'")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    auto fill = [&](CLI::App *sub) {
        if (sub->count("--seed") > 0) {
            ov.seed = seed;
        }
        if (sub->count("--shots") > 0) {
            ov.shots = shots;
        }
        if (sub->count("--mode") > 0) {
            ov.mode = mode;
        }
    };

    try {
        if (*run) {
            fill(run);
            return cmd_run(config_path, out_path, ov);
        }
        if (*compare) {
            fill(compare);
            return cmd_compare(n, m, protocols, dim, ov, shots_list, out_path);
        }
        if (*orbits) {
            return cmd_orbits(orbit_n, out_path);
        }
        if (*validate) {
            return cmd_validate(trials, validate_seed);
        }
        if (*oracle) {
            return cmd_oracle(config_path);
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
