// Copyright 2026 The sloccsim Authors
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
//
// Command-line front end: declarative experiment configs in, CSV tables and
// line-oriented JSON measurement logs out. Exit codes: 0 success, 1 check
// failure, 2 config error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <mutex>
#include <sstream>

#include "sloccsim/mps.hpp"
#include "sloccsim/parallel.hpp"
#include "sloccsim/percolation.hpp"
#include "sloccsim/protocol.hpp"
#include "sloccsim/slocc.hpp"
#include "sloccsim/statevec.hpp"
#include "sloccsim/version.hpp"
#include "sloccsim/walk.hpp"
#include "verify_checks.hpp"

using json = nlohmann::json;
using namespace sloccsim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;

// ------------------------------------------------------------- config I/O

int line_of_byte(const std::string &text, size_t byte) {
    int line = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
        }
    }
    return line;
}

json load_config(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw ConfigError("cannot open config file: " + path);
    }
    std::stringstream ss;
    ss << f.rdbuf();
    std::string text = ss.str();
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ConfigError("config parse error at line " +
                          std::to_string(line_of_byte(text, e.byte)) + ": " + e.what());
    }
}

// Rejects keys outside `allowed`; `required` keys must be present.
void check_schema(const json &cfg, const std::string &where,
                  const std::vector<std::string> &required,
                  const std::vector<std::string> &optional) {
    if (!cfg.is_object()) {
        throw ConfigError(where + ": expected an object");
    }
    for (auto it = cfg.begin(); it != cfg.end(); ++it) {
        bool known = false;
        for (const auto &k : required) {
            known |= k == it.key();
        }
        for (const auto &k : optional) {
            known |= k == it.key();
        }
        if (!known) {
            throw ConfigError(where + ": unknown field \"" + it.key() + "\"");
        }
    }
    for (const auto &k : required) {
        if (!cfg.contains(k)) {
            throw ConfigError(where + ": missing required field \"" + k + "\"");
        }
    }
}

std::vector<double> grid_from(const json &j, const std::string &where) {
    if (j.is_array()) {
        return j.get<std::vector<double>>();
    }
    check_schema(j, where, {"count", "min", "max"}, {});
    int count = j.at("count").get<int>();
    double lo = j.at("min").get<double>(), hi = j.at("max").get<double>();
    if (count < 1) {
        throw ConfigError(where + ": count must be positive");
    }
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i) {
        out[i] = count == 1 ? lo : lo + (hi - lo) * i / (count - 1.0);
    }
    return out;
}

struct CsvWriter {
    std::ofstream file;
    std::ostream *os;

    explicit CsvWriter(const std::string &path) {
        if (path.empty() || path == "-") {
            os = &std::cout;
        } else {
            file.open(path);
            if (!file) {
                throw ConfigError("cannot open output file: " + path);
            }
            os = &file;
        }
        *os << "# sloccsim " << kVersion << "\n";
    }

    void row(const std::string &line) { *os << line << "\n"; }
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// ------------------------------------------------------------ subcommands

int cmd_verify(const std::string &filter, bool mutate) {
    verify::CheckParams params;
    params.mutation = mutate ? 1e-6 : 0.0;
    auto results = verify::run_checks(filter, params);
    if (results.empty()) {
        std::fprintf(stderr, "no checks match filter \"%s\"\n", filter.c_str());
        return kExitConfigError;
    }
    int failures = 0;
    for (const auto &r : results) {
        std::printf("[%s] %s (%s%.0f ms)\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str(), r.millis);
        failures += r.passed ? 0 : 1;
    }
    if (failures) {
        std::printf("%d check(s) failed\n", failures);
        return kExitCheckFailure;
    }
    std::printf("all %zu checks passed\n", results.size());
    return kExitOk;
}

int cmd_fig_corrlength(const json &cfg, const std::string &out, int threads) {
    check_schema(cfg, "fig-corrlength", {"thetas", "gammas"},
                 {"ring_sites", "max_distance"});
    int n = cfg.value("ring_sites", 1000);
    int max_d = cfg.value("max_distance", 60);
    std::vector<double> thetas = cfg.at("thetas").get<std::vector<double>>();
    std::vector<double> gammas = grid_from(cfg.at("gammas"), "fig-corrlength.gammas");

    struct Row {
        double theta, gamma, length, residual;
        bool valid;
    };
    std::vector<Row> rows(thetas.size() * gammas.size());
    parallel_for(static_cast<int>(rows.size()), threads, [&](int idx) {
        double theta = thetas[idx / gammas.size()];
        double gamma = gammas[idx % gammas.size()];
        std::map<int, std::pair<double, double>> assign;
        for (int s = 2; s <= n; s += 2) {
            assign[s] = {theta, gamma};
        }
        MpsChain ring = nun_sites(n, assign, MpsChain::Boundary::Ring);
        Row row{theta, gamma, 0.0, 0.0, true};
        try {
            CorrelationFit fit = correlation_length(ring, Pauli::Z, Pauli::Z, max_d);
            row.length = fit.length;
            row.residual = fit.residual;
        } catch (const InsufficientDecay &) {
            row.valid = false;
            row.length = std::numeric_limits<double>::quiet_NaN();
            row.residual = std::numeric_limits<double>::quiet_NaN();
        }
        rows[idx] = row;
    });

    CsvWriter csv(out);
    csv.row("theta,gamma,length,residual,insufficient_decay");
    for (const auto &r : rows) {
        csv.row(fmt(r.theta) + "," + fmt(r.gamma) + "," + fmt(r.length) + "," +
                fmt(r.residual) + "," + (r.valid ? "0" : "1"));
    }
    return kExitOk;
}

int cmd_fig_walk(const json &cfg, const std::string &out, int threads) {
    check_schema(cfg, "fig-walk", {}, {"steps", "lambdas"});
    int steps = cfg.value("steps", 10);
    std::vector<double> lambdas;
    if (cfg.contains("lambdas")) {
        lambdas = grid_from(cfg.at("lambdas"), "fig-walk.lambdas");
    } else {
        // 200 uniform points on (0.01, 0.99).
        for (int i = 0; i < 200; ++i) {
            lambdas.push_back(0.01 + (0.99 - 0.01) * i / 199.0);
        }
    }
    std::vector<PerKPoint> points(lambdas.size());
    parallel_for(static_cast<int>(lambdas.size()), threads,
                 [&](int i) { points[i] = per_k_curves(steps, lambdas[i]); });

    CsvWriter csv(out);
    csv.row("lambda,k,p_k,cumulative");
    for (const auto &pt : points) {
        double running = 0.0;
        for (size_t k = 0; k < pt.p_k.size(); ++k) {
            running += pt.p_k[k];
            csv.row(fmt(pt.lambda) + "," + std::to_string(k + 1) + "," + fmt(pt.p_k[k]) + "," +
                    fmt(running));
        }
    }
    return kExitOk;
}

int cmd_percolation(const json &cfg, const std::string &out, uint64_t seed, int threads) {
    check_schema(cfg, "percolation", {"sizes", "trials"},
                 {"p_grid", "lambdas", "walk_budget", "bond_mode"});
    std::vector<int> sizes = cfg.at("sizes").get<std::vector<int>>();
    int trials = cfg.at("trials").get<int>();
    bool from_walk = cfg.contains("lambdas");
    if (from_walk == cfg.contains("p_grid")) {
        throw ConfigError("percolation: provide exactly one of p_grid or lambdas");
    }
    int budget = cfg.value("walk_budget", 10);
    std::string bond_mode = cfg.value("bond_mode", "formula");
    if (bond_mode != "formula" && bond_mode != "walk") {
        throw ConfigError("percolation: bond_mode must be formula or walk");
    }

    std::vector<double> xs = from_walk ? grid_from(cfg.at("lambdas"), "percolation.lambdas")
                                       : grid_from(cfg.at("p_grid"), "percolation.p_grid");
    struct Row {
        int L;
        double x, fraction, stderr_b;
    };
    std::vector<Row> rows(sizes.size() * xs.size());
    parallel_for(static_cast<int>(rows.size()), threads, [&](int idx) {
        int L = sizes[idx / xs.size()];
        double x = xs[idx % xs.size()];
        int hits = 0;
        for (int t = 0; t < trials; ++t) {
            uint64_t s = derive_seed(seed, 977 * idx + t);
            BondLattice lat =
                from_walk ? from_bundo(L, x, budget, s,
                                       bond_mode == "walk" ? BundoBondMode::PerBondWalk
                                                           : BundoBondMode::FromFormula)
                          : generate(L, x, s);
            hits += spans(lat) ? 1 : 0;
        }
        double frac = static_cast<double>(hits) / trials;
        rows[idx] = {L, x, frac, std::sqrt(frac * (1 - frac) / trials)};
    });

    CsvWriter csv(out);
    csv.row(std::string(from_walk ? "L,lambda" : "L,p") + ",trials,spanning_fraction,stderr");
    for (const auto &r : rows) {
        csv.row(std::to_string(r.L) + "," + fmt(r.x) + "," + std::to_string(trials) + "," +
                fmt(r.fraction) + "," + fmt(r.stderr_b));
    }
    return kExitOk;
}

json record_to_json(const RecordEntry &e) {
    return json{{"type", "measurement"}, {"site", e.site},       {"label", e.label},
                {"basis_angle", e.basis_angle}, {"outcome", e.outcome}, {"prob", e.prob}};
}

void write_wire_log(std::ostream &os, const WireRunResult &r, int run_index,
                    const std::string &protocol) {
    for (const auto &e : r.record.entries) {
        json j = record_to_json(e);
        j["run"] = run_index;
        os << j.dump() << "\n";
    }
    json summary{{"type", "summary"},
                 {"run", run_index},
                 {"protocol", protocol},
                 {"success", r.success},
                 {"status", r.status == RunStatus::Success ? "success" : "chain-exhausted"},
                 {"sites_used", r.sites_used},
                 {"path_probability", r.record.path_probability()},
                 {"pauli_x", r.record.pauli_x},
                 {"pauli_z", r.record.pauli_z},
                 {"fidelity", r.target_fidelity}};
    if (!r.walker_trace.empty()) {
        summary["walker_trace"] = r.walker_trace;
    }
    os << summary.dump() << "\n";
}

std::vector<std::pair<double, double>> parse_site_list(const json &arr,
                                                        const std::string &where) {
    std::vector<std::pair<double, double>> out;
    if (!arr.is_array() || arr.empty()) {
        throw ConfigError(where + ": expected a non-empty array");
    }
    for (const auto &e : arr) {
        check_schema(e, where, {"theta"}, {"gamma"});
        out.push_back({e.at("theta").get<double>(), e.value("gamma", 0.0)});
    }
    return out;
}

Vec2 parse_input_state(const json &cfg) {
    if (!cfg.contains("input")) {
        return Vec2{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};  // logical |+>
    }
    auto v = cfg.at("input").get<std::vector<double>>();
    if (v.size() != 4) {
        throw ConfigError("run-protocol.input: expected [re0, im0, re1, im1]");
    }
    return Vec2{cplx{v[0], v[1]}, cplx{v[2], v[3]}}.normalized();
}

int cmd_run_protocol(const json &cfg, const std::string &out, uint64_t seed,
                     const std::string &restart) {
    check_schema(cfg, "run-protocol", {"protocol"},
                 {"max_sites", "odd_sites", "target", "input", "forced_outcomes", "runs",
                  "max_restarts", "lambda", "budget", "mode", "n1", "n3", "u2_angles",
                  "outcomes"});
    std::string protocol = cfg.at("protocol").get<std::string>();

    std::ofstream file;
    std::ostream *os = &std::cout;
    if (!out.empty() && out != "-") {
        file.open(out);
        if (!file) {
            throw ConfigError("cannot open output file: " + out);
        }
        os = &file;
    }

    int runs = cfg.value("runs", 1);
    // Stochastic run failures are data, recorded per run in the log; the
    // nonzero exit is reserved for verification mismatches.
    bool any_failure = false;

    if (protocol == "nun-rotate" || protocol == "bub-rotate") {
        for (const char *key : {"odd_sites", "target", "max_sites"}) {
            if (!cfg.contains(key)) {
                throw ConfigError("run-protocol: missing field \"" + std::string(key) +
                                  "\" for " + protocol);
            }
        }
        auto odd = parse_site_list(cfg.at("odd_sites"), "run-protocol.odd_sites");
        const json &t = cfg.at("target");
        check_schema(t, "run-protocol.target", {"zeta", "eta", "xi"}, {});
        RotationTarget target{t.at("zeta").get<double>(), t.at("eta").get<double>(),
                              t.at("xi").get<double>()};
        int max_sites = cfg.at("max_sites").get<int>();
        Vec2 psi = parse_input_state(cfg);
        int max_restarts = cfg.value("max_restarts", 8);
        WireSpec chain = protocol == "nun-rotate" ? WireSpec::nun_chain(max_sites, odd)
                                                  : WireSpec::bub_chain(max_sites, odd);
        for (int run = 0; run < runs; ++run) {
            OutcomePolicy policy = OutcomePolicy::sample(derive_seed(seed, run));
            if (cfg.contains("forced_outcomes")) {
                policy = OutcomePolicy::force(cfg.at("forced_outcomes").get<std::vector<int>>());
            }
            WireRunResult r = protocol == "nun-rotate" ? nun_rotate(chain, target, psi, policy)
                                                       : bub_rotate(chain, target, psi, policy);
            int tries = 0;
            while (!r.success && restart == "fresh" && tries < max_restarts &&
                   !cfg.contains("forced_outcomes")) {
                ++tries;
                OutcomePolicy again = OutcomePolicy::sample(derive_seed(seed, 7000 + 31 * run + tries));
                r = protocol == "nun-rotate" ? nun_rotate(chain, target, psi, again)
                                             : bub_rotate(chain, target, psi, again);
            }
            write_wire_log(*os, r, run, protocol);
        }
    } else if (protocol == "bundo-vertical") {
        for (const char *key : {"lambda", "budget"}) {
            if (!cfg.contains(key)) {
                throw ConfigError("run-protocol: missing field \"" + std::string(key) +
                                  "\" for bundo-vertical");
            }
        }
        double lambda = cfg.at("lambda").get<double>();
        int budget = cfg.at("budget").get<int>();
        std::string mode = cfg.value("mode", "sample");
        for (int run = 0; run < runs; ++run) {
            BundoResult r;
            if (mode == "statevec") {
                OutcomePolicy policy = OutcomePolicy::sample(derive_seed(seed, run));
                if (cfg.contains("forced_outcomes")) {
                    policy =
                        OutcomePolicy::force(cfg.at("forced_outcomes").get<std::vector<int>>());
                }
                r = bundo_vertical_statevec(lambda, budget, policy);
            } else if (mode == "sample") {
                r = bundo_vertical(lambda, budget, derive_seed(seed, run));
            } else {
                throw ConfigError("run-protocol.mode: expected sample or statevec");
            }
            for (const auto &e : r.record.entries) {
                json j = record_to_json(e);
                j["run"] = run;
                *os << j.dump() << "\n";
            }
            json summary{{"type", "summary"},
                         {"run", run},
                         {"protocol", protocol},
                         {"success", r.success},
                         {"steps_used", r.steps_used},
                         {"walker_path", r.walker_path},
                         {"max_formula_deviation", r.max_formula_deviation}};
            *os << summary.dump() << "\n";
        }
    } else if (protocol == "entangle") {
        for (const char *key : {"n1", "n3", "outcomes"}) {
            if (!cfg.contains(key)) {
                throw ConfigError("run-protocol: missing field \"" + std::string(key) +
                                  "\" for entangle");
            }
        }
        auto parse_op = [](const json &j, const std::string &where) {
            check_schema(j, where, {"theta"}, {"gamma"});
            return classify(n_type_matrix(j.at("theta").get<double>(), j.value("gamma", 0.0)));
        };
        EntangleFragment frag;
        frag.n1 = parse_op(cfg.at("n1"), "run-protocol.n1");
        frag.n3 = parse_op(cfg.at("n3"), "run-protocol.n3");
        if (cfg.contains("u2_angles")) {
            auto a = cfg.at("u2_angles").get<std::vector<double>>();
            if (a.size() != 3) {
                throw ConfigError("run-protocol.u2_angles: expected [a, b, c]");
            }
            frag.u2 = rz(a[0]) * rx(a[1]) * rz(a[2]);
        }
        auto ms = cfg.at("outcomes").get<std::vector<int>>();
        if (ms.size() != 3) {
            throw ConfigError("run-protocol.outcomes: expected [m1, m2, m3]");
        }
        Mat4 got = nun_entangle(frag, ms[0], ms[1], ms[2]);
        Mat4 want = nun_entangle_expected(frag, ms[0], ms[1], ms[2]);
        double dist = distance_up_to_scale(got, want);
        Mat4 x2 = kron(pauli_x().as_eigen(), pauli_x().as_eigen());
        Mat4 rz2 = kron(rz(M_PI / 2).as_eigen(), rz(M_PI / 2).as_eigen());
        double cz_dist = distance_up_to_scale(x2 * rz2 * entangle_m13() * x2, cz_gate());
        json summary{{"type", "summary"},
                     {"protocol", protocol},
                     {"outcomes", ms},
                     {"closed_form_distance", dist},
                     {"cz_equivalence_distance", cz_dist},
                     {"success", dist < 1e-9}};
        *os << summary.dump() << "\n";
        any_failure |= dist >= 1e-9;
    } else {
        throw ConfigError("run-protocol.protocol: unknown protocol \"" + protocol + "\"");
    }
    return any_failure ? kExitCheckFailure : kExitOk;
}

int cmd_classify(const std::vector<double> &nums) {
    Mat2 m;
    if (nums.size() == 4) {
        m = Mat2{nums[0], nums[1], nums[2], nums[3]};
    } else if (nums.size() == 8) {
        m = Mat2{cplx{nums[0], nums[1]}, cplx{nums[2], nums[3]}, cplx{nums[4], nums[5]},
                 cplx{nums[6], nums[7]}};
    } else {
        std::fprintf(stderr,
                     "classify expects 4 numbers (real matrix, row-major) or 8 numbers "
                     "(re im pairs, row-major)\n");
        return kExitConfigError;
    }
    try {
        SloccOp op = classify(m);
        json out{{"is_n_type", op.is_n_type},
                 {"is_b_type", op.is_b_type},
                 {"is_unitary", op.is_unitary},
                 {"svd_theta", op.theta},
                 {"svd_kappa", op.svd.kappa}};
        if (op.is_n_type) {
            NTypeCanon c = n_canon(op);
            out["n_canon"] = {{"theta", c.theta}, {"gamma", c.gamma}};
        }
        if (op.is_b_type) {
            BTypeCanon c = b_canon(op);
            out["b_canon"] = {{"theta", c.theta}, {"eps_im", c.eps_im}};
        }
        std::printf("%s\n", out.dump(2).c_str());
        return kExitOk;
    } catch (const SingularInput &e) {
        std::fprintf(stderr, "classify: %s\n", e.what());
        return kExitConfigError;
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Measurement protocols on SLOCC-transformed cluster states"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    uint64_t seed = 0;
    int threads = default_thread_count();
    std::string filter;
    bool mutate = false;
    std::string restart = "continue";
    std::vector<double> classify_numbers;

    auto *verify_cmd = app.add_subcommand("verify", "run the closed-form-vs-oracle suite");
    verify_cmd->add_option("--filter", filter, "only run checks whose name contains this");
    verify_cmd->add_flag("--mutate", mutate,
                         "perturb a constant inside the checks (harness self-test)");

    auto *corr_cmd =
        app.add_subcommand("fig-corrlength", "correlation-length table for N-U-N rings");
    corr_cmd->add_option("--config", config_path, "experiment config (JSON)")->required();
    corr_cmd->add_option("--out", out_path, "output CSV path (default stdout)");
    corr_cmd->add_option("--threads", threads, "worker threads");

    auto *walk_cmd = app.add_subcommand("fig-walk", "B-undo walker success curves");
    walk_cmd->add_option("--config", config_path, "experiment config (JSON)");
    walk_cmd->add_option("--out", out_path, "output CSV path (default stdout)");
    walk_cmd->add_option("--threads", threads, "worker threads");

    auto *perc_cmd = app.add_subcommand("percolation", "bond-percolation spanning curves");
    perc_cmd->add_option("--config", config_path, "experiment config (JSON)")->required();
    perc_cmd->add_option("--out", out_path, "output CSV path (default stdout)");
    perc_cmd->add_option("--seed", seed, "master seed");
    perc_cmd->add_option("--threads", threads, "worker threads");

    auto *proto_cmd = app.add_subcommand("run-protocol", "run a measurement protocol");
    proto_cmd->add_option("--config", config_path, "experiment config (JSON)")->required();
    proto_cmd->add_option("--out", out_path, "output JSON-lines log (default stdout)");
    proto_cmd->add_option("--seed", seed, "master seed");
    proto_cmd->add_option("--restart", restart, "after chain exhaustion: fresh or continue")
        ->check(CLI::IsMember({"fresh", "continue"}));

    auto *classify_cmd = app.add_subcommand(
        "classify", "classify a 2x2 operator given 4 (real) or 8 (re im) numbers");
    classify_cmd->add_option("numbers", classify_numbers, "matrix entries, row-major");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (verify_cmd->parsed()) {
            return cmd_verify(filter, mutate);
        }
        if (corr_cmd->parsed()) {
            return cmd_fig_corrlength(load_config(config_path), out_path, threads);
        }
        if (walk_cmd->parsed()) {
            json cfg = config_path.empty() ? json::object() : load_config(config_path);
            return cmd_fig_walk(cfg, out_path, threads);
        }
        if (perc_cmd->parsed()) {
            return cmd_percolation(load_config(config_path), out_path, seed, threads);
        }
        if (proto_cmd->parsed()) {
            return cmd_run_protocol(load_config(config_path), out_path, seed, restart);
        }
        if (classify_cmd->parsed()) {
            return cmd_classify(classify_numbers);
        }
    } catch (const ConfigError &e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfigError;
    } catch (const json::exception &e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfigError;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitCheckFailure;
    }
    return kExitOk;
}
