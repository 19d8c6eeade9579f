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

#include "verify_checks.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include "sloccsim/mps.hpp"
#include "sloccsim/percolation.hpp"
#include "sloccsim/protocol.hpp"
#include "sloccsim/slocc.hpp"
#include "sloccsim/statevec.hpp"
#include "sloccsim/walk.hpp"

namespace sloccsim::verify {

namespace {

Mat2 random_unitary(Rng &rng) {
    return rz(rng.uniform(0, 2 * M_PI)) * rx(rng.uniform(0, 2 * M_PI)) *
           rz(rng.uniform(0, 2 * M_PI));
}

Mat2 extract_single(const Mat2 &op, const MeasurementBasis &basis, int outcome) {
    ExtractionPlan plan;
    plan.lattice = LatticeSpec::chain(2);
    plan.lattice.site_ops[1] = op;
    plan.input_sites = {1};
    plan.output_sites = {2};
    plan.steps = {{1, basis, outcome}};
    return extract_teleported(plan);
}

bool bound(double value, double limit, std::string &detail, const char *what) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s=%.3g/%.3g ", what, value, limit);
    detail += buf;
    return value <= limit;
}

bool check_strategy1(const CheckParams &p, std::string &detail) {
    Rng rng(91);
    double worst_op = 0.0, worst_prob = 0.0;
    for (int i = 0; i < 100; ++i) {
        double theta = rng.uniform(0.1, M_PI / 2 - 0.1);
        double gamma = rng.uniform(0, 2 * M_PI);
        double xi = rng.uniform(0, 2 * M_PI);
        Mat2 s = random_unitary(rng) * Mat2::diag(std::cos(theta), std::sin(theta)) *
                 hadamard() * rz(gamma);
        SloccOp op = classify(s);
        MeasurementBasis basis = strategy1_basis(op, xi);
        worst_op = std::max(worst_op, distance_up_to_scale(extract_single(s, basis, 0),
                                                           hadamard() * rz(xi)));
        double mu = strategy1_byproduct_angle(theta, gamma, xi) + p.mutation;
        worst_op = std::max(worst_op, distance_up_to_scale(extract_single(s, basis, 1),
                                                           rx(mu) * hadamard() * rz(xi)));
        LatticeSpec spec = LatticeSpec::chain(2);
        spec.site_ops[1] = s;
        PureState st = build_cluster(spec, ClusterInput{1, Vec2{0.6, cplx{0.64, 0.48}}});
        double p0 = project_site(st, 1, basis.m0).norm_sq() / st.norm_sq();
        double polar = strategy1_basis_polar_xi(theta, gamma, xi);
        worst_prob =
            std::max(worst_prob, std::abs(p0 - strategy1_probs(theta, polar).first - p.mutation));
    }
    bool ok = bound(worst_op, 1e-9, detail, "op");
    ok &= bound(worst_prob, 1e-10, detail, "prob");
    return ok;
}

bool check_strategy2(const CheckParams &p, std::string &detail) {
    Rng rng(92);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        double theta = rng.uniform(0.1, M_PI / 2 - 0.1);
        double beta = rng.uniform(0, 2 * M_PI);
        Mat2 s = random_unitary(rng) * Mat2::diag(std::cos(theta), std::sin(theta));
        BTypeCanon canon = b_canon(classify(s));
        MeasurementBasis basis = strategy2_basis(canon, beta);
        for (int m = 0; m < 2; ++m) {
            Strategy2Gate g = strategy2_gate(theta, beta + p.mutation, m);
            worst = std::max(worst, distance_up_to_scale(extract_single(s, basis, m),
                                                         g.matrix()));
        }
    }
    return bound(worst, 1e-9, detail, "op");
}

bool check_compilation(const CheckParams &p, std::string &detail) {
    Rng rng(93);
    double worst = 0.0;
    for (int rep = 0; rep < 5; ++rep) {
        double x2 = rng.uniform(-M_PI, M_PI), x3 = rng.uniform(-M_PI, M_PI),
               x4 = rng.uniform(-M_PI, M_PI);
        Vec2 psi = Vec2{cplx{rng.uniform(-1, 1), rng.uniform(-1, 1)},
                        cplx{rng.uniform(-1, 1), rng.uniform(-1, 1)}}
                       .normalized();
        Mat2 target = rx(x4) * rz(x3) * rx(x2 + p.mutation);
        for (int m = 0; m < 16; ++m) {
            int m1 = m & 1, m2 = (m >> 1) & 1, m3 = (m >> 2) & 1, m4 = (m >> 3) & 1;
            double angles[4] = {0.0, (m1 ? -1 : 1) * x2, (m2 ? -1 : 1) * x3,
                                ((m1 + m3) % 2 ? -1 : 1) * x4};
            int outs[4] = {m1, m2, m3, m4};
            PureState st = build_cluster(LatticeSpec::chain(5), ClusterInput{1, psi});
            for (int k = 0; k < 4; ++k) {
                MeasurementBasis b = MeasurementBasis::xy_plane(angles[k]);
                st = project_site(st, 1, outs[k] ? b.m1 : b.m0);
            }
            Mat2 word = Mat2::identity();
            if (m4) word = word * pauli_x();
            if (m3) word = word * pauli_z();
            if (m2) word = word * pauli_x();
            if (m1) word = word * pauli_z();
            Vec2 expect = word * (target * psi);
            worst = std::max(worst, 1.0 - fidelity(st, PureState(1, {expect.x, expect.y})));
        }
    }
    return bound(worst, 1e-10, detail, "1-fid");
}

bool check_stabilizers(const CheckParams &p, std::string &detail) {
    double worst = p.mutation;
    for (const LatticeSpec &spec : {LatticeSpec::chain(7), LatticeSpec::ring(7),
                                    LatticeSpec::grid(3, 3), LatticeSpec::cubic(2, 2, 2)}) {
        PureState state = build_cluster(spec);
        for (int i = 1; i <= spec.num_sites(); ++i) {
            PureState moved = state;
            moved.apply_pauli(i, Pauli::X);
            for (int j : spec.neighbors(i)) {
                moved.apply_pauli(j, Pauli::Z);
            }
            worst = std::max(worst, 1.0 - fidelity(moved, state));
        }
    }
    return bound(worst, 1e-12, detail, "1-fid");
}

bool check_mps_contraction(const CheckParams &p, std::string &detail) {
    Rng rng(94);
    double worst = p.mutation;
    for (int n : {6, 10}) {
        std::map<int, std::pair<double, double>> assign;
        LatticeSpec ns = LatticeSpec::chain(n);
        for (int s = 2; s <= n; s += 2) {
            double t = rng.uniform(0.2, M_PI / 2 - 0.2), g = rng.uniform(0, 2 * M_PI);
            assign[s] = {t, g};
            ns.site_ops[s] = n_type_matrix(t, g);
        }
        worst = std::max(worst,
                         1.0 - fidelity(nun_sites(n, assign).contract(), build_cluster(ns)));
    }
    std::vector<std::pair<double, double>> pp = {{0.5, 0.7}, {0.8, -0.4}};
    LatticeSpec bs = LatticeSpec::chain(5);
    bs.site_ops[2] = b_type_matrix(0.5, 0.7);
    bs.site_ops[4] = b_type_matrix(0.8, -0.4);
    worst = std::max(worst, 1.0 - fidelity(bub_sites(pp).contract(), build_cluster(bs)));
    return bound(worst, 1e-10, detail, "1-fid");
}

bool check_correlators(const CheckParams &p, std::string &detail) {
    double theta = 0.45, gamma = 1.2;
    LatticeSpec spec = LatticeSpec::ring(10);
    spec.site_ops[4] = n_type_matrix(theta, gamma);
    PureState st = build_cluster(spec);
    double got = two_point(st, 3, Pauli::Z, 5, Pauli::Z);
    double want = std::cos(2 * theta) * std::sin(gamma) + p.mutation;
    MpsChain ring = nun_sites(500, {{250, {theta, gamma}}}, MpsChain::Boundary::Ring);
    double got_mps = ring_correlator(ring, 249, Pauli::Z, 251, Pauli::Z);
    bool ok = bound(std::abs(got - want), 1e-10, detail, "dense");
    ok &= bound(std::abs(got_mps - want), 1e-10, detail, "mps");
    return ok;
}

bool check_lemma2(const CheckParams &p, std::string &detail) {
    Rng rng(95);
    double worst = 0.0;
    LatticeSpec spec = LatticeSpec::grid(3, 3);
    std::vector<double> thetas(10, M_PI / 4);
    for (int s = 1; s <= 9; ++s) {
        thetas[s] = rng.uniform(0.15, M_PI / 2 - 0.15);
        spec.site_ops[s] = Mat2::diag(std::cos(thetas[s]), std::sin(thetas[s]));
    }
    PureState st = build_cluster(spec);
    for (int k = 1; k <= 9; ++k) {
        auto rho = reduced_density(st, {k});
        double off = 0.5 * std::sin(2 * thetas[k]) + p.mutation;
        for (int j : spec.neighbors(k)) {
            off *= std::cos(2 * thetas[j]);
        }
        worst = std::max(worst, std::abs(rho(0, 1).real() - off));
        worst = std::max(worst,
                         std::abs(rho(0, 0).real() - std::pow(std::cos(thetas[k]), 2)));
    }
    return bound(worst, 1e-10, detail, "entry");
}

bool check_walk(const CheckParams &p, std::string &detail) {
    Rng rng(96);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        double lambda = rng.uniform(0.1, 0.9);
        worst = std::max(worst, std::abs(exact_success_dp({lambda, 10}).p_total -
                                         exact_success_enumeration({lambda, 10}).p_total));
    }
    bool ok = bound(worst + p.mutation, 1e-12, detail, "enum-dp");
    double born = 0.0;
    for (int k = 1; k <= 5; ++k) {
        born = std::max(born, std::abs(bundo_fragment_prob(0.55, k, 1) -
                                       bundo_step_probs(0.55, k).second));
    }
    ok &= bound(born, 1e-10, detail, "born");
    return ok;
}

bool check_entangle(const CheckParams &p, std::string &detail) {
    EntangleFragment frag;
    frag.n1 = classify(n_type_matrix(0.5, 0.7));
    frag.n3 = classify(n_type_matrix(0.65, -0.3));
    frag.u2 = rz(0.4) * rx(0.8);
    double worst = p.mutation;
    for (int m = 0; m < 8; ++m) {
        Mat4 got = nun_entangle(frag, m & 1, (m >> 1) & 1, (m >> 2) & 1);
        Mat4 want = nun_entangle_expected(frag, m & 1, (m >> 1) & 1, (m >> 2) & 1);
        worst = std::max(worst, distance_up_to_scale(got, want));
    }
    return bound(worst, 1e-10, detail, "dist");
}

bool check_percolation(const CheckParams &p, std::string &detail) {
    int mismatches = static_cast<int>(p.mutation != 0.0);
    for (int t = 0; t < 100; ++t) {
        BondLattice lat = generate(9, 0.45 + 0.001 * t, derive_seed(17, t));
        if (spans(lat) != spans_bfs(lat)) {
            ++mismatches;
        }
    }
    return bound(mismatches, 0, detail, "uf-vs-bfs");
}

bool check_rus(const CheckParams &p, std::string &detail) {
    WireSpec chain = WireSpec::nun_chain(40, {{0.5, 0.8}, {0.7, -0.3}});
    RotationTarget target{0.9, -0.4, 1.3};
    Vec2 psi = Vec2{cplx{0.3, 0.4}, cplx{-0.5, 0.7}}.normalized();
    double worst = p.mutation;
    for (int i = 0; i < 50; ++i) {
        WireRunResult r = nun_rotate(chain, target, psi, OutcomePolicy::sample(400 + i));
        if (r.success) {
            worst = std::max(worst, 1.0 - r.target_fidelity);
        }
    }
    return bound(worst, 1e-8, detail, "1-fid");
}

}  // namespace

const std::vector<CheckDef> &all_checks() {
    static const std::vector<CheckDef> checks = {
        {"strategy1-closed-forms", check_strategy1},
        {"strategy2-closed-forms", check_strategy2},
        {"cluster-compilation", check_compilation},
        {"stabilizer-conditions", check_stabilizers},
        {"mps-dense-contraction", check_mps_contraction},
        {"ring-correlators", check_correlators},
        {"local-density-closed-form", check_lemma2},
        {"walk-dual-method", check_walk},
        {"entangling-gate", check_entangle},
        {"percolation-spanning", check_percolation},
        {"repeat-until-success", check_rus},
    };
    return checks;
}

std::vector<CheckResult> run_checks(const std::string &filter, const CheckParams &params) {
    std::vector<CheckResult> results;
    for (const auto &def : all_checks()) {
        if (!filter.empty() && def.name.find(filter) == std::string::npos) {
            continue;
        }
        CheckResult r;
        r.name = def.name;
        auto start = std::chrono::steady_clock::now();
        try {
            r.passed = def.run(params, r.detail);
        } catch (const std::exception &e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.millis = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace sloccsim::verify
