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

#include "oracles.hpp"

#include <cmath>

namespace sloccsim::oracles {

Mat2 random_unitary(Rng &rng) {
    // QR-free construction: random phase times a Bloch rotation.
    double a = rng.uniform(0, 2 * M_PI);
    double b = rng.uniform(0, 2 * M_PI);
    double c = rng.uniform(0, 2 * M_PI);
    return rz(a) * rx(b) * rz(c);
}

Mat2 random_invertible(Rng &rng) {
    while (true) {
        Mat2 m{cplx{rng.uniform(-1, 1), rng.uniform(-1, 1)},
               cplx{rng.uniform(-1, 1), rng.uniform(-1, 1)},
               cplx{rng.uniform(-1, 1), rng.uniform(-1, 1)},
               cplx{rng.uniform(-1, 1), rng.uniform(-1, 1)}};
        double fn = m.frobenius_norm();
        if (std::abs(m.det()) > 1e-3 * fn * fn) {
            return m;
        }
    }
}

Vec2 random_state(Rng &rng) {
    Vec2 v{cplx{rng.uniform(-1, 1), rng.uniform(-1, 1)},
           cplx{rng.uniform(-1, 1), rng.uniform(-1, 1)}};
    return v.normalized();
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

double born_single(const Mat2 &op, const MeasurementBasis &basis, int outcome, const Vec2 &psi) {
    LatticeSpec spec = LatticeSpec::chain(2);
    spec.site_ops[1] = op;
    PureState st = build_cluster(spec, ClusterInput{1, psi});
    PureState branch = project_site(st, 1, outcome == 0 ? basis.m0 : basis.m1);
    return branch.norm_sq() / st.norm_sq();
}

WireReplay replay_on_dense(const WireSpec &spec, const WireRunResult &run, const Vec2 &psi) {
    int n = static_cast<int>(spec.sites.size());
    LatticeSpec lattice = LatticeSpec::chain(n);
    for (int s = 1; s <= n; ++s) {
        lattice.site_ops[s] = spec.sites[s - 1].op;
    }
    PureState state = build_cluster(lattice, ClusterInput{1, psi});

    WireReplay out;
    for (const auto &entry : run.record.entries) {
        double total = state.norm_sq();
        const Vec2 &bra = entry.outcome == 0 ? entry.basis.m0 : entry.basis.m1;
        // Sites are consumed in order, so the next one is always position 1.
        state = project_site(state, 1, bra);
        out.probs.push_back(state.norm_sq() / total);
    }

    // Rebuild the remaining tail from the engine's carrier and compare.
    int used = static_cast<int>(run.record.entries.size());
    LatticeSpec tail = LatticeSpec::chain(n - used);
    for (int s = used + 1; s <= n; ++s) {
        tail.site_ops[s - used] = spec.sites[s - 1].op;
    }
    PureState ref = build_cluster(tail, ClusterInput{1, run.final_state});
    out.carrier_fidelity = fidelity(state, ref);
    return out;
}

double classical_first_passage(int n) {
    // Sum over odd first-passage times 2k-1 <= n of Catalan(k-1)/2^{2k-1}.
    double total = 0.0;
    double catalan = 1.0;  // Catalan(0)
    for (int k = 1; 2 * k - 1 <= n; ++k) {
        total += catalan * std::pow(0.5, 2 * k - 1);
        catalan = catalan * 2.0 * (2.0 * k - 1.0) / (k + 1.0);  // Catalan(k)
    }
    return total;
}

}  // namespace sloccsim::oracles
