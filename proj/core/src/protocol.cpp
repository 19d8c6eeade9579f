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

#include "sloccsim/protocol.hpp"

#include <cmath>

namespace sloccsim {

namespace {

const cplx kI{0.0, 1.0};

double quad_form(const Mat2 &g, const Vec2 &v) {
    cplx r = std::conj(v.x) * (g(0, 0) * v.x + g(0, 1) * v.y) +
             std::conj(v.y) * (g(1, 0) * v.x + g(1, 1) * v.y);
    return r.real();
}

}  // namespace

Mat2 RotationTarget::matrix() const { return rx(zeta) * rz(eta) * rx(xi); }

double MeasurementRecord::path_probability() const {
    double p = 1.0;
    for (const auto &e : entries) {
        p *= e.prob;
    }
    return p;
}

OutcomePolicy OutcomePolicy::sample(uint64_t seed) {
    OutcomePolicy p;
    p.seed = seed;
    return p;
}

OutcomePolicy OutcomePolicy::force(std::vector<int> outcomes) {
    OutcomePolicy p;
    p.forced = std::move(outcomes);
    return p;
}

MeasurementBasis strategy1_basis(const SloccOp &op, double xi) {
    Vec2 plus{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
    Vec2 minus{1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)};
    Mat2 inv_dag = op.matrix.adjoint().inverse();
    Vec2 m0 = inv_dag * (rz(-xi) * plus);
    Vec2 m1 = op.matrix * (rz(-xi) * minus);
    MeasurementBasis b = MeasurementBasis::from_vectors(m0, m1);
    b.xi = xi;
    return b;
}

MeasurementBasis strategy2_basis(const BTypeCanon &b, double beta_prime) {
    Mat2 u_prime = rz(M_PI / 2.0 - beta_prime) * rx(M_PI / 2.0);
    Mat2 full = b.u * u_prime;
    MeasurementBasis out =
        MeasurementBasis::from_vectors(full * Vec2{1.0, 0.0}, full * Vec2{0.0, 1.0});
    out.xi = beta_prime;
    return out;
}

double epsilon_angle(double theta, double xi1) {
    double c = std::cos(2.0 * theta);
    return 2.0 * std::atan2(c * std::cos(xi1), 1.0 - c * std::sin(xi1));
}

WireSpec WireSpec::nun_chain(int max_sites,
                             const std::vector<std::pair<double, double>> &odd_theta_gamma,
                             const std::vector<Mat2> &even_unitaries) {
    if (odd_theta_gamma.empty()) {
        throw std::invalid_argument("nun_chain: need at least one (theta, gamma)");
    }
    WireSpec spec;
    spec.sites.resize(max_sites);
    int odd_i = 0, even_i = 0;
    for (int s = 1; s <= max_sites; ++s) {
        WireSite &site = spec.sites[s - 1];
        if (s % 2 == 1) {
            auto [theta, gamma] = odd_theta_gamma[odd_i % odd_theta_gamma.size()];
            ++odd_i;
            site.op = n_type_matrix(theta, gamma);
            site.is_attempt_site = true;
        } else {
            site.op = even_unitaries.empty()
                          ? Mat2::identity()
                          : even_unitaries[even_i % even_unitaries.size()];
            ++even_i;
            site.is_attempt_site = false;
        }
    }
    return spec;
}

WireSpec WireSpec::bub_chain(int max_sites,
                             const std::vector<std::pair<double, double>> &odd_theta_gamma,
                             const std::vector<Mat2> &even_unitaries) {
    WireSpec spec = nun_chain(max_sites, odd_theta_gamma, even_unitaries);
    int odd_i = 0;
    for (int s = 1; s <= max_sites; s += 2) {
        auto [theta, gamma] = odd_theta_gamma[odd_i % odd_theta_gamma.size()];
        ++odd_i;
        spec.sites[s - 1].op = b_type_matrix(theta, gamma);
    }
    return spec;
}

namespace {

// Exact single-wire simulation. The carrier chi_k is the (unnormalized)
// logical 2-vector entering site k, before the site operator S_k. Writing
// T_k for the linear map from the carrier to the full unmeasured tail,
//   T_k(chi) = sum_j chi_j (S_k|j>) (x) T_{k+1}(Z^j|+>),
// Born probabilities come from the Gram matrices G_k = T_k^dag T_k:
//   G_n = S_n^dag S_n,
//   (G_k)_{j'j} = (S_k^dag S_k)_{j'j} * (Z^{j'}|+>)^dag G_{k+1} (Z^j|+>).
class WireEngine {
  public:
    WireEngine(const WireSpec &spec, const Vec2 &psi, const OutcomePolicy &policy)
        : spec_(spec), chi_(psi), rng_(policy.seed), forced_(policy.forced) {
        int n = static_cast<int>(spec.sites.size());
        if (n < 2) {
            throw std::invalid_argument("wire needs at least 2 sites");
        }
        Vec2 plus{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
        Vec2 minus{1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)};
        gram_.resize(n + 1);
        const Mat2 &last = spec.sites[n - 1].op;
        gram_[n] = last.adjoint() * last;
        for (int k = n - 1; k >= 1; --k) {
            const Mat2 &g = gram_[k + 1];
            const Vec2 zp[2] = {plus, minus};
            const Mat2 &s = spec.sites[k - 1].op;
            Mat2 sts = s.adjoint() * s;
            Mat2 gk;
            for (int jp = 0; jp < 2; ++jp) {
                for (int j = 0; j < 2; ++j) {
                    cplx h = zp[jp].dot(g * zp[j]);
                    gk(jp, j) = sts(jp, j) * h;
                }
            }
            gram_[k] = gk;
        }
    }

    int current_site() const { return site_; }
    bool has_next_site() const { return site_ + 1 <= static_cast<int>(spec_.sites.size()); }
    const Vec2 &carrier() const { return chi_; }

    // Measures the current site in `basis`; returns (outcome, probability)
    // and advances the carrier. The branch map is H diag(<b|S|0>, <b|S|1>).
    std::pair<int, double> measure(const MeasurementBasis &basis) {
        const Mat2 &s_op = spec_.sites[site_ - 1].op;
        Vec2 branch[2];
        double weight[2];
        const Vec2 *bra[2] = {&basis.m0, &basis.m1};
        for (int m = 0; m < 2; ++m) {
            // u_j = <b_m| S |j>
            cplx u0 = std::conj(bra[m]->x) * s_op(0, 0) + std::conj(bra[m]->y) * s_op(1, 0);
            cplx u1 = std::conj(bra[m]->x) * s_op(0, 1) + std::conj(bra[m]->y) * s_op(1, 1);
            branch[m] = hadamard() * Vec2{u0 * chi_.x, u1 * chi_.y};
            weight[m] = quad_form(gram_[site_ + 1], branch[m]);
        }
        double total = weight[0] + weight[1];
        int outcome;
        if (forced_ && used_ < forced_->size()) {
            outcome = (*forced_)[used_++];
        } else {
            outcome = rng_.uniform() * total < weight[0] ? 0 : 1;
        }
        double prob = weight[outcome] / total;
        if (prob < 1e-14) {
            throw ZeroProbabilityBranch("wire branch probability vanished");
        }
        chi_ = branch[outcome];
        // Keep the carrier magnitude tame on long runs.
        double nrm = chi_.norm();
        if (nrm < 1e-150 || nrm > 1e150) {
            chi_ = (1.0 / nrm) * chi_;
        }
        ++site_;
        return {outcome, prob};
    }

  private:
    const WireSpec &spec_;
    Vec2 chi_;
    Rng rng_;
    std::optional<std::vector<int>> forced_;
    size_t used_ = 0;
    std::vector<Mat2> gram_;
    int site_ = 1;
};

enum class OpenKind { None, HOpen, RzOpen };

struct Machine {
    int px = 0, pz = 0;
    OpenKind open = OpenKind::None;
    cplx a{0.0, 0.0};  // pending angle of the open factor
    int seg = 0;       // completed program segments

    double sign() const { return px == 0 ? 1.0 : -1.0; }

    void pauli_after_h(int m) {
        int new_px = (m + pz) % 2;
        pz = px;
        px = new_px;
    }
};

Mat2 pauli_word(int px, int pz) {
    Mat2 w = Mat2::identity();
    if (pz) {
        w = pauli_z() * w;
    }
    if (px) {
        w = pauli_x() * w;
    }
    return w;
}

WireRunResult run_wire(const WireSpec &spec, const RotationTarget &target, const Vec2 &psi,
                       const OutcomePolicy &policy, bool b_type_chain) {
    const auto segments = target.segments();
    WireEngine engine(spec, psi, policy);
    Machine mach;
    WireRunResult result;

    const double kEpsTol = 1e-12;
    const double kImTol = 1e-9;

    while (true) {
        if (mach.seg == 4 && mach.open == OpenKind::None) {
            result.success = true;
            result.status = RunStatus::Success;
            break;
        }
        if (!engine.has_next_site()) {
            result.status = RunStatus::ChainExhausted;
            break;
        }
        int site = engine.current_site();
        const WireSite &ws = spec.sites[site - 1];
        RecordEntry entry;
        entry.site = site;

        if (ws.is_attempt_site) {
            if (mach.open == OpenKind::HOpen) {
                throw std::logic_error("attempt site reached with an open Hadamard");
            }
            double s = mach.sign();
            if (!b_type_chain) {
                SloccOp op = classify(ws.op);
                NTypeCanon canon = n_canon(op);
                double target_angle = segments[mach.seg];
                double xi_b = s * (target_angle - mach.a.real());
                entry.label = mach.open == OpenKind::RzOpen ? "error-cancel" : "attempt";
                entry.basis_angle = xi_b;
                entry.basis = strategy1_basis(op, xi_b);
                auto [m, prob] = engine.measure(entry.basis);
                entry.outcome = m;
                entry.prob = prob;
                mach.pauli_after_h(m);
                if (m == 0) {
                    mach.open = OpenKind::None;
                    mach.a = 0.0;
                    ++mach.seg;
                } else {
                    double mu = strategy1_byproduct_angle(canon.theta, canon.gamma, xi_b);
                    double eps = wrap_angle(mu - M_PI);
                    if (std::abs(eps) <= kEpsTol) {
                        mach.open = OpenKind::None;
                        mach.a = 0.0;
                        ++mach.seg;
                    } else {
                        mach.open = OpenKind::HOpen;
                        mach.a = target_angle + s * eps;
                    }
                }
            } else {
                SloccOp op = classify(ws.op);
                BTypeCanon canon = b_canon(op);
                double step = canon.eps_im;
                double im_next = mach.a.imag() + s * step;
                bool completes = std::abs(im_next) <= kImTol && mach.seg < 4;
                double beta_prime = completes ? s * (segments[mach.seg] - mach.a.real())
                                              : -s * mach.a.real();
                entry.label = completes ? "attempt" : "walk";
                entry.basis_angle = beta_prime;
                entry.basis = strategy2_basis(canon, beta_prime);
                auto [m, prob] = engine.measure(entry.basis);
                entry.outcome = m;
                entry.prob = prob;
                mach.pauli_after_h(m);
                if (completes) {
                    mach.open = OpenKind::None;
                    mach.a = 0.0;
                    ++mach.seg;
                } else {
                    mach.open = OpenKind::HOpen;
                    mach.a = cplx{0.0, im_next};
                }
            }
        } else {
            // Unitary site: either advance the program or cancel the open H.
            if (mach.open == OpenKind::HOpen) {
                entry.label = "h-cancel";
                entry.basis_angle = 0.0;
                entry.basis = MeasurementBasis::xy_plane(0.0).rotated(ws.op);
                auto [m, prob] = engine.measure(entry.basis);
                entry.outcome = m;
                entry.prob = prob;
                mach.pauli_after_h(m);
                mach.open = OpenKind::RzOpen;
            } else if (mach.open == OpenKind::None && mach.seg < 4) {
                double s = mach.sign();
                double xi_b = s * segments[mach.seg];
                entry.label = "advance";
                entry.basis_angle = xi_b;
                entry.basis = MeasurementBasis::xy_plane(xi_b).rotated(ws.op);
                auto [m, prob] = engine.measure(entry.basis);
                entry.outcome = m;
                entry.prob = prob;
                mach.pauli_after_h(m);
                ++mach.seg;
            } else {
                // Nothing useful to do here (RzOpen is resolved at attempt
                // sites); teleport a plain Hadamard to keep the wire moving.
                entry.label = "pass";
                entry.basis_angle = 0.0;
                entry.basis = MeasurementBasis::xy_plane(0.0).rotated(ws.op);
                auto [m, prob] = engine.measure(entry.basis);
                entry.outcome = m;
                entry.prob = prob;
                mach.pauli_after_h(m);
                if (mach.open == OpenKind::RzOpen) {
                    // H . Rz(a) -> HOpen with the same pending angle.
                    mach.open = OpenKind::HOpen;
                } else {
                    mach.open = OpenKind::HOpen;
                    mach.a = 0.0;
                }
            }
            if (b_type_chain) {
                result.walker_trace.push_back(mach.a.imag());
            }
        }
        result.record.entries.push_back(std::move(entry));
        result.sites_used = site;
    }

    result.record.pauli_x = mach.px;
    result.record.pauli_z = mach.pz;
    Vec2 chi = engine.carrier();
    double nrm = chi.norm();
    result.final_state = nrm > 0.0 ? (1.0 / nrm) * chi : chi;

    Vec2 expected = pauli_word(mach.px, mach.pz) * (target.matrix() * psi);
    if (result.success) {
        cplx ov = expected.dot(result.final_state);
        result.target_fidelity = std::norm(ov) / expected.norm_sq();
    }
    return result;
}

}  // namespace

WireRunResult nun_rotate(const WireSpec &chain, const RotationTarget &target, const Vec2 &psi,
                         const OutcomePolicy &policy) {
    return run_wire(chain, target, psi, policy, false);
}

WireRunResult bub_rotate(const WireSpec &chain, const RotationTarget &target, const Vec2 &psi,
                         const OutcomePolicy &policy) {
    return run_wire(chain, target, psi, policy, true);
}

DecoupleResult nun_decouple(const PureState &state, int link_site, const Mat2 &u,
                            std::optional<int> forced, Rng *rng) {
    MeasurementBasis basis = MeasurementBasis::computational().rotated(u);
    MeasureResult m = forced ? measure_forced(state, link_site, basis, *forced)
                             : measure_sampled(state, link_site, basis, *rng);
    DecoupleResult out;
    out.outcome = m.outcome;
    out.prob = m.prob;
    out.post = std::move(m.post);
    out.z_byproduct_on_neighbors = (m.outcome == 1);
    return out;
}

namespace {

ExtractionPlan entangle_plan(const EntangleFragment &frag, int m1, int m2, int m3) {
    // Sites: 1 and 3 are the wire qubits carrying the logical pair, 2 the
    // vertical link, 4 and 5 the next qubits of the two wires.
    LatticeSpec lattice = LatticeSpec::custom(5, {{1, 2}, {2, 3}, {1, 4}, {3, 5}});
    lattice.site_ops[1] = frag.n1.matrix;
    lattice.site_ops[2] = frag.u2;
    lattice.site_ops[3] = frag.n3.matrix;

    ExtractionPlan plan;
    plan.lattice = lattice;
    plan.input_sites = {1, 3};
    plan.output_sites = {4, 5};
    plan.steps = {
        {1, strategy1_basis(frag.n1, 0.0), m1},
        {2, MeasurementBasis::pauli_y_eigenbasis().rotated(frag.u2), m2},
        {3, strategy1_basis(frag.n3, 0.0), m3},
    };
    return plan;
}

}  // namespace

Mat4 nun_entangle(const EntangleFragment &frag, int m1, int m2, int m3) {
    return extract_teleported_2q(entangle_plan(frag, m1, m2, m3));
}

Mat4 entangle_m13() {
    Mat4 m = Mat4::Identity();
    m(1, 1) = kI;
    m(2, 2) = kI;
    return m;
}

Mat4 nun_entangle_expected(const EntangleFragment &frag, int m1, int m2, int m3) {
    NTypeCanon c1 = n_canon(frag.n1);
    NTypeCanon c3 = n_canon(frag.n3);
    double mu1 = strategy1_byproduct_angle(c1.theta, c1.gamma, 0.0);
    double mu3 = strategy1_byproduct_angle(c3.theta, c3.gamma, 0.0);

    // In this codebase's branch convention the outcome-1 wire byproduct is
    // Rx(mu) with the Pauli X folded into mu (mu = pi in the unitary limit),
    // so the wire factors are Rx(mu_i)^{m_i} X^{m2} H.
    Mat2 f1 = hadamard();
    if (m2) {
        f1 = pauli_x() * f1;
    }
    if (m1) {
        f1 = rx(mu1) * f1;
    }
    Mat2 f3 = hadamard();
    if (m2) {
        f3 = pauli_x() * f3;
    }
    if (m3) {
        f3 = rx(mu3) * f3;
    }
    return kron(f1.as_eigen(), f3.as_eigen()) * entangle_m13();
}

std::pair<double, double> bundo_step_probs(double lambda, int k) {
    if (lambda <= 0.0 || lambda >= 1.0) {
        throw std::invalid_argument("bundo_step_probs: lambda must be in (0,1)");
    }
    double l2 = lambda * lambda;
    double l2k = std::pow(lambda, 2.0 * k);
    double p0 = (1.0 + l2 * l2k) / ((1.0 + l2) * (1.0 + l2k));
    return {p0, 1.0 - p0};
}

double bundo_fragment_prob(double lambda, int k, int outcome) {
    // Four-qubit fragment: root carrying the walker's residual operator
    // diag(1, lambda^k), a bare even qubit, a B-transformed odd qubit, and
    // the next even qubit terminating the fragment.
    LatticeSpec spec = LatticeSpec::chain(4);
    spec.site_ops[1] = Mat2::diag(1.0, std::pow(lambda, k));
    spec.site_ops[3] = Mat2::diag(1.0, lambda);
    PureState state = build_cluster(spec);
    double total = state.norm_sq();
    MeasurementBasis pm = MeasurementBasis::plus_minus();
    PureState branch = project_site(state, 2, outcome == 0 ? pm.m0 : pm.m1);
    return branch.norm_sq() / total;
}

namespace {

BundoResult run_bundo(double lambda, int max_even, const OutcomePolicy &policy, bool statevec) {
    if (lambda <= 0.0 || lambda >= 1.0) {
        throw std::invalid_argument("bundo: lambda must be in (0,1)");
    }
    BundoResult result;
    Rng rng(policy.seed);
    size_t used = 0;
    int k = 1;
    for (int step = 0; step < max_even; ++step) {
        auto [p0, p1] = bundo_step_probs(lambda, k);
        double p1_used = p1;
        if (statevec) {
            double born1 = bundo_fragment_prob(lambda, k, 1);
            result.max_formula_deviation =
                std::max(result.max_formula_deviation, std::abs(born1 - p1));
            p1_used = born1;
        }
        int outcome;
        if (policy.forced && used < policy.forced->size()) {
            outcome = (*policy.forced)[used++];
        } else {
            outcome = rng.uniform() < p1_used ? 1 : 0;
        }
        RecordEntry entry;
        entry.site = 2 * (step + 1);
        entry.label = "bundo-even";
        entry.outcome = outcome;
        entry.prob = outcome == 1 ? p1_used : 1.0 - p1_used;
        result.record.entries.push_back(std::move(entry));

        k += outcome == 1 ? -1 : 1;
        result.walker_path.push_back(k);
        ++result.steps_used;
        if (k == 0) {
            result.success = true;
            break;
        }
    }
    return result;
}

}  // namespace

BundoResult bundo_vertical(double lambda, int max_even_measurements, uint64_t seed) {
    return run_bundo(lambda, max_even_measurements, OutcomePolicy::sample(seed), false);
}

BundoResult bundo_vertical_statevec(double lambda, int max_even_measurements,
                                    const OutcomePolicy &policy) {
    return run_bundo(lambda, max_even_measurements, policy, true);
}

bool walk_turnaround_condition(double theta1, double theta3) {
    double x1 = std::log(std::tan(theta1));
    double x3 = std::log(std::tan(theta3));
    return std::abs(x3) > 2.0 * std::abs(x1);
}

}  // namespace sloccsim
