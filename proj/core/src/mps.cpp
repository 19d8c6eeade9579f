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

#include "sloccsim/mps.hpp"

#include "sloccsim/slocc.hpp"

#include <cmath>

namespace sloccsim {

namespace {

Vec2 row_times(const Vec2 &row, const Mat2 &m) {
    return {row.x * m(0, 0) + row.y * m(1, 0), row.x * m(0, 1) + row.y * m(1, 1)};
}

cplx row_dot_col(const Vec2 &row, const Vec2 &col) { return row.x * col.x + row.y * col.y; }

struct ScaledMat4 {
    Mat4 m = Mat4::Identity();
    double log_scale = 0.0;

    void mul(const Mat4 &e) {
        m = m * e;
        double s = m.cwiseAbs().maxCoeff();
        if (s > 0.0 && (s > 1e100 || s < 1e-100)) {
            m /= s;
            log_scale += std::log(s);
        }
    }

    void renorm() {
        double s = m.cwiseAbs().maxCoeff();
        if (s > 0.0) {
            m /= s;
            log_scale += std::log(s);
        }
    }
};

}  // namespace

const SiteMatrices &MpsChain::bulk_site(int site) const {
    if (boundary == Boundary::Ring) {
        return bulk[site - 1];
    }
    return bulk[site - 2];
}

cplx MpsChain::amplitude(uint64_t bits) const {
    auto bit = [&](int site) { return (bits >> (n - site)) & 1; };
    if (boundary == Boundary::Ring) {
        Mat2 prod = bit(1) ? bulk[0].a1 : bulk[0].a0;
        for (int s = 2; s <= n; ++s) {
            const SiteMatrices &sm = bulk[s - 1];
            prod = prod * (bit(s) ? sm.a1 : sm.a0);
        }
        return prod.trace();
    }
    Vec2 row = bit(1) ? left.r1 : left.r0;
    for (int s = 2; s <= n - 1; ++s) {
        const SiteMatrices &sm = bulk_site(s);
        row = row_times(row, bit(s) ? sm.a1 : sm.a0);
    }
    return row_dot_col(row, bit(n) ? right.c1 : right.c0);
}

PureState MpsChain::contract(int qubit_budget) const {
    if (n > qubit_budget) {
        throw TooManyQubits("mps contraction of " + std::to_string(n) + " sites exceeds budget");
    }
    std::vector<cplx> amps(uint64_t{1} << n);
    for (uint64_t i = 0; i < amps.size(); ++i) {
        amps[i] = amplitude(i);
    }
    return PureState(n, std::move(amps));
}

// Canonical form is a bulk-site condition; boundary vectors of a
// transformed chain need not contract to the identity.
bool is_canonical(const MpsChain &chain, double tol) {
    for (const auto &s : chain.bulk) {
        Mat2 sum = s.a0 * s.a0.adjoint() + s.a1 * s.a1.adjoint();
        if (!approx_equal(sum, Mat2::identity(), tol)) {
            return false;
        }
    }
    return true;
}

bool site_channel_unital(const SiteMatrices &site, double tol) {
    Mat2 dual = site.a0.adjoint() * site.a0 + site.a1.adjoint() * site.a1;
    cplx mean = dual.trace() / 2.0;
    return approx_equal(dual, Mat2::diag(mean, mean), tol);
}

Mat4 transfer_op(const SiteMatrices &site) {
    return kron(site.a0.as_eigen(), site.a0.as_eigen().conjugate()) +
           kron(site.a1.as_eigen(), site.a1.as_eigen().conjugate());
}

Mat4 transfer_op_dressed(const SiteMatrices &site, const Mat2 &op) {
    const Mat2 *a[2] = {&site.a0, &site.a1};
    Mat4 out = Mat4::Zero();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            cplx w = op(j, i);
            if (w != cplx{0.0, 0.0}) {
                out += w * kron(a[i]->as_eigen(), a[j]->as_eigen().conjugate());
            }
        }
    }
    return out;
}

MpsChain cluster_sites(int n, MpsChain::Boundary boundary) {
    if (n < 2) {
        throw std::invalid_argument("cluster_sites: need at least 2 sites");
    }
    double s = 1.0 / std::sqrt(2.0);
    SiteMatrices bulk;
    bulk.a0 = Mat2{s, 0.0, s, 0.0};    // H|0><0|
    bulk.a1 = Mat2{0.0, s, 0.0, -s};   // H|1><1|

    MpsChain chain;
    chain.boundary = boundary;
    chain.n = n;
    if (boundary == MpsChain::Boundary::Ring) {
        chain.bulk.assign(n, bulk);
    } else {
        chain.left.r0 = {s, 0.0};
        chain.left.r1 = {0.0, s};
        chain.right.c0 = {s, s};
        chain.right.c1 = {s, -s};
        chain.bulk.assign(std::max(0, n - 2), bulk);
    }
    chain.canonical_checked = is_canonical(chain);
    return chain;
}

void apply_site_op(MpsChain &chain, int site, const Mat2 &op, bool rescale) {
    if (site < 1 || site > chain.n) {
        throw std::out_of_range("apply_site_op: bad site");
    }
    bool is_bulk = chain.boundary == MpsChain::Boundary::Ring || (site > 1 && site < chain.n);
    if (is_bulk) {
        int idx = chain.boundary == MpsChain::Boundary::Ring ? site - 1 : site - 2;
        SiteMatrices &sm = chain.bulk[idx];
        Mat2 n0 = op(0, 0) * sm.a0 + op(0, 1) * sm.a1;
        Mat2 n1 = op(1, 0) * sm.a0 + op(1, 1) * sm.a1;
        if (rescale) {
            double w = n0.frobenius_norm() * n0.frobenius_norm() +
                       n1.frobenius_norm() * n1.frobenius_norm();
            double f = std::sqrt(2.0 / w);
            n0 = f * n0;
            n1 = f * n1;
        }
        sm.a0 = n0;
        sm.a1 = n1;
    } else if (site == 1) {
        Vec2 n0 = op(0, 0) * chain.left.r0 + op(0, 1) * chain.left.r1;
        Vec2 n1 = op(1, 0) * chain.left.r0 + op(1, 1) * chain.left.r1;
        if (rescale) {
            double f = std::sqrt(1.0 / (n0.norm_sq() + n1.norm_sq()));
            n0 = f * n0;
            n1 = f * n1;
        }
        chain.left.r0 = n0;
        chain.left.r1 = n1;
    } else {
        Vec2 n0 = op(0, 0) * chain.right.c0 + op(0, 1) * chain.right.c1;
        Vec2 n1 = op(1, 0) * chain.right.c0 + op(1, 1) * chain.right.c1;
        if (rescale) {
            double f = std::sqrt(2.0 / (n0.norm_sq() + n1.norm_sq()));
            n0 = f * n0;
            n1 = f * n1;
        }
        chain.right.c0 = n0;
        chain.right.c1 = n1;
    }
    chain.canonical_checked = is_canonical(chain);
}

MpsChain nun_sites(int n, const std::map<int, std::pair<double, double>> &n_assignments,
                   MpsChain::Boundary boundary) {
    MpsChain chain = cluster_sites(n, boundary);
    for (const auto &[site, tg] : n_assignments) {
        apply_site_op(chain, site, n_type_matrix(tg.first, tg.second), true);
    }
    chain.canonical_checked = is_canonical(chain);
    return chain;
}

MpsChain bub_sites(const std::vector<std::pair<double, double>> &per_pair) {
    if (per_pair.empty()) {
        throw std::invalid_argument("bub_sites: need at least one (theta, gamma) pair");
    }
    int n = 2 * static_cast<int>(per_pair.size()) + 1;
    MpsChain chain;
    chain.boundary = MpsChain::Boundary::Open;
    chain.n = n;
    double s = 1.0 / std::sqrt(2.0);

    double theta2 = per_pair[0].first;
    chain.left.r0 = {s * std::cos(theta2), s * std::sin(theta2)};
    chain.left.r1 = {s * std::cos(theta2), -s * std::sin(theta2)};
    chain.right.c0 = {s, s};          // |+>
    chain.right.c1 = {-s, s};         // -|->

    chain.bulk.assign(n - 2, SiteMatrices{});
    for (int site = 2; site <= n - 1; ++site) {
        SiteMatrices &sm = chain.bulk[site - 2];
        if (site % 2 == 0) {
            // Antidiagonal phase selectors carrying the B rotation angle
            // (half-angle in this codebase's Rz convention).
            double gamma = per_pair[site / 2 - 1].second;
            cplx em = std::exp(cplx{0.0, -gamma / 2.0});
            cplx ep = std::exp(cplx{0.0, gamma / 2.0});
            sm.a0 = Mat2{0.0, em, 0.0, 0.0};
            sm.a1 = Mat2{0.0, 0.0, ep, 0.0};
        } else {
            // Odd bulk site 2j-1 carries the theta of the even site to its
            // right (site 2j).
            double th = per_pair[(site + 1) / 2 - 1].first;
            double c = s * std::cos(th), sn = s * std::sin(th);
            sm.a0 = Mat2{c, sn, c, sn};
            sm.a1 = Mat2{-c, sn, c, -sn};
        }
    }
    chain.canonical_checked = is_canonical(chain);
    return chain;
}

MpsChain bub_ring(int n, const std::map<int, std::pair<double, double>> &b_assignments) {
    MpsChain chain = cluster_sites(n, MpsChain::Boundary::Ring);
    for (const auto &[site, tg] : b_assignments) {
        apply_site_op(chain, site, b_type_matrix(tg.first, tg.second), false);
    }
    chain.canonical_checked = is_canonical(chain);
    return chain;
}

namespace {

// tr(prod of per-site transfer matrices with optional dressed insertions),
// as (trace-of-rescaled, log-scale).
struct RingTrace {
    cplx t;
    double log_scale;
};

RingTrace ring_trace(const MpsChain &chain, const std::map<int, Mat2> &insertions) {
    ScaledMat4 acc;
    for (int site = 1; site <= chain.n; ++site) {
        auto it = insertions.find(site);
        const SiteMatrices &sm = chain.bulk[site - 1];
        acc.mul(it == insertions.end() ? transfer_op(sm) : transfer_op_dressed(sm, it->second));
    }
    return {acc.m.trace(), acc.log_scale};
}

}  // namespace

namespace {

cplx ring_ratio(const MpsChain &chain, const std::map<int, Mat2> &insertions) {
    RingTrace z = ring_trace(chain, {});
    if (z.t == cplx{0.0, 0.0}) {
        throw IllConditioned("ring correlator: normalization trace underflowed");
    }
    RingTrace num = ring_trace(chain, insertions);
    return (num.t / z.t) * std::exp(num.log_scale - z.log_scale);
}

}  // namespace

double ring_correlator(const MpsChain &chain, int a, Pauli op_a, int b, Pauli op_b) {
    if (chain.boundary != MpsChain::Boundary::Ring) {
        throw std::invalid_argument("ring_correlator: chain is not a ring");
    }
    if (a == b) {
        throw std::invalid_argument("ring_correlator: sites must differ");
    }
    cplx ab = ring_ratio(chain, {{a, pauli_matrix(op_a)}, {b, pauli_matrix(op_b)}});
    cplx ea = ring_ratio(chain, {{a, pauli_matrix(op_a)}});
    cplx eb = ring_ratio(chain, {{b, pauli_matrix(op_b)}});
    return (ab - ea * eb).real();
}

double ring_moment(const MpsChain &chain, int a, Pauli op_a, int b, Pauli op_b) {
    if (chain.boundary != MpsChain::Boundary::Ring) {
        throw std::invalid_argument("ring_moment: chain is not a ring");
    }
    return ring_ratio(chain, {{a, pauli_matrix(op_a)}, {b, pauli_matrix(op_b)}}).real();
}

double ring_expectation(const MpsChain &chain, int a, Pauli op) {
    if (chain.boundary != MpsChain::Boundary::Ring) {
        throw std::invalid_argument("ring_expectation: chain is not a ring");
    }
    return ring_ratio(chain, {{a, pauli_matrix(op)}}).real();
}

std::vector<double> ring_correlators_from_site1(const MpsChain &chain, Pauli op_a, Pauli op_b,
                                                int max_d) {
    if (chain.boundary != MpsChain::Boundary::Ring) {
        throw std::invalid_argument("ring_correlators_from_site1: chain is not a ring");
    }
    int n = chain.n;
    max_d = std::min(max_d, n - 1);
    Mat2 ma = pauli_matrix(op_a);
    Mat2 mb = pauli_matrix(op_b);

    // Suffix products S_k = E_k ... E_n, rescaled.
    std::vector<Mat4> suffix(n + 2);
    std::vector<double> suffix_log(n + 2, 0.0);
    suffix[n + 1] = Mat4::Identity();
    for (int k = n; k >= 1; --k) {
        ScaledMat4 acc;
        acc.m = transfer_op(chain.bulk[k - 1]) * suffix[k + 1];
        acc.log_scale = suffix_log[k + 1];
        acc.renorm();
        suffix[k] = acc.m;
        suffix_log[k] = acc.log_scale;
    }

    RingTrace z{(transfer_op(chain.bulk[0]) * suffix[2]).trace(), suffix_log[2]};
    if (z.t == cplx{0.0, 0.0}) {
        throw IllConditioned("ring correlators: normalization trace underflowed");
    }
    Mat4 e1a = transfer_op_dressed(chain.bulk[0], ma);

    cplx exp_a = ((e1a * suffix[2]).trace() / z.t) * std::exp(suffix_log[2] - z.log_scale);

    std::vector<double> out(max_d + 1, 0.0);
    ScaledMat4 prefix;  // E_2 ... E_b, product for sites between the pair
    for (int d = 1; d <= max_d; ++d) {
        int b = 1 + d;
        // <A_1 B_b>
        Mat4 num_ab = e1a * prefix.m * transfer_op_dressed(chain.bulk[b - 1], mb) * suffix[b + 1];
        cplx v_ab = (num_ab.trace() / z.t) * std::exp(prefix.log_scale + suffix_log[b + 1] -
                                                      z.log_scale);
        // <B_b>
        Mat4 num_b = transfer_op(chain.bulk[0]) * prefix.m *
                     transfer_op_dressed(chain.bulk[b - 1], mb) * suffix[b + 1];
        cplx v_b = (num_b.trace() / z.t) * std::exp(prefix.log_scale + suffix_log[b + 1] -
                                                    z.log_scale);
        out[d] = (v_ab - exp_a * v_b).real();
        prefix.mul(transfer_op(chain.bulk[b - 1]));
        prefix.renorm();
    }
    return out;
}

CorrelationFit correlation_length(const MpsChain &chain, Pauli op_a, Pauli op_b,
                                  int max_distance) {
    int max_j = std::min(max_distance, (chain.n - 2) / 2);
    auto corr = ring_correlators_from_site1(chain, op_a, op_b, 2 * max_j);

    std::vector<double> xs, ys;
    for (int j = 1; j <= max_j; ++j) {
        double c = corr[2 * j];
        if (std::abs(c) <= 1e-12) {
            break;
        }
        xs.push_back(static_cast<double>(j));
        ys.push_back(std::log(std::abs(c)));
    }
    if (xs.size() < 4) {
        throw InsufficientDecay("correlation_length: fewer than 4 usable points");
    }
    double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    double intercept = (sy - slope * sx) / n;
    double rss = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        double r = ys[i] - (slope * xs[i] + intercept);
        rss += r * r;
    }
    CorrelationFit fit;
    fit.length = -2.0 / slope;
    fit.residual = std::sqrt(rss / n);
    fit.points_used = static_cast<int>(xs.size());
    return fit;
}

}  // namespace sloccsim
