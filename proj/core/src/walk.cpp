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

#include "sloccsim/walk.hpp"

#include <cmath>
#include <stdexcept>

namespace sloccsim {

namespace {

void check_params(const WalkParams &p) {
    if (p.lambda <= 0.0 || p.lambda >= 1.0) {
        throw std::invalid_argument("walk: lambda must be in (0,1)");
    }
    if (p.n_max < 1) {
        throw std::invalid_argument("walk: n_max must be positive");
    }
}

double step_p1(double lambda, int k) {
    double l2 = lambda * lambda;
    double l2k = std::pow(lambda, 2.0 * k);
    return (l2 + l2k) / ((1.0 + l2) * (1.0 + l2k));
}

void enumerate(double lambda, int pos, int steps_left, double prob, int step,
               std::vector<double> &per_step) {
    if (steps_left == 0) {
        return;
    }
    double p1 = step_p1(lambda, pos);
    // Step toward the origin.
    if (pos == 1) {
        per_step[step] += prob * p1;
    } else {
        enumerate(lambda, pos - 1, steps_left - 1, prob * p1, step + 1, per_step);
    }
    // Step away.
    enumerate(lambda, pos + 1, steps_left - 1, prob * (1.0 - p1), step + 1, per_step);
}

}  // namespace

WalkSuccess exact_success_dp(const WalkParams &params) {
    check_params(params);
    int n = params.n_max;
    WalkSuccess out;
    out.per_step.assign(n, 0.0);
    // dist[k] = P(at position k, not yet absorbed); positions 1..n+1.
    std::vector<double> dist(n + 3, 0.0);
    dist[1] = 1.0;
    for (int step = 1; step <= n; ++step) {
        std::vector<double> next(n + 3, 0.0);
        for (int k = 1; k <= n + 1; ++k) {
            double w = dist[k];
            if (w == 0.0) {
                continue;
            }
            double p1 = step_p1(params.lambda, k);
            if (k == 1) {
                out.per_step[step - 1] += w * p1;
            } else {
                next[k - 1] += w * p1;
            }
            next[k + 1] += w * (1.0 - p1);
        }
        dist.swap(next);
    }
    for (double p : out.per_step) {
        out.p_total += p;
    }
    return out;
}

WalkSuccess exact_success_enumeration(const WalkParams &params) {
    check_params(params);
    if (params.n_max > 40) {
        throw BudgetTooLarge("enumeration mode supports at most 40 steps");
    }
    WalkSuccess out;
    out.per_step.assign(params.n_max, 0.0);
    enumerate(params.lambda, 1, params.n_max, 1.0, 0, out.per_step);
    for (double p : out.per_step) {
        out.p_total += p;
    }
    return out;
}

WalkSuccess exact_success(const WalkParams &params) {
    WalkSuccess dp = exact_success_dp(params);
    if (params.n_max <= 40) {
        WalkSuccess enu = exact_success_enumeration(params);
        if (std::abs(enu.p_total - dp.p_total) > 1e-12) {
            throw std::logic_error("walk: enumeration and DP disagree");
        }
    }
    return dp;
}

double crossing(int n, double target) {
    if (target < 0.0 || target >= 1.0) {
        throw std::invalid_argument("crossing: target must be in [0,1)");
    }
    if (target == 0.0) {
        return 0.0;
    }
    double lo = 1e-6, hi = 1.0 - 1e-9;
    auto p_of = [&](double lambda) {
        return exact_success_dp({lambda, n}).p_total;
    };
    if (p_of(hi) < target) {
        throw NoCrossing("p_n(1^-) is below the target");
    }
    while (hi - lo > 1e-4) {
        double mid = 0.5 * (lo + hi);
        if (p_of(mid) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double cos_two_theta(double lambda) {
    return (1.0 - lambda * lambda) / (1.0 + lambda * lambda);
}

PerKPoint per_k_curves(int n, double lambda) {
    if (n > 40) {
        throw BudgetTooLarge("per_k_curves supports at most 40 steps");
    }
    WalkSuccess s = exact_success_dp({lambda, n});
    PerKPoint out;
    out.lambda = lambda;
    out.p_k = s.per_step;
    out.cumulative = s.p_total;
    return out;
}

}  // namespace sloccsim
