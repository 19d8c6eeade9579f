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
// Exact analysis of the position-dependent walker behind the vertical-chain
// B-undo procedure: success probabilities p_n(lambda), their first-passage
// decomposition, and threshold crossings.

#ifndef SLOCCSIM_WALK_HPP
#define SLOCCSIM_WALK_HPP

#include <vector>

#include "sloccsim/errors.hpp"

namespace sloccsim {

struct WalkParams {
    double lambda = 0.5;  // ratio of singular values, in (0,1)
    int n_max = 10;       // even-measurement budget
};

struct WalkSuccess {
    double p_total = 0.0;          // P(absorbed at 0 within n_max steps)
    std::vector<double> per_step;  // per_step[k-1] = P(first passage at step k)
};

/// Dynamic programming over (position, step) with the position-dependent
/// step probabilities; exact for any budget.
WalkSuccess exact_success_dp(const WalkParams &params);

/// Explicit trajectory enumeration (start 1, end 0, intermediate positions
/// strictly positive); independent oracle for the DP. Throws BudgetTooLarge
/// beyond 40 steps.
WalkSuccess exact_success_enumeration(const WalkParams &params);

/// Runs both methods and checks they agree to 1e-12 (enumeration only up to
/// its budget limit).
WalkSuccess exact_success(const WalkParams &params);

/// First lambda with p_n(lambda) = target, located by bisection to 1e-4.
/// Throws NoCrossing when p_n(1^-) < target.
double crossing(int n, double target);

struct PerKPoint {
    double lambda = 0.0;
    std::vector<double> p_k;  // first-success probabilities, k = 1..n
    double cumulative = 0.0;
};

/// The family {p_k(lambda)} for k = 1..n on one lambda value.
PerKPoint per_k_curves(int n, double lambda);

/// cos 2theta = (1 - lambda^2) / (1 + lambda^2) = tanh|ln lambda| for a
/// B-type operator with singular-value ratio lambda = tan theta; the local
/// purity parameter of the transformed qubit.
double cos_two_theta(double lambda);

}  // namespace sloccsim

#endif
