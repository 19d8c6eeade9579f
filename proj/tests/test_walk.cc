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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sloccsim/rng.hpp"

using namespace sloccsim;

TEST(Walk, SingleStepClosedForm) {
    double lambda = 0.42;
    double l2 = lambda * lambda;
    WalkSuccess s = exact_success({lambda, 1});
    EXPECT_NEAR(s.p_total, (l2 + l2) / (1 + l2 + l2 + l2 * l2), 1e-15);
}

TEST(Walk, EnumerationEqualsDp) {
    Rng rng(6);
    for (int n : {1, 2, 3, 5, 8, 12}) {
        for (int i = 0; i < 8; ++i) {
            double lambda = rng.uniform(0.05, 0.95);
            WalkSuccess dp = exact_success_dp({lambda, n});
            WalkSuccess en = exact_success_enumeration({lambda, n});
            EXPECT_NEAR(dp.p_total, en.p_total, 1e-12);
            for (int k = 0; k < n; ++k) {
                EXPECT_NEAR(dp.per_step[k], en.per_step[k], 1e-12);
            }
        }
    }
}

TEST(Walk, ClassicalLimitMatchesCatalanOracle) {
    for (int n : {2, 4, 6, 10, 14}) {
        WalkSuccess s = exact_success_dp({1.0 - 1e-9, n});
        EXPECT_NEAR(s.p_total, oracles::classical_first_passage(n), 1e-7) << n;
    }
    EXPECT_NEAR(oracles::classical_first_passage(10), 193.0 / 256.0, 1e-15);
}

TEST(Walk, FirstPassageParity) {
    WalkSuccess s = exact_success_dp({0.5, 10});
    for (int k = 2; k <= 10; k += 2) {
        EXPECT_EQ(s.per_step[k - 1], 0.0);
    }
}

TEST(Walk, MonotoneInLambdaAndBudget) {
    double prev = 0.0;
    for (double lambda : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        double p = exact_success_dp({lambda, 10}).p_total;
        EXPECT_GE(p, prev);
        prev = p;
    }
    prev = 0.0;
    for (int n : {1, 3, 5, 9, 15, 25}) {
        double p = exact_success_dp({0.5, n}).p_total;
        EXPECT_GE(p, prev);
        prev = p;
    }
}

TEST(Walk, PerKCurves) {
    PerKPoint pt = per_k_curves(12, 0.6);
    double sum = 0.0;
    for (double p : pt.p_k) {
        EXPECT_GE(p, 0.0);
        sum += p;
    }
    EXPECT_NEAR(sum, pt.cumulative, 1e-12);
    EXPECT_NEAR(sum, exact_success_dp({0.6, 12}).p_total, 1e-12);
    // p_1 dominates as lambda -> 1.
    PerKPoint hi = per_k_curves(12, 0.999);
    for (size_t k = 1; k < hi.p_k.size(); ++k) {
        EXPECT_GE(hi.p_k[0], hi.p_k[k]);
    }
}

TEST(Walk, CrossingBasics) {
    EXPECT_NEAR(crossing(10, 0.0), 0.0, 0.0);
    EXPECT_THROW(crossing(1, 0.9), NoCrossing);  // p_1(1^-) = 1/2 < 0.9
    double l = crossing(10, 0.3);
    EXPECT_NEAR(exact_success_dp({l, 10}).p_total, 0.3, 1e-3);
}

TEST(Walk, CrossingAtPercolationTargetInPurityUnits) {
    // p_10 crosses 0.593 at lambda = 0.6714 in singular-ratio units, which
    // is 0.3786 in the local-purity units cos 2theta = (1-l^2)/(1+l^2).
    double l = crossing(10, 0.593);
    EXPECT_NEAR(l, 0.6714, 5e-4);
    EXPECT_NEAR(cos_two_theta(l), 0.379, 0.005);
}

TEST(Walk, CrossingNonincreasingInBudget) {
    double prev = 1.0;
    for (int n : {2, 4, 6, 8, 10}) {
        double l = crossing(n, 0.5);
        EXPECT_LE(l, prev + 1e-4);
        prev = l;
    }
}

TEST(Walk, ParameterValidation) {
    EXPECT_THROW(exact_success_dp({1.5, 5}), std::invalid_argument);
    EXPECT_THROW(exact_success_dp({0.5, 0}), std::invalid_argument);
    EXPECT_THROW(exact_success_enumeration({0.5, 41}), BudgetTooLarge);
    EXPECT_THROW(per_k_curves(41, 0.5), BudgetTooLarge);
}
