// Copyright 2026 The ctxcert Authors
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

#include <gtest/gtest.h>

#include "ctxcert/error.h"
#include "ctxcert/lp.h"
#include "support/oracles.h"
#include "support/random_models.h"

namespace ctxcert {
namespace {

LpProblem problem(std::vector<RationalVector> a, RationalVector b) {
    return {RationalMatrix::from_rows(a), std::move(b)};
}

LpProblem random_problem(testsupport::Random &rng, size_t rows, size_t cols) {
    LpProblem p;
    p.A = RationalMatrix(rows, cols);
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < cols; ++c) {
            p.A(r, c) = rng.coin(0.25) ? Rational(0) : Rational(rng.integer(-4, 4), rng.integer(1, 3));
        }
    }
    if (rng.coin(0.5)) {
        // Feasible by construction: b = A z0 for a sparse z0 >= 0.
        RationalVector z0(cols);
        for (auto &z : z0) {
            z = rng.coin(0.5) ? Rational(0) : Rational(rng.integer(0, 3), rng.integer(1, 3));
        }
        p.b = p.A * z0;
    } else {
        for (size_t r = 0; r < rows; ++r) {
            p.b.push_back(Rational(rng.integer(-5, 5), rng.integer(1, 3)));
        }
    }
    return p;
}

TEST(Lp, SimpleFeasible) {
    auto r = lp_feasible(problem({{Rational(1), Rational(1)}}, {Rational(1)}));
    ASSERT_TRUE(r.feasible());
    EXPECT_EQ(*r.point, (RationalVector{Rational(1), Rational(0)}));
    EXPECT_FALSE(r.certificate);
}

TEST(Lp, SignContradiction) {
    LpProblem p = problem({{Rational(1)}}, {Rational(-1)});
    auto r = lp_feasible(p);
    ASSERT_FALSE(r.feasible());
    ASSERT_TRUE(r.certificate);
    // y = (1): y^T A = 1 >= 0 and y^T b = -1 < 0.
    EXPECT_EQ(*r.certificate, RationalVector{Rational(1)});
    EXPECT_TRUE(certifies_infeasible(p, *r.certificate));
    EXPECT_FALSE(certifies_infeasible(p, RationalVector{Rational(-1)}));
}

TEST(Lp, ZeroRightHandSideGivesOrigin) {
    auto r = lp_feasible(problem({{Rational(1), Rational(-1)}, {Rational(2), Rational(3)}}, {Rational(0), Rational(0)}));
    ASSERT_TRUE(r.feasible());
    EXPECT_EQ(*r.point, (RationalVector{Rational(0), Rational(0)}));
}

TEST(Lp, RedundantAndDegenerateRows) {
    LpProblem p = problem({{Rational(1), Rational(1), Rational(0)},
                           {Rational(2), Rational(2), Rational(0)},
                           {Rational(0), Rational(1), Rational(1)}},
                          {Rational(1), Rational(2), Rational(0)});
    auto r = lp_feasible(p);
    ASSERT_TRUE(r.feasible());
    EXPECT_TRUE(satisfies(p, *r.point));
    EXPECT_EQ(*r.point, (RationalVector{Rational(1), Rational(0), Rational(0)}));
}

TEST(Lp, DimensionMismatch) {
    LpProblem p = problem({{Rational(1), Rational(1)}}, {Rational(1), Rational(2)});
    EXPECT_THROW(lp_feasible(p), Error);
}

TEST(Lp, AgreesWithBasicSolutionOracle) {
    testsupport::Random rng(5);
    int feasible = 0;
    for (int trial = 0; trial < 400; ++trial) {
        LpProblem p = random_problem(rng, 5, 8);
        auto r = lp_feasible(p);
        bool expected = oracle::feasible_point(p).has_value();
        ASSERT_EQ(r.feasible(), expected) << "trial " << trial;
        if (r.feasible()) {
            ++feasible;
            EXPECT_TRUE(satisfies(p, *r.point));
        } else {
            EXPECT_TRUE(certifies_infeasible(p, *r.certificate));
        }
    }
    EXPECT_GT(feasible, 50);
    EXPECT_LT(feasible, 400);
}

TEST(Lp, AgreesWithFloatResolveWhenUnambiguous) {
    testsupport::Random rng(17);
    int compared = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        LpProblem p = random_problem(rng, rng.index(1, 4), rng.index(1, 6));
        const bool exact = lp_feasible(p).feasible();
        const double residual = oracle::float_infeasibility(p);
        if (residual > 1e-6) {
            EXPECT_FALSE(exact) << "trial " << trial;
            ++compared;
        } else if (residual < 1e-9) {
            EXPECT_TRUE(exact) << "trial " << trial;
            ++compared;
        }
    }
    EXPECT_GT(compared, 900);
}

TEST(Lp, MinimizeBoundedAndUnbounded) {
    // min -z1 s.t. z1 + z2 = 2.
    LpProblem p = problem({{Rational(1), Rational(1)}}, {Rational(2)});
    auto r = lp_minimize(p, {Rational(-1), Rational(0)});
    ASSERT_EQ(r.status, LpStatus::kOptimal);
    EXPECT_EQ(r.value, Rational(-2));
    EXPECT_EQ(r.point, (RationalVector{Rational(2), Rational(0)}));

    // min -z1 s.t. z1 - z2 = 0 is unbounded.
    LpProblem q = problem({{Rational(1), Rational(-1)}}, {Rational(0)});
    EXPECT_EQ(lp_minimize(q, {Rational(-1), Rational(0)}).status, LpStatus::kUnbounded);

    LpProblem infeasible = problem({{Rational(1)}}, {Rational(-3)});
    auto s = lp_minimize(infeasible, {Rational(1)});
    EXPECT_EQ(s.status, LpStatus::kInfeasible);
    EXPECT_TRUE(certifies_infeasible(infeasible, s.certificate));
}

TEST(Lp, MinimizeMatchesVertexOracle) {
    testsupport::Random rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        LpProblem p = random_problem(rng, 3, 5);
        // Bounded feasible region: add sum z = 1.
        p.A = RationalMatrix::from_rows([&] {
            std::vector<RationalVector> rows;
            for (size_t r = 0; r < p.A.rows(); ++r) {
                rows.push_back(p.A.row_vector(r));
            }
            rows.push_back(RationalVector(5, Rational(1)));
            return rows;
        }());
        p.b.push_back(Rational(1));
        RationalVector cost;
        for (int c = 0; c < 5; ++c) {
            cost.push_back(Rational(rng.integer(-5, 5)));
        }
        auto verts = oracle::vertices(p);
        auto r = lp_minimize(p, cost);
        if (verts.empty()) {
            EXPECT_EQ(r.status, LpStatus::kInfeasible);
            continue;
        }
        ASSERT_EQ(r.status, LpStatus::kOptimal);
        Rational best = dot(cost, verts.front());
        for (const auto &v : verts) {
            best = std::min(best, dot(cost, v));
        }
        EXPECT_EQ(r.value, best);
        EXPECT_TRUE(satisfies(p, r.point));
    }
}

}  // namespace
}  // namespace ctxcert
