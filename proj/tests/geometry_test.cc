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

#include <set>

#include "ctxcert/error.h"
#include "ctxcert/geometry.h"
#include "support/oracles.h"
#include "support/random_models.h"

namespace ctxcert {
namespace {

Point pt(std::initializer_list<Rational> xs) {
    return Point(xs);
}

PointSet square() {
    // x1 = (0,0), x2 = (0,1), x3 = (1,0), x4 = (1,1).
    return PointSet::from_points({pt({0, 0}), pt({0, 1}), pt({1, 0}), pt({1, 1})});
}

ConvexCombination fig4_weights() {
    return {{0, 1, 2, 3}, {Rational(3, 10), Rational(5, 10), Rational(1, 10), Rational(1, 10)}};
}

void expect_represents(const PointSet &s, const ConvexCombination &c, const Point &x) {
    ASSERT_TRUE(c.is_valid(s.size()));
    EXPECT_EQ(combine(s, c), x);
}

TEST(Hulls, IdenticalPoints) {
    auto hit = hulls_intersect(PointSet::from_points({pt({0, 0})}), PointSet::from_points({pt({0, 0})}));
    ASSERT_TRUE(hit);
    EXPECT_EQ(hit->point, pt({0, 0}));
}

TEST(Hulls, ParallelSegmentsAreDisjoint) {
    PointSet a = PointSet::from_points({pt({0, 0}), pt({1, 0})});
    PointSet b = PointSet::from_points({pt({0, 1}), pt({1, 1})});
    EXPECT_FALSE(hulls_intersect(a, b));
    HullTest t = test_hulls(a, b);
    EXPECT_FALSE(t.intersect());
    EXPECT_TRUE(certifies_infeasible(hull_intersection_lp(a, b), t.certificate));
}

TEST(Hulls, CrossingDiagonals) {
    PointSet a = PointSet::from_points({pt({0, 0}), pt({1, 1})});
    PointSet b = PointSet::from_points({pt({0, 1}), pt({1, 0})});
    auto hit = hulls_intersect(a, b);
    ASSERT_TRUE(hit);
    EXPECT_EQ(hit->point, pt({Rational(1, 2), Rational(1, 2)}));
    EXPECT_EQ(hit->first.weights, (RationalVector{Rational(1, 2), Rational(1, 2)}));
    EXPECT_EQ(hit->second.weights, (RationalVector{Rational(1, 2), Rational(1, 2)}));
}

TEST(Hulls, DimensionMismatch) {
    EXPECT_THROW(hulls_intersect(PointSet::from_points({pt({0})}), PointSet::from_points({pt({0, 0})})), Error);
    EXPECT_THROW(hulls_intersect(PointSet{2, {}}, PointSet::from_points({pt({0, 0})})), Error);
}

TEST(Hulls, SymmetricAndExactOnRandomInstances) {
    testsupport::Random rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const size_t d = rng.index(1, 3);
        PointSet a = testsupport::random_points(rng, rng.index(1, 4), d, -3, 3);
        PointSet b = testsupport::random_points(rng, rng.index(1, 4), d, -3, 3);
        auto ab = hulls_intersect(a, b);
        auto ba = hulls_intersect(b, a);
        ASSERT_EQ(ab.has_value(), ba.has_value());
        if (ab) {
            expect_represents(a, ab->first, ab->point);
            expect_represents(b, ab->second, ab->point);
        }
    }
}

TEST(Caratheodory, SmallSupportUnchanged) {
    PointSet s = square();
    ConvexCombination c{{0, 3}, {Rational(1, 2), Rational(1, 2)}};
    EXPECT_EQ(caratheodory_reduce(s, combine(s, c), c), c);
}

TEST(Caratheodory, Figure4Square) {
    PointSet s = square();
    Point x = combine(s, fig4_weights());
    EXPECT_EQ(x, pt({Rational(2, 10), Rational(6, 10)}));
    ConvexCombination r = caratheodory_reduce(s, x, fig4_weights());
    EXPECT_LE(r.support().size(), 3u);
    expect_represents(s, r, x);
    EXPECT_EQ(r.indices, (std::vector<size_t>{0, 1, 2}));
    EXPECT_EQ(r.weights, (RationalVector{Rational(2, 10), Rational(6, 10), Rational(2, 10)}));
}

TEST(Caratheodory, RejectsWrongRepresentation) {
    PointSet s = square();
    EXPECT_THROW(caratheodory_reduce(s, pt({0, 0}), fig4_weights()), Error);
}

TEST(Caratheodory, RandomPlanarSetsAgainstSubsetSearch) {
    testsupport::Random rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        PointSet s = testsupport::random_points(rng, 6, 2, -4, 4);
        ConvexCombination c = ConvexCombination::from_dense(rng.distribution(6));
        Point x = combine(s, c);
        ConvexCombination r = caratheodory_reduce(s, x, c);
        EXPECT_LE(r.support().size(), affine_dimension(s.points) + 1);
        expect_represents(s, r, x);

        // Some 3-subset must contain x; the reduction's support is one of them.
        bool found = false;
        for (size_t i = 0; i < 6 && !found; ++i) {
            for (size_t j = i + 1; j < 6 && !found; ++j) {
                for (size_t k = j + 1; k < 6 && !found; ++k) {
                    found = oracle::hulls_intersect(PointSet::from_points({s.points[i], s.points[j], s.points[k]}),
                                                    PointSet::from_points({x}));
                }
            }
        }
        EXPECT_TRUE(found);
    }
}

void expect_valid_decomposition(const PointSet &s, const DisjointDecomposition &d) {
    auto first = d.first.support();
    auto second = d.second.support();
    std::set<size_t> a(first.begin(), first.end());
    for (size_t i : second) {
        EXPECT_EQ(a.count(i), 0u);
    }
    EXPECT_FALSE(first.empty());
    EXPECT_FALSE(second.empty());
    EXPECT_LE(first.size(), s.dimension + 1);
    EXPECT_LE(second.size(), s.dimension + 1);
    expect_represents(s, d.first, d.meeting_point);
    expect_represents(s, d.second, d.meeting_point);
}

TEST(Decomposition, Figure4) {
    PointSet s = square();
    DisjointDecomposition d = disjoint_decomposition(s, fig4_weights());
    EXPECT_EQ(d.first.support(), (std::vector<size_t>{0, 3}));
    EXPECT_EQ(d.second.support(), (std::vector<size_t>{1, 2}));
    EXPECT_EQ(d.meeting_point, pt({Rational(1, 2), Rational(1, 2)}));
    EXPECT_EQ(d.first.weights, (RationalVector{Rational(1, 2), Rational(1, 2)}));
    EXPECT_EQ(d.second.weights, (RationalVector{Rational(1, 2), Rational(1, 2)}));
}

TEST(Decomposition, FourPointsOnALine) {
    PointSet s = PointSet::from_points({pt({0}), pt({Rational(1, 3)}), pt({Rational(2, 3)}), pt({1})});
    DisjointDecomposition d = disjoint_decomposition(s);
    expect_valid_decomposition(s, d);
}

TEST(Decomposition, CentroidStartOnSquare) {
    PointSet s = square();
    expect_valid_decomposition(s, disjoint_decomposition(s));
}

TEST(Decomposition, TooFewPoints) {
    PointSet s = PointSet::from_points({pt({0, 0}), pt({1, 0}), pt({0, 1})});
    EXPECT_THROW(disjoint_decomposition(s), Error);
}

TEST(Decomposition, RandomInstancesAlwaysValid) {
    testsupport::Random rng(21);
    for (int trial = 0; trial < 1000; ++trial) {
        const size_t d = rng.index(1, 5);
        PointSet s = testsupport::random_points(rng, d + 2, d, -3, 3);
        if (rng.coin(0.2)) {
            s.points[1] = s.points[0];
        }
        expect_valid_decomposition(s, disjoint_decomposition(s));
    }
}

TEST(Vertices, StandardSimplex) {
    HPolytope p{RationalMatrix::from_rows({RationalVector(3, Rational(1))}), {Rational(1)}};
    PointSet v = enumerate_vertices(p);
    EXPECT_EQ(v.points, (std::vector<Point>{pt({0, 0, 1}), pt({0, 1, 0}), pt({1, 0, 0})}));
}

TEST(Vertices, AssignmentPolytopeExample) {
    HPolytope p{RationalMatrix::from_rows({{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 1, 1, 1}}),
                {Rational(1, 2), Rational(1, 2), Rational(1)}};
    PointSet v = enumerate_vertices(p);
    EXPECT_EQ(v.points, (std::vector<Point>{pt({0, Rational(1, 2), Rational(1, 2), 0}),
                                            pt({Rational(1, 2), 0, 0, Rational(1, 2)})}));
}

TEST(Vertices, InfeasibleAndUnbounded) {
    HPolytope empty{RationalMatrix::from_rows({{1, 1}}), {Rational(-1)}};
    EXPECT_EQ(enumerate_vertices(empty).size(), 0u);
    HPolytope ray{RationalMatrix::from_rows({{1, -1}}), {Rational(1)}};
    EXPECT_THROW(enumerate_vertices(ray), Error);
}

TEST(Vertices, FeasiblePointsLieInTheHull) {
    testsupport::Random rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        HPolytope p;
        p.A = RationalMatrix(2, 5);
        for (size_t c = 0; c < 5; ++c) {
            p.A(0, c) = Rational(1);
            p.A(1, c) = Rational(rng.integer(-2, 2));
        }
        p.b = {Rational(1), Rational(rng.integer(-1, 1), 2)};
        PointSet v = enumerate_vertices(p);
        for (int sample = 0; sample < 3; ++sample) {
            RationalVector cost;
            for (int c = 0; c < 5; ++c) {
                cost.push_back(Rational(rng.integer(-3, 3)));
            }
            auto r = lp_minimize(p, cost);
            if (r.status != LpStatus::kOptimal) {
                EXPECT_EQ(v.size(), 0u);
                continue;
            }
            EXPECT_TRUE(hulls_intersect(v, PointSet::from_points({r.point})));
        }
    }
}

}  // namespace
}  // namespace ctxcert
