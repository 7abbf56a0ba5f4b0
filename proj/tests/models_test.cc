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
#include "ctxcert/models.h"
#include "support/oracles.h"
#include "support/random_models.h"

namespace ctxcert {
namespace {

OntologicalModel two_state_model() {
    // Two ontic states answering M0 deterministically in opposite ways;
    // P2 mixes them evenly, P0 and P1 are the pure states.
    OntologicalModel m;
    m.preparations = {"P0", "P1", "P2"};
    m.states = {"l0", "l1"};
    m.measurements = {"M0"};
    m.mu = RationalMatrix::from_rows({{1, 0}, {0, 1}, {Rational(1, 2), Rational(1, 2)}});
    m.response = RationalMatrix::from_rows({{1}, {0}});
    return m;
}

TEST(Model, DeterministicPrediction) {
    OntologicalModel m = two_state_model();
    StatisticsTable t = predicted_statistics(m);
    EXPECT_EQ(t.prob0, RationalMatrix::from_rows({{1}, {0}, {Rational(1, 2)}}));
}

TEST(Model, SingleStateGivesIdenticalRows) {
    OntologicalModel m;
    m.preparations = {"A", "B"};
    m.states = {"only"};
    m.measurements = {"M0", "M1"};
    m.mu = RationalMatrix::from_rows({{1}, {1}});
    m.response = RationalMatrix::from_rows({{Rational(1, 3), Rational(3, 4)}});
    StatisticsTable t = predicted_statistics(m);
    EXPECT_EQ(t.row(0), t.row(1));
    EXPECT_EQ(mu_affine_dimension(m), 0u);
}

TEST(Model, Validation) {
    OntologicalModel m = two_state_model();
    m.mu(0, 0) = Rational(1, 2);
    EXPECT_THROW(m.validate(), Error);
    m = two_state_model();
    m.response(0, 0) = Rational(2);
    EXPECT_THROW(m.validate(), Error);
    m = two_state_model();
    m.states.pop_back();
    EXPECT_THROW(m.validate(), Error);
}

TEST(Model, JsonRoundTrip) {
    OntologicalModel m = two_state_model();
    m.epsilon = Rational(1, 100);
    Json j = model_to_json(m);
    EXPECT_EQ(j["response"]["M0"][1][1], "1/1");
    EXPECT_EQ(model_from_json(j), m);

    j["response"]["M0"][0] = Json::array({"1/2", "1/3"});
    EXPECT_THROW(model_from_json(j), Error);
    EXPECT_THROW(model_from_json(Json::parse(R"({"states": ["a"]})")), Error);
}

TEST(Noncontextual, TrivialPair) {
    OntologicalModel m = two_state_model();
    MixturePair same{{{0}, {Rational(1)}}, {{0}, {Rational(1)}}};
    EXPECT_TRUE(check_noncontextual(m, same));
}

TEST(Noncontextual, HandBuiltCounterexample) {
    // P2 and the even mixture of P0, P1 agree on M0 and on the ontic level.
    OntologicalModel m = two_state_model();
    MixturePair mixed{{{0, 1}, {Rational(1, 2), Rational(1, 2)}}, {{2}, {Rational(1)}}};
    EXPECT_TRUE(check_noncontextual(m, mixed));

    // Give P2 its own ontic state with the same response: operationally the
    // same mixture, ontologically different.
    OntologicalModel c;
    c.preparations = {"P0", "P1", "P2"};
    c.states = {"l0", "l1", "l2"};
    c.measurements = {"M0"};
    c.mu = RationalMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    c.response = RationalMatrix::from_rows({{1}, {0}, {Rational(1, 2)}});
    EXPECT_FALSE(check_noncontextual(c, mixed));
    EXPECT_FALSE(check_noncontextual(c, mixed, 1e-12));

    MixturePair not_equivalent{{{0}, {Rational(1)}}, {{1}, {Rational(1)}}};
    EXPECT_THROW(check_noncontextual(c, not_equivalent), Error);
}

TEST(Noncontextual, OntologicalImpliesOperational) {
    testsupport::Random rng(40);
    for (int trial = 0; trial < 100; ++trial) {
        OntologicalModel m;
        const size_t n = 4, s = rng.index(1, 3), k = rng.index(1, 3);
        m.preparations = default_labels("P", n);
        m.states = default_labels("l", s);
        m.measurements = default_labels("M", k);
        std::vector<RationalVector> mu, resp;
        for (size_t i = 0; i < n; ++i) {
            mu.push_back(rng.distribution(s, 3, true));
        }
        for (size_t l = 0; l < s; ++l) {
            RationalVector r;
            for (size_t j = 0; j < k; ++j) {
                r.push_back(rng.probability(3));
            }
            resp.push_back(r);
        }
        m.mu = RationalMatrix::from_rows(mu);
        m.response = RationalMatrix::from_rows(resp);
        PointSet a{s, {mu[0], mu[1]}}, b{s, {mu[2], mu[3]}};
        auto hit = hulls_intersect(a, b);
        if (!hit) {
            continue;
        }
        MixturePair p{{{0, 1}, hit->first.weights}, {{2, 3}, hit->second.weights}};
        // Does not throw: equal ontic mixtures predict equal statistics.
        EXPECT_TRUE(check_noncontextual(m, p));
    }
}

TEST(Theorem1, SmallestInstance) {
    OntologicalModel base;
    base.preparations = {"P0"};
    base.states = {"l0"};
    base.measurements = {"M0"};
    base.mu = RationalMatrix::from_rows({{1}});
    base.response = RationalMatrix::from_rows({{Rational(1, 3)}});
    StatisticsTable t = StatisticsTable::from_rows({{Rational(1, 3)}, {Rational(3, 4)}});

    OntologicalModel ext = extend_theorem1(base, t, 1);
    EXPECT_EQ(ext.state_count(), 2u);
    StatisticsTable p = predicted_statistics(ext);
    EXPECT_EQ(p.prob0, RationalMatrix::from_rows({{Rational(1, 3), 1}, {Rational(3, 4), 0}}));
    EXPECT_EQ(ext.measurements.back(), "M*");
    EXPECT_EQ(ext.mu.row_vector(1), (RationalVector{0, 1}));
}

TEST(Theorem1, FinalPreparationAnywhere) {
    OntologicalModel base;
    base.preparations = {"A", "C"};
    base.states = {"l0", "l1"};
    base.measurements = {"M0"};
    base.mu = RationalMatrix::from_rows({{1, 0}, {0, 1}});
    base.response = RationalMatrix::from_rows({{1}, {0}});
    StatisticsTable t = StatisticsTable::from_rows({{1}, {Rational(1, 2)}, {0}});
    OntologicalModel ext = extend_theorem1(base, t, 1);
    StatisticsTable p = predicted_statistics(ext);
    EXPECT_EQ(p.prob0, RationalMatrix::from_rows({{1, 1}, {Rational(1, 2), 0}, {0, 1}}));
    for (const auto &eq : find_equivalences(p)) {
        EXPECT_TRUE(check_noncontextual(ext, eq));
    }

    StatisticsTable wrong = StatisticsTable::from_rows({{Rational(1, 2)}, {Rational(1, 2)}, {0}});
    EXPECT_THROW(extend_theorem1(base, wrong, 1), Error);
    EXPECT_THROW(extend_theorem1(base, t, 3), Error);
}

TEST(Theorem2, ProductModelFromUniformRow) {
    StatisticsTable t = StatisticsTable::from_rows({{Rational(1, 2), Rational(1, 2)}});
    OntologicalModel m = trivial_product_model(t);
    EXPECT_EQ(m.state_count(), 4u);
    EXPECT_EQ(m.mu.row_vector(0), RationalVector(4, Rational(1, 4)));
    EXPECT_EQ(predicted_statistics(m).prob0, t.prob0);
}

TEST(Theorem2, DiscriminatorsSpanKnownColumns) {
    StatisticsTable t = StatisticsTable::from_rows({{Rational(1, 3), Rational(1, 5)}, {Rational(1), Rational(2, 7)}});
    OntologicalModel m = trivial_product_model(t, true);
    ASSERT_EQ(m.m(), 2u + 3u);
    StatisticsTable p = predicted_statistics(m);
    for (size_t d = 0; d < 3; ++d) {
        EXPECT_EQ(p.prob0(0, 2 + d), m.mu(0, d));
    }
}

TEST(MuDimension, PointMasses) {
    OntologicalModel m;
    m.preparations = default_labels("P", 3);
    m.states = default_labels("l", 3);
    m.measurements = {"M0"};
    m.mu = RationalMatrix::identity(3);
    m.response = RationalMatrix::from_rows({{1}, {0}, {Rational(1, 2)}});
    EXPECT_EQ(mu_affine_dimension(m), 2u);
}

}  // namespace
}  // namespace ctxcert
