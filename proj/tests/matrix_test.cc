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
#include "ctxcert/matrix.h"
#include "support/oracles.h"
#include "support/random_models.h"

namespace ctxcert {
namespace {

RationalMatrix rows(std::initializer_list<std::initializer_list<long>> r) {
    std::vector<RationalVector> out;
    for (const auto &row : r) {
        RationalVector v;
        for (long x : row) {
            v.push_back(Rational(x));
        }
        out.push_back(std::move(v));
    }
    return RationalMatrix::from_rows(out);
}

TEST(Matrix, RankExamples) {
    EXPECT_EQ(rank(RationalMatrix::identity(3)), 3u);
    EXPECT_EQ(rank(RationalMatrix(2, 4)), 0u);
    EXPECT_EQ(rank(rows({{0, 0}, {0, 1}, {1, 0}, {1, 1}})), 2u);
    EXPECT_EQ(rank(RationalMatrix()), 0u);
}

TEST(Matrix, RankMatchesOracleAndIgnoresRowOperations) {
    testsupport::Random rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const size_t r = rng.index(1, 5);
        const size_t c = rng.index(1, 5);
        RationalMatrix m(r, c);
        for (size_t i = 0; i < r; ++i) {
            for (size_t j = 0; j < c; ++j) {
                m(i, j) = rng.coin(0.3) ? Rational(0) : Rational(rng.integer(-3, 3), rng.integer(1, 4));
            }
        }
        if (r > 1 && rng.coin(0.5)) {
            // Force a dependent row.
            for (size_t j = 0; j < c; ++j) {
                m(r - 1, j) = m(0, j) * Rational(2, 3);
            }
        }
        const size_t k = rank(m);
        EXPECT_EQ(k, oracle::rank(oracle::to_rows(m)));
        EXPECT_LE(k, std::min(r, c));

        std::vector<RationalVector> permuted;
        for (size_t i = r; i-- > 0;) {
            RationalVector row = m.row_vector(i);
            Rational scale(rng.integer(1, 5) * (rng.coin() ? 1 : -1), rng.integer(1, 5));
            for (auto &x : row) {
                x *= scale;
            }
            permuted.push_back(std::move(row));
        }
        EXPECT_EQ(rank(RationalMatrix::from_rows(permuted)), k);
    }
}

TEST(Matrix, AffineDimension) {
    std::vector<RationalVector> one{{Rational(1), Rational(2)}};
    EXPECT_EQ(affine_dimension(one), 0u);
    std::vector<RationalVector> line{{Rational(0), Rational(0)}, {Rational(1), Rational(1)}, {Rational(2), Rational(2)}};
    EXPECT_EQ(affine_dimension(line), 1u);
    std::vector<RationalVector> square{{Rational(0), Rational(0)},
                                       {Rational(0), Rational(1)},
                                       {Rational(1), Rational(0)},
                                       {Rational(1), Rational(1)}};
    EXPECT_EQ(affine_dimension(square), 2u);
    EXPECT_THROW(affine_dimension(std::vector<RationalVector>{}), Error);
    std::vector<RationalVector> ragged{{Rational(0)}, {Rational(0), Rational(1)}};
    EXPECT_THROW(affine_dimension(ragged), Error);
}

TEST(Matrix, NullSpaceAnnihilates) {
    RationalMatrix m = rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    auto basis = null_space(m);
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_EQ(basis[0][2], Rational(1));
    for (size_t r = 0; r < m.rows(); ++r) {
        EXPECT_TRUE(dot(m.row(r), basis[0]).is_zero());
    }
    EXPECT_EQ(null_space(RationalMatrix::identity(2)).size(), 0u);
}

TEST(Matrix, ReducedRowEchelon) {
    RowEchelon e = reduced_row_echelon(rows({{0, 2, 4}, {1, 1, 1}}));
    EXPECT_EQ(e.pivot_columns, (std::vector<size_t>{0, 1}));
    EXPECT_EQ(e.reduced, rows({{1, 0, -1}, {0, 1, 2}}));
}

TEST(Matrix, Products) {
    RationalMatrix m = rows({{1, 2}, {3, 4}});
    EXPECT_EQ((m * RationalVector{Rational(1), Rational(-1)}), (RationalVector{Rational(-1), Rational(-1)}));
    EXPECT_EQ(m.transposed(), rows({{1, 3}, {2, 4}}));
    EXPECT_THROW(m * RationalVector{Rational(1)}, Error);
    EXPECT_THROW(RationalMatrix::from_rows({{Rational(1)}, {Rational(1), Rational(2)}}), Error);
}

}  // namespace
}  // namespace ctxcert
