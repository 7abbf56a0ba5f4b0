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

#ifndef CTXCERT_MATRIX_H
#define CTXCERT_MATRIX_H

#include <cstddef>
#include <span>
#include <vector>

#include "ctxcert/rational.h"

namespace ctxcert {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
   public:
    RationalMatrix() = default;
    RationalMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    RationalMatrix(size_t rows, size_t cols, std::vector<Rational> entries);

    /// All rows must have equal length. An empty list gives a 0x0 matrix.
    static RationalMatrix from_rows(const std::vector<RationalVector> &rows);
    static RationalMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const std::vector<Rational> &entries() const { return entries_; }

    Rational &operator()(size_t r, size_t c) { return entries_[r * cols_ + c]; }
    const Rational &operator()(size_t r, size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Rational> row(size_t r) const { return {entries_.data() + r * cols_, cols_}; }
    RationalVector row_vector(size_t r) const;
    RationalVector col_vector(size_t c) const;
    RationalMatrix transposed() const;

    /// Matrix-vector product; throws on dimension mismatch.
    RationalVector operator*(const RationalVector &v) const;

    friend bool operator==(const RationalMatrix &, const RationalMatrix &) = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Exact rank via fraction-free (Bareiss) elimination on an integer-scaled copy.
size_t rank(const RationalMatrix &m);

/// Rank of the matrix whose rows are p_i - p_0, i >= 1. Zero for one point.
/// Throws on an empty list or ragged input.
size_t affine_dimension(std::span<const RationalVector> points);

/// Reduced row echelon form together with the pivot column of each nonzero row.
struct RowEchelon {
    RationalMatrix reduced;
    std::vector<size_t> pivot_columns;
};
RowEchelon reduced_row_echelon(RationalMatrix m);

/// Basis of {x : m x = 0}. One vector per free column, in increasing
/// free-column order; the vector for free column f has x_f = 1 and zeros on
/// the other free columns.
std::vector<RationalVector> null_space(const RationalMatrix &m);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace ctxcert

#endif
