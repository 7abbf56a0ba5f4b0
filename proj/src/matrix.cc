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

#include "ctxcert/matrix.h"

#include <algorithm>
#include <utility>

#include "ctxcert/error.h"

namespace ctxcert {

RationalMatrix::RationalMatrix(size_t rows, size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw Error("matrix: entries.length must equal rows * cols");
    }
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector> &rows) {
    if (rows.empty()) {
        return {};
    }
    size_t cols = rows.front().size();
    std::vector<Rational> entries;
    entries.reserve(rows.size() * cols);
    for (const auto &r : rows) {
        if (r.size() != cols) {
            throw Error("matrix: ragged rows");
        }
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return RationalMatrix(rows.size(), cols, std::move(entries));
}

RationalMatrix RationalMatrix::identity(size_t n) {
    RationalMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

RationalVector RationalMatrix::row_vector(size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
}

RationalVector RationalMatrix::col_vector(size_t c) const {
    RationalVector out;
    out.reserve(rows_);
    for (size_t r = 0; r < rows_; ++r) {
        out.push_back((*this)(r, c));
    }
    return out;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

RationalVector RationalMatrix::operator*(const RationalVector &v) const {
    if (v.size() != cols_) {
        throw Error("matrix: vector length does not match column count");
    }
    RationalVector out(rows_);
    for (size_t r = 0; r < rows_; ++r) {
        out[r] = dot(row(r), v);
    }
    return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) {
        throw Error("dot: length mismatch");
    }
    mpq_class acc = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero() && !b[i].is_zero()) {
            acc += a[i].gmp() * b[i].gmp();
        }
    }
    return Rational(acc);
}

size_t rank(const RationalMatrix &m) {
    const size_t rows = m.rows();
    const size_t cols = m.cols();
    if (rows == 0 || cols == 0) {
        return 0;
    }
    // Clear denominators row by row so elimination runs over the integers.
    std::vector<mpz_class> a(rows * cols);
    for (size_t r = 0; r < rows; ++r) {
        mpz_class lcm = 1;
        for (size_t c = 0; c < cols; ++c) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).gmp().get_den_mpz_t());
        }
        for (size_t c = 0; c < cols; ++c) {
            const mpq_class &q = m(r, c).gmp();
            a[r * cols + c] = q.get_num() * (lcm / q.get_den());
        }
    }

    mpz_class previous_pivot = 1;
    size_t pivot_row = 0;
    for (size_t c = 0; c < cols && pivot_row < rows; ++c) {
        size_t p = pivot_row;
        while (p < rows && a[p * cols + c] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        if (p != pivot_row) {
            for (size_t j = 0; j < cols; ++j) {
                std::swap(a[p * cols + j], a[pivot_row * cols + j]);
            }
        }
        const mpz_class pivot = a[pivot_row * cols + c];
        for (size_t i = pivot_row + 1; i < rows; ++i) {
            const mpz_class factor = a[i * cols + c];
            for (size_t j = c + 1; j < cols; ++j) {
                mpz_class v = pivot * a[i * cols + j] - factor * a[pivot_row * cols + j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous_pivot.get_mpz_t());
                a[i * cols + j] = v;
            }
            a[i * cols + c] = 0;
        }
        previous_pivot = pivot;
        ++pivot_row;
    }
    return pivot_row;
}

size_t affine_dimension(std::span<const RationalVector> points) {
    if (points.empty()) {
        throw Error("affine_dimension: point list must be nonempty");
    }
    const size_t d = points.front().size();
    if (points.size() == 1) {
        return 0;
    }
    RationalMatrix diffs(points.size() - 1, d);
    for (size_t i = 1; i < points.size(); ++i) {
        if (points[i].size() != d) {
            throw Error("affine_dimension: points must share one length");
        }
        for (size_t c = 0; c < d; ++c) {
            diffs(i - 1, c) = points[i][c] - points[0][c];
        }
    }
    return rank(diffs);
}

RowEchelon reduced_row_echelon(RationalMatrix m) {
    RowEchelon out;
    const size_t rows = m.rows();
    const size_t cols = m.cols();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m(p, c).is_zero()) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        if (p != r) {
            for (size_t j = 0; j < cols; ++j) {
                std::swap(m(p, j), m(r, j));
            }
        }
        const Rational inv = Rational(1) / m(r, c);
        for (size_t j = c; j < cols; ++j) {
            m(r, j) *= inv;
        }
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) {
                continue;
            }
            const Rational f = m(i, c);
            for (size_t j = c; j < cols; ++j) {
                if (!m(r, j).is_zero()) {
                    m(i, j) -= f * m(r, j);
                }
            }
        }
        out.pivot_columns.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

std::vector<RationalVector> null_space(const RationalMatrix &m) {
    RowEchelon e = reduced_row_echelon(m);
    const size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : e.pivot_columns) {
        is_pivot[c] = true;
    }
    std::vector<RationalVector> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        RationalVector v(cols);
        v[f] = 1;
        for (size_t i = 0; i < e.pivot_columns.size(); ++i) {
            v[e.pivot_columns[i]] = -e.reduced(i, f);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace ctxcert
