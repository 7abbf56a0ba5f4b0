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

#include "ctxcert/lp.h"

#include <limits>
#include <stdexcept>
#include <utility>

#include "ctxcert/error.h"

namespace ctxcert {

namespace {

constexpr size_t kNone = std::numeric_limits<size_t>::max();

// Dense simplex tableau over mpq_class.
//
// Layout: `m` constraint rows followed by one objective row. Columns are the
// `n` structural variables, then `m` artificial variables, then the
// right-hand side. The objective row holds reduced costs and, in the rhs
// slot, the negated objective value.
class Tableau {
   public:
    Tableau(const LpProblem &p, std::vector<int> *row_signs) : m_(p.constraints()), n_(p.variables()) {
        width_ = n_ + m_ + 1;
        cells_.assign((m_ + 1) * width_, mpq_class(0));
        basis_.resize(m_);
        row_signs->assign(m_, 1);
        for (size_t i = 0; i < m_; ++i) {
            int sign = p.b[i].sign() < 0 ? -1 : 1;
            (*row_signs)[i] = sign;
            for (size_t j = 0; j < n_; ++j) {
                if (!p.A(i, j).is_zero()) {
                    at(i, j) = sign > 0 ? p.A(i, j).gmp() : mpq_class(-p.A(i, j).gmp());
                }
            }
            at(i, n_ + i) = 1;
            rhs(i) = sign > 0 ? p.b[i].gmp() : mpq_class(-p.b[i].gmp());
            basis_[i] = n_ + i;
        }
        alive_.assign(m_, true);
    }

    mpq_class &at(size_t r, size_t c) { return cells_[r * width_ + c]; }
    const mpq_class &at(size_t r, size_t c) const { return cells_[r * width_ + c]; }
    mpq_class &rhs(size_t r) { return at(r, width_ - 1); }
    mpq_class &cost(size_t c) { return at(m_, c); }
    mpq_class &objective_rhs() { return at(m_, width_ - 1); }

    size_t m() const { return m_; }
    size_t n() const { return n_; }
    bool is_artificial(size_t c) const { return c >= n_ && c < n_ + m_; }
    const std::vector<size_t> &basis() const { return basis_; }
    bool alive(size_t r) const { return alive_[r]; }
    void kill(size_t r) { alive_[r] = false; }

    // Phase-one objective: minimize the sum of artificials.
    void set_phase_one_costs() {
        for (size_t c = 0; c < width_; ++c) {
            at(m_, c) = 0;
        }
        for (size_t i = 0; i < m_; ++i) {
            for (size_t j = 0; j < n_; ++j) {
                if (sgn(at(i, j)) != 0) {
                    at(m_, j) -= at(i, j);
                }
            }
            objective_rhs() -= rhs(i);
        }
    }

    // Reduced costs for an arbitrary cost vector over structural columns,
    // given the current basis. Artificial columns are left at zero and are
    // never allowed to enter afterwards.
    void set_costs(const RationalVector &cost_vector) {
        for (size_t c = 0; c < width_; ++c) {
            at(m_, c) = 0;
        }
        for (size_t j = 0; j < n_; ++j) {
            at(m_, j) = cost_vector[j].gmp();
        }
        for (size_t i = 0; i < m_; ++i) {
            if (!alive_[i]) {
                continue;
            }
            size_t b = basis_[i];
            if (b >= n_ || cost_vector[b].is_zero()) {
                continue;
            }
            const mpq_class cb = cost_vector[b].gmp();
            for (size_t c = 0; c < width_; ++c) {
                if (sgn(at(i, c)) != 0) {
                    at(m_, c) -= cb * at(i, c);
                }
            }
        }
    }

    void pivot(size_t r, size_t c) {
        const mpq_class inv = 1 / at(r, c);
        for (size_t j = 0; j < width_; ++j) {
            if (sgn(at(r, j)) != 0) {
                at(r, j) *= inv;
            }
        }
        for (size_t i = 0; i <= m_; ++i) {
            if (i == r || (i < m_ && !alive_[i]) || sgn(at(i, c)) == 0) {
                continue;
            }
            const mpq_class f = at(i, c);
            for (size_t j = 0; j < width_; ++j) {
                if (sgn(at(r, j)) != 0) {
                    at(i, j) -= f * at(r, j);
                }
            }
        }
        basis_[r] = c;
    }

    // Runs Bland's rule to optimality. Returns false if unbounded.
    bool optimize(bool allow_artificial) {
        for (;;) {
            size_t entering = kNone;
            const size_t limit = allow_artificial ? n_ + m_ : n_;
            for (size_t j = 0; j < limit; ++j) {
                if (sgn(at(m_, j)) < 0) {
                    entering = j;
                    break;
                }
            }
            if (entering == kNone) {
                return true;
            }
            size_t leaving = kNone;
            mpq_class best_ratio;
            for (size_t i = 0; i < m_; ++i) {
                if (!alive_[i] || sgn(at(i, entering)) <= 0) {
                    continue;
                }
                mpq_class ratio = rhs(i) / at(i, entering);
                if (leaving == kNone || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (leaving == kNone) {
                return false;
            }
            pivot(leaving, entering);
        }
    }

    // Replaces zero-level basic artificials with structural columns; rows
    // that are linear combinations of the others are dropped.
    void drive_out_artificials() {
        for (size_t i = 0; i < m_; ++i) {
            if (!alive_[i] || !is_artificial(basis_[i])) {
                continue;
            }
            size_t col = kNone;
            for (size_t j = 0; j < n_; ++j) {
                if (sgn(at(i, j)) != 0) {
                    col = j;
                    break;
                }
            }
            if (col == kNone) {
                kill(i);
            } else {
                pivot(i, col);
            }
        }
    }

    RationalVector structural_point() const {
        RationalVector z(n_);
        for (size_t i = 0; i < m_; ++i) {
            if (alive_[i] && basis_[i] < n_) {
                z[basis_[i]] = Rational(at(i, width_ - 1));
            }
        }
        return z;
    }

    // Phase-one duals: w_i = 1 - (reduced cost of artificial i).
    RationalVector farkas_certificate(const std::vector<int> &row_signs) const {
        RationalVector y(m_);
        for (size_t i = 0; i < m_; ++i) {
            mpq_class w = 1 - at(m_, n_ + i);
            y[i] = Rational(mpq_class(row_signs[i] > 0 ? -w : w));
        }
        return y;
    }

   private:
    size_t m_;
    size_t n_;
    size_t width_ = 0;
    std::vector<mpq_class> cells_;
    std::vector<size_t> basis_;
    std::vector<bool> alive_;
};

bool all_zero(const RationalVector &v) {
    for (const auto &x : v) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

}  // namespace

void LpProblem::validate() const {
    if (A.rows() != b.size()) {
        throw Error("lp: A has " + std::to_string(A.rows()) + " rows but b has length " + std::to_string(b.size()));
    }
}

bool satisfies(const LpProblem &problem, const RationalVector &z) {
    if (z.size() != problem.variables()) {
        return false;
    }
    for (const auto &x : z) {
        if (x.sign() < 0) {
            return false;
        }
    }
    return problem.A * z == problem.b;
}

bool certifies_infeasible(const LpProblem &problem, const RationalVector &y) {
    if (y.size() != problem.constraints()) {
        return false;
    }
    for (size_t j = 0; j < problem.variables(); ++j) {
        mpq_class acc = 0;
        for (size_t i = 0; i < problem.constraints(); ++i) {
            acc += y[i].gmp() * problem.A(i, j).gmp();
        }
        if (sgn(acc) < 0) {
            return false;
        }
    }
    return dot(y, problem.b).sign() < 0;
}

FeasibilityResult lp_feasible(const LpProblem &problem) {
    problem.validate();
    FeasibilityResult result;
    if (all_zero(problem.b)) {
        result.point = RationalVector(problem.variables());
        return result;
    }
    std::vector<int> signs;
    Tableau t(problem, &signs);
    t.set_phase_one_costs();
    t.optimize(/*allow_artificial=*/true);
    if (sgn(t.objective_rhs()) == 0) {
        result.point = t.structural_point();
        if (!satisfies(problem, *result.point)) {
            throw std::logic_error("lp_feasible: witness failed exact verification");
        }
    } else {
        result.certificate = t.farkas_certificate(signs);
        if (!certifies_infeasible(problem, *result.certificate)) {
            throw std::logic_error("lp_feasible: certificate failed exact verification");
        }
    }
    return result;
}

OptimizationResult lp_minimize(const LpProblem &problem, const RationalVector &cost) {
    problem.validate();
    if (cost.size() != problem.variables()) {
        throw Error("lp: cost vector length does not match variable count");
    }
    OptimizationResult result;
    std::vector<int> signs;
    Tableau t(problem, &signs);
    t.set_phase_one_costs();
    t.optimize(/*allow_artificial=*/true);
    if (sgn(t.objective_rhs()) != 0) {
        result.status = LpStatus::kInfeasible;
        result.certificate = t.farkas_certificate(signs);
        return result;
    }
    t.drive_out_artificials();
    t.set_costs(cost);
    if (!t.optimize(/*allow_artificial=*/false)) {
        result.status = LpStatus::kUnbounded;
        return result;
    }
    result.status = LpStatus::kOptimal;
    result.point = t.structural_point();
    result.value = dot(cost, result.point);
    if (!satisfies(problem, result.point)) {
        throw std::logic_error("lp_minimize: optimum failed exact verification");
    }
    return result;
}

}  // namespace ctxcert
