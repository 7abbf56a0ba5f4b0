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

#ifndef CTXCERT_LP_H
#define CTXCERT_LP_H

#include <optional>

#include "ctxcert/matrix.h"

namespace ctxcert {

/// Equality-form feasibility problem: A z = b, z >= 0, over the rationals.
struct LpProblem {
    RationalMatrix A;
    RationalVector b;

    size_t constraints() const { return A.rows(); }
    size_t variables() const { return A.cols(); }
    void validate() const;
};

/// Outcome of lp_feasible. Exactly one of `point` / `certificate` is set.
///
/// A certificate y satisfies y^T A >= 0 componentwise and y^T b < 0, which
/// rules out any z >= 0 with A z = b (Farkas).
struct FeasibilityResult {
    std::optional<RationalVector> point;
    std::optional<RationalVector> certificate;

    bool feasible() const { return point.has_value(); }
};

/// Exact feasibility test via phase one of the simplex method.
/// Pivoting follows Bland's rule: the entering column is the lowest-index
/// column with negative reduced cost; ties in the ratio test go to the
/// lowest-index basic variable. If b = 0 the witness z = 0 is returned
/// without pivoting.
FeasibilityResult lp_feasible(const LpProblem &problem);

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct OptimizationResult {
    LpStatus status = LpStatus::kInfeasible;
    RationalVector point;
    Rational value;
    /// Set when status is kInfeasible (same convention as FeasibilityResult).
    RationalVector certificate;
};

/// Minimizes cost^T z subject to A z = b, z >= 0 with the two-phase exact
/// simplex method, Bland's rule in both phases.
OptimizationResult lp_minimize(const LpProblem &problem, const RationalVector &cost);

/// Exact checks used by callers that want to re-verify a result.
bool satisfies(const LpProblem &problem, const RationalVector &z);
bool certifies_infeasible(const LpProblem &problem, const RationalVector &y);

}  // namespace ctxcert

#endif
