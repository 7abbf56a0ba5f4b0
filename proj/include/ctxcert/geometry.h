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

#ifndef CTXCERT_GEOMETRY_H
#define CTXCERT_GEOMETRY_H

#include <optional>
#include <vector>

#include "ctxcert/lp.h"
#include "ctxcert/matrix.h"

namespace ctxcert {

using Point = RationalVector;

/// Finite set of points in Q^dimension.
struct PointSet {
    size_t dimension = 0;
    std::vector<Point> points;

    size_t size() const { return points.size(); }
    void validate() const;
    static PointSet from_points(std::vector<Point> points);

    friend bool operator==(const PointSet &, const PointSet &) = default;
};

/// Weights over a subset of some indexed family (points, preparations).
/// Valid when indices are distinct, weights are nonnegative and sum to one.
struct ConvexCombination {
    std::vector<size_t> indices;
    std::vector<Rational> weights;

    bool is_valid(size_t family_size) const;
    /// Indices carrying strictly positive weight.
    std::vector<size_t> support() const;
    /// Dense weight vector of length `family_size`.
    RationalVector dense(size_t family_size) const;
    static ConvexCombination from_dense(const RationalVector &weights);
    static ConvexCombination uniform(size_t n);

    friend bool operator==(const ConvexCombination &, const ConvexCombination &) = default;
};

/// { z : A z = b, z >= 0 }.
using HPolytope = LpProblem;

/// sum_k w_k points[indices_k]. Throws if an index is out of range.
Point combine(const PointSet &s, const ConvexCombination &c);

struct HullIntersection {
    Point point;
    ConvexCombination first;
    ConvexCombination second;
};

/// Verdict of a hull intersection test together with its exact evidence:
/// a common point with weights, or a Farkas certificate for the LP built by
/// hull_intersection_lp.
struct HullTest {
    std::optional<HullIntersection> witness;
    RationalVector certificate;

    bool intersect() const { return witness.has_value(); }
};

/// The feasibility LP behind hull intersection. Variables are the weights on
/// `a` followed by the weights on `b`. Rows are, in order: one row per
/// coordinate (sum lambda_i a_i - sum nu_j b_j = 0), then sum lambda = 1,
/// then sum nu = 1.
LpProblem hull_intersection_lp(const PointSet &a, const PointSet &b);

HullTest test_hulls(const PointSet &a, const PointSet &b);

/// Common point of conv(a) and conv(b), if any. The combinations list every
/// index of the respective set (zero weights included).
std::optional<HullIntersection> hulls_intersect(const PointSet &a, const PointSet &b);

/// Rewrites the combination `c` of `x` over `s` to use at most
/// affine_dimension(s) + 1 points. Each step finds an affine dependence among
/// the support and shifts weight along it until some weight reaches zero.
/// Returned unchanged if it is already small enough; otherwise only
/// positive-weight indices are kept, sorted.
ConvexCombination caratheodory_reduce(const PointSet &s, const Point &x, const ConvexCombination &c);

struct DisjointDecomposition {
    ConvexCombination first;
    ConvexCombination second;
    Point meeting_point;
};

/// Two disjoint subsets of `s`, each of at most dimension + 1 points, whose
/// hulls meet at `meeting_point`. Requires |s| >= dimension + 2.
///
/// Starts from `start` (default: the uniform centroid weights), reduces it,
/// subtracts the two weight vectors and renormalizes the positive and
/// negative parts. If the reduced weights coincide with the start weights the
/// start is perturbed by moving 1/(2n) from the first point to the last and
/// the procedure is repeated; the centroid is the final fallback.
DisjointDecomposition disjoint_decomposition(const PointSet &s,
                                             const std::optional<ConvexCombination> &start = std::nullopt);

/// Vertices of a bounded polytope { z : A z = b, z >= 0 } by the double
/// description method, sorted lexicographically. Empty for an infeasible
/// system; throws if the polytope is unbounded.
PointSet enumerate_vertices(const HPolytope &p);

}  // namespace ctxcert

#endif
