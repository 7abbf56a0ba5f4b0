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

#include "ctxcert/assignment.h"

#include <mutex>
#include <string>

#include "ctxcert/error.h"

namespace ctxcert {

namespace {

void check_measurement_count(size_t m, size_t max_m) {
    if (max_m > kMaxAssignmentMeasurements) {
        throw Error("assignment: measurement limit " + std::to_string(max_m) + " exceeds " +
                    std::to_string(kMaxAssignmentMeasurements));
    }
    if (m < 1 || m > max_m) {
        throw Error("assignment: measurement count " + std::to_string(m) + " outside [1, " +
                    std::to_string(max_m) + "]");
    }
}

void check_preparation(const StatisticsTable &t, size_t i) {
    if (i >= t.n()) {
        throw Error("assignment: preparation index " + std::to_string(i) + " out of range");
    }
}

}  // namespace

size_t Assignment::index() const {
    size_t index = 0;
    for (size_t j = 0; j < outcomes.size(); ++j) {
        if (outcomes[j] != 0) {
            index |= size_t{1} << j;
        }
    }
    return index;
}

Assignment Assignment::from_index(size_t index, size_t m) {
    Assignment a;
    a.outcomes.resize(m);
    for (size_t j = 0; j < m; ++j) {
        a.outcomes[j] = static_cast<int>((index >> j) & 1);
    }
    return a;
}

std::vector<Assignment> enumerate_assignments(size_t m, size_t max_m) {
    check_measurement_count(m, max_m);
    std::vector<Assignment> out;
    out.reserve(size_t{1} << m);
    for (size_t index = 0; index < (size_t{1} << m); ++index) {
        out.push_back(Assignment::from_index(index, m));
    }
    return out;
}

struct AssignmentPolytope::Cache {
    std::once_flag once;
    PointSet vertices;
};

AssignmentPolytope::AssignmentPolytope(size_t preparation, HPolytope constraints)
    : preparation_(preparation), constraints_(std::move(constraints)), cache_(std::make_shared<Cache>()) {
}

const PointSet &AssignmentPolytope::vertices() const {
    std::call_once(cache_->once, [this] { cache_->vertices = enumerate_vertices(constraints_); });
    return cache_->vertices;
}

AssignmentPolytope build_polytope(const StatisticsTable &t, size_t i, size_t max_m) {
    check_measurement_count(t.m(), max_m);
    check_preparation(t, i);
    const size_t m = t.m();
    const size_t states = size_t{1} << m;

    HPolytope p;
    p.A = RationalMatrix(m + 1, states);
    p.b.assign(m + 1, Rational(0));
    for (size_t s = 0; s < states; ++s) {
        p.A(0, s) = Rational(1);
    }
    p.b[0] = Rational(1);
    for (size_t j = 0; j < m; ++j) {
        for (size_t s = 0; s < states; ++s) {
            if (((s >> j) & 1) == 0) {
                p.A(j + 1, s) = Rational(1);
            }
        }
        p.b[j + 1] = t.prob0(i, j);
    }
    return AssignmentPolytope(i, std::move(p));
}

RationalVector product_distribution(const StatisticsTable &t, size_t i, size_t max_m) {
    check_measurement_count(t.m(), max_m);
    check_preparation(t, i);
    const size_t m = t.m();
    RationalVector mu(size_t{1} << m, Rational(1));
    for (size_t s = 0; s < mu.size(); ++s) {
        for (size_t j = 0; j < m; ++j) {
            const Rational &p0 = t.prob0(i, j);
            mu[s] *= ((s >> j) & 1) == 0 ? p0 : Rational(1) - p0;
        }
    }
    return mu;
}

namespace {

struct SideVertices {
    PointSet points;
    std::vector<std::pair<size_t, size_t>> origin;  // (preparation, vertex)
};

SideVertices collect(const std::vector<AssignmentPolytope> &polytopes, const std::vector<size_t> &subset,
                     size_t dimension) {
    SideVertices side;
    side.points.dimension = dimension;
    for (size_t prep : subset) {
        const PointSet &v = polytopes[prep].vertices();
        for (size_t k = 0; k < v.size(); ++k) {
            side.points.points.push_back(v.points[k]);
            side.origin.emplace_back(prep, k);
        }
    }
    return side;
}

void attribute(const SideVertices &side, const std::vector<size_t> &subset, const ConvexCombination &c,
               std::vector<VertexWeight> *weights, ConvexCombination *q) {
    q->indices = subset;
    q->weights.assign(subset.size(), Rational(0));
    for (size_t k = 0; k < c.indices.size(); ++k) {
        if (c.weights[k].is_zero()) {
            continue;
        }
        auto [prep, vertex] = side.origin[c.indices[k]];
        weights->push_back({prep, vertex, c.weights[k]});
        for (size_t s = 0; s < subset.size(); ++s) {
            if (subset[s] == prep) {
                q->weights[s] += c.weights[k];
            }
        }
    }
}

}  // namespace

CertificationReport scan(const StatisticsTable &t, const ScanOptions &options) {
    t.validate();
    check_measurement_count(t.m(), options.max_m);
    if (t.n() > kMaxScanPreparations) {
        throw Error("assignment: scan supports at most " + std::to_string(kMaxScanPreparations) +
                    " preparations");
    }
    const size_t n = t.n();
    const size_t m = t.m();
    const size_t dimension = size_t{1} << m;

    CertificationReport report;
    report.method = Method::kAlgorithm;
    report.preconditions.preparations = n;
    report.preconditions.measurements = m;
    report.preconditions.unknown_count = t.unknown_count;
    report.preconditions.required_preparations = m + t.unknown_count + 2;
    report.preconditions.satisfied = n >= m + t.unknown_count + 2;

    std::vector<AssignmentPolytope> polytopes;
    polytopes.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        polytopes.push_back(build_polytope(t, i, options.max_m));
        report.polytope_vertices.push_back(polytopes.back().vertices());
    }

    for (const SubsetPair &pair : disjoint_subset_pairs(n)) {
        SideVertices first = collect(polytopes, pair.first, dimension);
        SideVertices second = collect(polytopes, pair.second, dimension);
        HullTest test = test_hulls(first.points, second.points);
        if (!test.intersect()) {
            report.separations.push_back({pair, std::move(test.certificate)});
            continue;
        }
        IntersectionWitness w;
        w.subsets = pair;
        w.point = test.witness->point;
        attribute(first, pair.first, test.witness->first, &w.first_weights, &w.q);
        attribute(second, pair.second, test.witness->second, &w.second_weights, &w.q_prime);
        report.intersections.push_back(std::move(w));
    }

    report.verdict = report.intersections.empty() && report.preconditions.satisfied ? Verdict::kContextual
                                                                                     : Verdict::kInconclusive;
    return report;
}

}  // namespace ctxcert
