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

#ifndef CTXCERT_ASSIGNMENT_H
#define CTXCERT_ASSIGNMENT_H

#include <memory>
#include <vector>

#include "ctxcert/geometry.h"
#include "ctxcert/report.h"
#include "ctxcert/scenario.h"

namespace ctxcert {

/// Largest measurement count for which the 2^m assignments are enumerated.
inline constexpr size_t kMaxAssignmentMeasurements = 20;

/// Deterministic outcome for each known binary measurement.
struct Assignment {
    std::vector<int> outcomes;

    size_t m() const { return outcomes.size(); }
    /// sum_j outcomes[j] * 2^j.
    size_t index() const;
    static Assignment from_index(size_t index, size_t m);

    friend bool operator==(const Assignment &, const Assignment &) = default;
};

/// All 2^m assignments in index order. Throws unless 1 <= m <= max_m and
/// max_m <= kMaxAssignmentMeasurements.
std::vector<Assignment> enumerate_assignments(size_t m, size_t max_m = kMaxAssignmentMeasurements);

/// Distributions over assignments that reproduce one preparation's
/// statistics: mu >= 0, sum mu = 1 and, for every known measurement j,
/// sum over assignments with outcome 0 on j of mu = prob0(i, j).
/// Vertices are computed on first use and shared between copies.
class AssignmentPolytope {
  public:
    AssignmentPolytope(size_t preparation, HPolytope constraints);

    size_t preparation() const { return preparation_; }
    const HPolytope &constraints() const { return constraints_; }
    const PointSet &vertices() const;

  private:
    struct Cache;

    size_t preparation_;
    HPolytope constraints_;
    std::shared_ptr<Cache> cache_;
};

AssignmentPolytope build_polytope(const StatisticsTable &t, size_t i,
                                  size_t max_m = kMaxAssignmentMeasurements);

/// mu(lambda) = prod_j P(lambda_j | P_i, M_j), indexed like enumerate_assignments.
RationalVector product_distribution(const StatisticsTable &t, size_t i,
                                    size_t max_m = kMaxAssignmentMeasurements);

struct ScanOptions {
    size_t max_m = kMaxAssignmentMeasurements;
};

/// Tests every pair of disjoint preparation subsets for an intersection of
/// the hulls of their assignment polytopes. CONTEXTUAL when no pair
/// intersects and n >= m + u + 2; INCONCLUSIVE otherwise. Provenance is left
/// empty for the caller to fill in.
CertificationReport scan(const StatisticsTable &t, const ScanOptions &options = {});

}  // namespace ctxcert

#endif
