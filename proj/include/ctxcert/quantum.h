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

#ifndef CTXCERT_QUANTUM_H
#define CTXCERT_QUANTUM_H

#include <string>
#include <vector>

#include "ctxcert/models.h"
#include "ctxcert/scenario.h"

namespace ctxcert {

/// Pure rebit states and projective measurements on the Bloch circle.
/// prob0(i, j) = cos^2((theta_i - phi_j) / 2), then mixed with white noise:
/// p -> (1 - noise) p + noise / 2.
struct QubitScenario {
    std::vector<double> state_angles;
    std::vector<double> measurement_angles;
    std::vector<std::string> measurement_labels;  // optional
    double noise = 0;
    size_t unknown_count = 0;
};

RealTable generate_qubit_stats(const QubitScenario &s);

/// Five states at theta_i = (i/5 + 1/20) 2 pi measured along X (phi = pi/2),
/// Z (phi = 0) and W (phi = pi/5); one measurement (Y) is unknown.
QubitScenario pentagon_scenario(double noise = 0);
RealTable pentagon_ideal();

/// theta_i = i pi / (2^k + 1) for i = 1..2^k.
std::vector<double> theorem5_angles(size_t k);

/// 2^k states measured by the projections onto themselves.
QubitScenario theorem5_scenario(size_t k, double noise = 0);

/// min over i != j of P(1 | P_i, M_j) for a square table.
Rational cross_failure(const StatisticsTable &t);

/// max over i of P(1 | P_i, M_i) for a model's predictions.
Rational self_failure(const StatisticsTable &t);

/// True iff the number of distinct rows is at most 2^rank. Throws on
/// entries other than 0 and 1.
bool distinct_rows_bound(const std::vector<std::vector<int>> &rows);

enum class AuditStatus { kPassed, kInapplicable, kFailed };
std::string to_string(AuditStatus s);

struct AuditResult {
    AuditStatus status = AuditStatus::kFailed;
    Rational eta;
    Rational epsilon;
    /// v[i][l] = 1 iff P(1 | lambda_l, M_i) < eta / 2.
    std::vector<std::vector<int>> support_vectors;
    bool distinct = false;
    /// Rank of the support-vector matrix.
    size_t k_lower = 0;
    bool lemma4_holds = false;
    /// Whether eta <= eta/2 + 2 epsilon/eta fails, i.e. no two support
    /// vectors can coincide.
    bool chain_excludes_collision = false;
    size_t mu_affine_dimension = 0;
    std::string message;
};

/// Lower-bounds the number of measurements a model needs for preparation
/// noncontextuality on a square table where M_i projects onto P_i.
/// epsilon is the model's declared value or, if absent, its largest
/// predicted self-failure. Throws if the model's predictions differ from
/// `t` by more than epsilon anywhere.
AuditResult audit(const StatisticsTable &t, const OntologicalModel &model);

}  // namespace ctxcert

#endif
