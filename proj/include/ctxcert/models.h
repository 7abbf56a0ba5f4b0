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

#ifndef CTXCERT_MODELS_H
#define CTXCERT_MODELS_H

#include <optional>
#include <string>
#include <vector>

#include "ctxcert/assignment.h"
#include "ctxcert/json.h"
#include "ctxcert/matrix.h"
#include "ctxcert/scenario.h"

namespace ctxcert {

/// Finite ontological model for binary measurements.
/// mu(i, l) = mu(lambda_l | P_i); response(l, j) = P(0 | lambda_l, M_j).
struct OntologicalModel {
    std::vector<std::string> preparations;
    std::vector<std::string> states;
    std::vector<std::string> measurements;
    RationalMatrix mu;
    RationalMatrix response;
    /// Declared bound on self-projection failure, used by audits.
    std::optional<Rational> epsilon;

    size_t n() const { return mu.rows(); }
    size_t state_count() const { return mu.cols(); }
    size_t m() const { return response.cols(); }

    /// Shapes agree, every mu row is a distribution, responses lie in [0, 1].
    void validate() const;

    friend bool operator==(const OntologicalModel &, const OntologicalModel &) = default;
};

/// {"preparations": [...], "states": [...], "measurements": [...],
///  "mu": [["p/q", ...], ...],
///  "response": {"<measurement>": [["P0", "P1"], ... one pair per state]},
///  "epsilon": "p/q"}
/// Preparation labels and epsilon are optional.
OntologicalModel model_from_json(const Json &j);
Json model_to_json(const OntologicalModel &model);

/// prob0(i, j) = sum_l mu(i, l) response(l, j), exact.
StatisticsTable predicted_statistics(const OntologicalModel &model);

/// Whether sum_P Q(P) mu(.|P) equals sum_P Q'(P) mu(.|P) exactly. Throws if
/// the two mixtures have different predicted statistics.
bool check_noncontextual(const OntologicalModel &model, const MixturePair &pair);

/// Floating-point variant for data ingested from decimals: both the
/// operational and the ontological comparison use `tolerance`.
bool check_noncontextual(const OntologicalModel &model, const MixturePair &pair, double tolerance);

/// Extends a model of every preparation of `t` except `final_index` with a
/// fresh ontic state lambda* and a measurement M* that returns outcome 0 on
/// every old state and outcome 1 on lambda*. The final preparation is the
/// point mass on lambda*, and lambda* answers the measurements of `t` with
/// that preparation's statistics. Rows of the result follow `t`.
/// Throws unless `base` reproduces the other rows of `t` exactly.
OntologicalModel extend_theorem1(const OntologicalModel &base, const StatisticsTable &t, size_t final_index);

/// The model with one ontic state per deterministic assignment and the
/// product distributions as mu. With `emit_discriminators` it also carries a
/// measurement for each assignment except the last one, returning outcome 0
/// only on that assignment.
OntologicalModel trivial_product_model(const StatisticsTable &t, bool emit_discriminators = false,
                                       size_t max_m = kMaxAssignmentMeasurements);

/// Affine dimension of the mu rows.
size_t mu_affine_dimension(const OntologicalModel &model);

}  // namespace ctxcert

#endif
