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

#ifndef CTXCERT_REPORT_H
#define CTXCERT_REPORT_H

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ctxcert/geometry.h"
#include "ctxcert/json.h"
#include "ctxcert/scenario.h"

namespace ctxcert {

enum class Verdict { kContextual, kInconclusive };
enum class Method { kAlgorithm, kPentagon };

std::string to_string(Verdict v);
std::string to_string(Method m);

/// Weight placed on one vertex of one preparation's assignment polytope.
struct VertexWeight {
    size_t preparation = 0;
    size_t vertex = 0;
    Rational weight;

    friend bool operator==(const VertexWeight &, const VertexWeight &) = default;
};

/// A common point of the two hulls of a subset pair, with positive weights on
/// the vertices that produce it from each side. `q` and `q_prime` aggregate
/// the vertex weights per preparation.
struct IntersectionWitness {
    SubsetPair subsets;
    RationalVector point;
    std::vector<VertexWeight> first_weights;
    std::vector<VertexWeight> second_weights;
    ConvexCombination q;
    ConvexCombination q_prime;

    friend bool operator==(const IntersectionWitness &, const IntersectionWitness &) = default;
};

/// Farkas certificate for a subset pair whose hulls are disjoint, for the LP
/// produced by hull_intersection_lp on the pair's concatenated vertex lists
/// (preparations in subset order, each preparation's vertices in order).
struct Separation {
    SubsetPair subsets;
    RationalVector certificate;

    friend bool operator==(const Separation &, const Separation &) = default;
};

/// Which table column feeds a pentagon coordinate, and whether the outcome
/// labels are swapped (coordinate negated).
struct AxisSource {
    size_t column = 0;
    bool flip = false;

    friend bool operator==(const AxisSource &, const AxisSource &) = default;
};

struct CaseResult {
    size_t case_id = 0;  // index of P_a
    std::array<size_t, 5> ordering{};  // (a, b, alpha, beta, gamma)
    AxisSource x;
    AxisSource y;
    double v_alpha = 0;
    double v_beta = 0;
    bool quadrilateral_alpha = false;
    bool quadrilateral_beta = false;
    bool quadrilateral_ok = false;
    bool violated = false;

    friend bool operator==(const CaseResult &, const CaseResult &) = default;
};

struct Preconditions {
    size_t preparations = 0;
    size_t measurements = 0;
    size_t unknown_count = 0;
    /// Algorithm method: n >= m + u + 2.
    std::optional<size_t> required_preparations;
    /// Pentagon method: the construction tolerates at most this many unknowns.
    std::optional<size_t> max_unknown_count;
    bool satisfied = false;

    friend bool operator==(const Preconditions &, const Preconditions &) = default;
};

struct Provenance {
    std::string input_digest;
    std::string tool_version;
    std::string generated_at;

    friend bool operator==(const Provenance &, const Provenance &) = default;
};

/// Outcome of a certification run. `verdict` is kContextual only when
/// `preconditions.satisfied` holds.
struct CertificationReport {
    Method method = Method::kAlgorithm;
    Verdict verdict = Verdict::kInconclusive;
    Preconditions preconditions;

    // Algorithm method.
    std::vector<PointSet> polytope_vertices;
    std::vector<IntersectionWitness> intersections;
    std::vector<Separation> separations;

    // Pentagon method.
    std::vector<CaseResult> cases;

    Provenance provenance;

    friend bool operator==(const CertificationReport &, const CertificationReport &) = default;
};

Json report_to_json(const CertificationReport &r);
CertificationReport report_from_json(const Json &j);

}  // namespace ctxcert

#endif
