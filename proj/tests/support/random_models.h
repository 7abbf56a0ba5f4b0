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

// Seeded generators for randomized and property tests.

#ifndef CTXCERT_TESTS_SUPPORT_RANDOM_MODELS_H
#define CTXCERT_TESTS_SUPPORT_RANDOM_MODELS_H

#include <optional>
#include <random>

#include "ctxcert/geometry.h"
#include "ctxcert/models.h"
#include "ctxcert/scenario.h"

namespace ctxcert::testsupport {

class Random {
  public:
    explicit Random(uint64_t seed) : engine_(seed) {}

    /// Uniform in [lo, hi].
    size_t index(size_t lo, size_t hi);
    long integer(long lo, long hi);
    bool coin(double p = 0.5);
    /// p/q with q in [1, max_den] and 0 <= p <= q.
    Rational probability(long max_den);
    /// Random weights summing to one; with `sparse`, some weights are zero
    /// (never all of them).
    RationalVector distribution(size_t size, long max_weight = 6, bool sparse = false);

    std::mt19937_64 &engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
};

StatisticsTable random_table(Random &rng, size_t n, size_t m, long max_den);
PointSet random_points(Random &rng, size_t count, size_t dimension, long lo, long hi);

/// Preparations drawn as mixtures of a few random distributions over the 2^m
/// deterministic assignments, with the statistics they induce. unknown_count
/// is the number of extra measurements a tomographically complete set needs
/// for the mu rows to be recoverable from statistics, which makes the model
/// noncontextual. Empty when n < m + unknown_count + 2.
struct AssignmentInstance {
    OntologicalModel model;
    StatisticsTable table;
};
std::optional<AssignmentInstance> random_assignment_instance(Random &rng, size_t n, size_t m);

/// A noncontextual model for every preparation but `final_index`: at most
/// m + 1 ontic states with affinely independent response vectors, so each
/// mu is determined by its statistics.
struct ExtensionInstance {
    OntologicalModel base;
    StatisticsTable table;
    size_t final_index = 0;
};
ExtensionInstance random_extension_instance(Random &rng, size_t n, size_t m);

/// A model reproducing `t` exactly: each preparation's mu is a random
/// convex combination of the vertices of its assignment polytope, states
/// unused by every preparation are dropped and some states are split into
/// identical copies.
OntologicalModel random_candidate_model(Random &rng, const StatisticsTable &t);

}  // namespace ctxcert::testsupport

#endif
