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

#ifndef CTXCERT_SCENARIO_H
#define CTXCERT_SCENARIO_H

#include <string>
#include <vector>

#include "ctxcert/geometry.h"
#include "ctxcert/json.h"
#include "ctxcert/matrix.h"

namespace ctxcert {

/// Largest preparation count for which disjoint-subset scans are attempted
/// (3^n candidate splits).
inline constexpr size_t kMaxScanPreparations = 12;

/// Exact prepare-and-measure statistics: prob0(i, j) = P(outcome 0 | P_i, M_j)
/// for binary measurements. Outcome-1 probabilities are 1 - prob0 and are
/// never stored. `unknown_count` is the declared number of binary
/// measurements in the tomographically complete set whose statistics are not
/// available.
struct StatisticsTable {
    std::vector<std::string> preparations;
    std::vector<std::string> measurements;
    size_t unknown_count = 0;
    RationalMatrix prob0;

    size_t n() const { return prob0.rows(); }
    size_t m() const { return prob0.cols(); }
    RationalVector row(size_t i) const { return prob0.row_vector(i); }
    std::vector<RationalVector> rows() const;

    /// Checks label counts and 0 <= prob0 <= 1.
    void validate() const;

    /// Table with default labels P0.., M0...
    static StatisticsTable from_rows(const std::vector<RationalVector> &rows, size_t unknown_count = 0);

    friend bool operator==(const StatisticsTable &, const StatisticsTable &) = default;
};

/// Floating-point statistics for analyses whose inputs are irrational.
struct RealTable {
    std::vector<std::string> preparations;
    std::vector<std::string> measurements;
    size_t unknown_count = 0;
    std::vector<std::vector<double>> prob0;

    size_t n() const { return prob0.size(); }
    size_t m() const { return prob0.empty() ? measurements.size() : prob0.front().size(); }
    void validate() const;
};

std::vector<std::string> default_labels(const std::string &prefix, size_t count);

RealTable to_real(const StatisticsTable &t);

/// Continued-fraction rationalization of every entry with denominators at
/// most `max_denominator`.
StatisticsTable rationalize_table(const RealTable &t, const mpz_class &max_denominator);

/// Scenario JSON:
///   {"preparations": [...], "measurements": [...], "unknown_count": u,
///    "prob0": [["p/q", ...], ...], "denominator_bound": N}
/// Labels and unknown_count are optional. Decimal entries (strings or JSON
/// numbers) are accepted only together with denominator_bound and are then
/// rationalized; "p/q" entries are taken as they are.
StatisticsTable table_from_json(const Json &j);

/// Accepts every entry form, converting to double. No bound is needed.
RealTable real_table_from_json(const Json &j);

Json table_to_json(const StatisticsTable &t);
/// Entries are written as decimal strings with 17 significant digits.
Json real_table_to_json(const RealTable &t);

/// sum_i c_i * row_i.
RationalVector mixture_statistics(const StatisticsTable &t, const ConvexCombination &c);

/// Two disjoint nonempty index sets, each sorted ascending.
struct SubsetPair {
    std::vector<size_t> first;
    std::vector<size_t> second;

    friend bool operator==(const SubsetPair &, const SubsetPair &) = default;
    friend auto operator<=>(const SubsetPair &, const SubsetPair &) = default;
};

/// All unordered pairs of disjoint nonempty subsets of {0..n-1}:
/// (3^n - 2*2^n + 1) / 2 of them. Within a pair the set holding the smallest
/// index comes first; pairs are sorted lexicographically by (first, second).
std::vector<SubsetPair> disjoint_subset_pairs(size_t n);

/// Two mixtures of preparations with disjoint index sets. Each combination
/// lists its whole subset, so zero weights may appear.
struct MixturePair {
    ConvexCombination q;
    ConvexCombination q_prime;

    friend bool operator==(const MixturePair &, const MixturePair &) = default;
};

/// One witness per disjoint subset pair whose statistics hulls intersect, in
/// disjoint_subset_pairs order. Each witness satisfies
/// mixture_statistics(q) == mixture_statistics(q_prime) exactly.
std::vector<MixturePair> find_equivalences(const StatisticsTable &t);

}  // namespace ctxcert

#endif
