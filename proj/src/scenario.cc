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

#include "ctxcert/scenario.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>

#include "ctxcert/error.h"

namespace ctxcert {

namespace {

std::vector<std::string> labels_from_json(const Json &j, const char *key, size_t count, const std::string &prefix) {
    if (!j.contains(key)) {
        return default_labels(prefix, count);
    }
    const Json &labels = j.at(key);
    if (!labels.is_array() || labels.size() != count) {
        throw Error(std::string("scenario: '") + key + "' must list " + std::to_string(count) + " names");
    }
    std::vector<std::string> out;
    for (const auto &l : labels) {
        out.push_back(l.get<std::string>());
    }
    return out;
}

const Json &prob0_rows(const Json &j, size_t *n, size_t *m) {
    if (!j.is_object() || !j.contains("prob0")) {
        throw Error("scenario: missing 'prob0'");
    }
    const Json &rows = j.at("prob0");
    if (!rows.is_array() || rows.empty()) {
        throw Error("scenario: 'prob0' must be a nonempty array of rows");
    }
    *n = rows.size();
    *m = rows.front().is_array() ? rows.front().size() : 0;
    if (*m == 0) {
        throw Error("scenario: 'prob0' rows must be nonempty arrays");
    }
    for (const auto &r : rows) {
        if (!r.is_array() || r.size() != *m) {
            throw Error("scenario: every 'prob0' row must have " + std::to_string(*m) + " entries");
        }
    }
    return rows;
}

size_t unknown_from_json(const Json &j) {
    if (!j.contains("unknown_count")) {
        return 0;
    }
    const Json &u = j.at("unknown_count");
    if (!u.is_number_integer() || u.get<long>() < 0) {
        throw Error("scenario: 'unknown_count' must be a nonnegative integer");
    }
    return u.get<size_t>();
}

std::string format_decimal(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    std::string s(buf);
    if (s.find_first_of(".eE") == std::string::npos) {
        s += ".0";
    }
    return s;
}

}  // namespace

std::vector<std::string> default_labels(const std::string &prefix, size_t count) {
    std::vector<std::string> out;
    for (size_t i = 0; i < count; ++i) {
        out.push_back(prefix + std::to_string(i));
    }
    return out;
}

std::vector<RationalVector> StatisticsTable::rows() const {
    std::vector<RationalVector> out;
    for (size_t i = 0; i < n(); ++i) {
        out.push_back(row(i));
    }
    return out;
}

void StatisticsTable::validate() const {
    if (preparations.size() != n()) {
        throw Error("statistics: " + std::to_string(preparations.size()) + " preparation labels for " +
                    std::to_string(n()) + " rows");
    }
    if (measurements.size() != m()) {
        throw Error("statistics: " + std::to_string(measurements.size()) + " measurement labels for " +
                    std::to_string(m()) + " columns");
    }
    for (size_t i = 0; i < n(); ++i) {
        for (size_t j = 0; j < m(); ++j) {
            const Rational &p = prob0(i, j);
            if (p.sign() < 0 || p > Rational(1)) {
                throw Error("statistics: prob0[" + std::to_string(i) + "][" + std::to_string(j) + "] = " + p.str() +
                            " lies outside [0, 1]");
            }
        }
    }
}

StatisticsTable StatisticsTable::from_rows(const std::vector<RationalVector> &rows, size_t unknown_count) {
    StatisticsTable t;
    t.prob0 = RationalMatrix::from_rows(rows);
    t.preparations = default_labels("P", t.n());
    t.measurements = default_labels("M", t.m());
    t.unknown_count = unknown_count;
    t.validate();
    return t;
}

void RealTable::validate() const {
    if (preparations.size() != n()) {
        throw Error("statistics: preparation labels do not match row count");
    }
    for (size_t i = 0; i < n(); ++i) {
        if (prob0[i].size() != measurements.size()) {
            throw Error("statistics: row " + std::to_string(i) + " does not match the measurement count");
        }
        for (double p : prob0[i]) {
            if (!(p >= 0.0 && p <= 1.0)) {
                throw Error("statistics: probability " + format_decimal(p) + " in row " + std::to_string(i) +
                            " lies outside [0, 1]");
            }
        }
    }
}

RealTable to_real(const StatisticsTable &t) {
    RealTable r;
    r.preparations = t.preparations;
    r.measurements = t.measurements;
    r.unknown_count = t.unknown_count;
    for (size_t i = 0; i < t.n(); ++i) {
        std::vector<double> row;
        for (size_t j = 0; j < t.m(); ++j) {
            row.push_back(t.prob0(i, j).to_double());
        }
        r.prob0.push_back(std::move(row));
    }
    return r;
}

StatisticsTable rationalize_table(const RealTable &t, const mpz_class &max_denominator) {
    t.validate();
    StatisticsTable out;
    out.preparations = t.preparations;
    out.measurements = t.measurements;
    out.unknown_count = t.unknown_count;
    out.prob0 = RationalMatrix(t.n(), t.m());
    for (size_t i = 0; i < t.n(); ++i) {
        for (size_t j = 0; j < t.m(); ++j) {
            out.prob0(i, j) = rationalize(t.prob0[i][j], max_denominator);
        }
    }
    out.validate();
    return out;
}

StatisticsTable table_from_json(const Json &j) {
    size_t n = 0, m = 0;
    const Json &rows = prob0_rows(j, &n, &m);
    std::optional<mpz_class> bound;
    if (j.contains("denominator_bound")) {
        const Json &b = j.at("denominator_bound");
        if (!b.is_number_integer() || b.get<long>() < 1) {
            throw Error("scenario: 'denominator_bound' must be a positive integer");
        }
        bound = mpz_class(b.get<long>());
    }

    StatisticsTable t;
    t.prob0 = RationalMatrix(n, m);
    for (size_t i = 0; i < n; ++i) {
        for (size_t c = 0; c < m; ++c) {
            const Json &e = rows[i][c];
            const std::string where = "scenario: prob0[" + std::to_string(i) + "][" + std::to_string(c) + "]";
            bool decimal = e.is_number_float() || (e.is_string() && Rational::is_decimal_literal(e.get<std::string>()));
            if (!decimal) {
                t.prob0(i, c) = rational_from_json(e, where);
            } else if (!bound) {
                throw Error(where + ": decimal probabilities need an explicit 'denominator_bound'");
            } else if (e.is_string()) {
                t.prob0(i, c) = rationalize(Rational::parse(e.get<std::string>()), *bound);
            } else {
                t.prob0(i, c) = rationalize(e.get<double>(), *bound);
            }
        }
    }
    t.preparations = labels_from_json(j, "preparations", n, "P");
    t.measurements = labels_from_json(j, "measurements", m, "M");
    t.unknown_count = unknown_from_json(j);
    t.validate();
    return t;
}

RealTable real_table_from_json(const Json &j) {
    size_t n = 0, m = 0;
    const Json &rows = prob0_rows(j, &n, &m);
    RealTable t;
    for (size_t i = 0; i < n; ++i) {
        std::vector<double> row;
        for (size_t c = 0; c < m; ++c) {
            const Json &e = rows[i][c];
            if (e.is_number()) {
                row.push_back(e.get<double>());
            } else if (e.is_string()) {
                const auto text = e.get<std::string>();
                row.push_back(Rational::is_decimal_literal(text) ? std::stod(text) : Rational::parse(text).to_double());
            } else {
                throw Error("scenario: prob0[" + std::to_string(i) + "][" + std::to_string(c) +
                            "] is neither a number nor a string");
            }
        }
        t.prob0.push_back(std::move(row));
    }
    t.preparations = labels_from_json(j, "preparations", n, "P");
    t.measurements = labels_from_json(j, "measurements", m, "M");
    t.unknown_count = unknown_from_json(j);
    t.validate();
    return t;
}

Json table_to_json(const StatisticsTable &t) {
    Json j;
    j["preparations"] = t.preparations;
    j["measurements"] = t.measurements;
    j["unknown_count"] = t.unknown_count;
    Json rows = Json::array();
    for (size_t i = 0; i < t.n(); ++i) {
        rows.push_back(rational_vector_to_json(t.row(i)));
    }
    j["prob0"] = std::move(rows);
    return j;
}

Json real_table_to_json(const RealTable &t) {
    Json j;
    j["preparations"] = t.preparations;
    j["measurements"] = t.measurements;
    j["unknown_count"] = t.unknown_count;
    Json rows = Json::array();
    for (const auto &r : t.prob0) {
        Json row = Json::array();
        for (double p : r) {
            row.push_back(format_decimal(p));
        }
        rows.push_back(std::move(row));
    }
    j["prob0"] = std::move(rows);
    return j;
}

RationalVector mixture_statistics(const StatisticsTable &t, const ConvexCombination &c) {
    PointSet rows{t.m(), t.rows()};
    return combine(rows, c);
}

std::vector<SubsetPair> disjoint_subset_pairs(size_t n) {
    if (n > kMaxScanPreparations) {
        throw Error("disjoint subset scan: " + std::to_string(n) + " preparations exceeds the limit of " +
                    std::to_string(kMaxScanPreparations));
    }
    std::vector<SubsetPair> out;
    size_t total = 1;
    for (size_t i = 0; i < n; ++i) {
        total *= 3;
    }
    // Base-3 code per index: 0 = unused, 1 = first set, 2 = second set.
    for (size_t code = 0; code < total; ++code) {
        SubsetPair p;
        size_t c = code;
        for (size_t i = 0; i < n; ++i, c /= 3) {
            if (c % 3 == 1) {
                p.first.push_back(i);
            } else if (c % 3 == 2) {
                p.second.push_back(i);
            }
        }
        if (p.first.empty() || p.second.empty() || p.first.front() > p.second.front()) {
            continue;
        }
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MixturePair> find_equivalences(const StatisticsTable &t) {
    t.validate();
    std::vector<MixturePair> out;
    const auto rows = t.rows();
    for (const auto &pair : disjoint_subset_pairs(t.n())) {
        PointSet a{t.m(), {}}, b{t.m(), {}};
        for (size_t i : pair.first) {
            a.points.push_back(rows[i]);
        }
        for (size_t i : pair.second) {
            b.points.push_back(rows[i]);
        }
        auto hit = hulls_intersect(a, b);
        if (!hit) {
            continue;
        }
        MixturePair mp;
        for (size_t k = 0; k < pair.first.size(); ++k) {
            mp.q.indices.push_back(pair.first[k]);
            mp.q.weights.push_back(hit->first.weights[k]);
        }
        for (size_t k = 0; k < pair.second.size(); ++k) {
            mp.q_prime.indices.push_back(pair.second[k]);
            mp.q_prime.weights.push_back(hit->second.weights[k]);
        }
        out.push_back(std::move(mp));
    }
    return out;
}

}  // namespace ctxcert
