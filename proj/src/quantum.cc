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

#include "ctxcert/quantum.h"

#include <cmath>
#include <numbers>
#include <set>

#include "ctxcert/error.h"

namespace ctxcert {

RealTable generate_qubit_stats(const QubitScenario &s) {
    if (!(s.noise >= 0 && s.noise <= 1)) {
        throw Error("qubit: noise must lie in [0, 1]");
    }
    RealTable t;
    t.preparations = default_labels("P", s.state_angles.size());
    t.measurements = s.measurement_labels.empty() ? default_labels("M", s.measurement_angles.size())
                                                  : s.measurement_labels;
    if (t.measurements.size() != s.measurement_angles.size()) {
        throw Error("qubit: measurement labels disagree with measurement angles");
    }
    t.unknown_count = s.unknown_count;
    for (double theta : s.state_angles) {
        std::vector<double> row;
        for (double phi : s.measurement_angles) {
            if (!std::isfinite(theta) || !std::isfinite(phi)) {
                throw Error("qubit: angles must be finite");
            }
            double c = std::cos((theta - phi) / 2);
            row.push_back((1 - s.noise) * c * c + s.noise / 2);
        }
        t.prob0.push_back(std::move(row));
    }
    return t;
}

QubitScenario pentagon_scenario(double noise) {
    QubitScenario s;
    for (int i = 0; i < 5; ++i) {
        s.state_angles.push_back((i / 5.0 + 1 / 20.0) * 2 * std::numbers::pi);
    }
    s.measurement_angles = {std::numbers::pi / 2, 0, std::numbers::pi / 5};
    s.measurement_labels = {"X", "Z", "W"};
    s.noise = noise;
    s.unknown_count = 1;
    return s;
}

RealTable pentagon_ideal() {
    return generate_qubit_stats(pentagon_scenario());
}

std::vector<double> theorem5_angles(size_t k) {
    if (k < 1 || k > 10) {
        throw Error("qubit: k must lie in [1, 10]");
    }
    const size_t n = size_t{1} << k;
    std::vector<double> out;
    for (size_t i = 1; i <= n; ++i) {
        out.push_back(static_cast<double>(i) * std::numbers::pi / static_cast<double>(n + 1));
    }
    return out;
}

QubitScenario theorem5_scenario(size_t k, double noise) {
    QubitScenario s;
    s.state_angles = theorem5_angles(k);
    s.measurement_angles = s.state_angles;
    s.noise = noise;
    return s;
}

Rational cross_failure(const StatisticsTable &t) {
    if (t.n() != t.m() || t.n() < 2) {
        throw Error("audit: need a square table with at least two preparations");
    }
    std::optional<Rational> eta;
    for (size_t i = 0; i < t.n(); ++i) {
        for (size_t j = 0; j < t.m(); ++j) {
            if (i == j) {
                continue;
            }
            Rational fail = Rational(1) - t.prob0(i, j);
            if (!eta || fail < *eta) {
                eta = fail;
            }
        }
    }
    return *eta;
}

Rational self_failure(const StatisticsTable &t) {
    Rational worst(0);
    for (size_t i = 0; i < std::min(t.n(), t.m()); ++i) {
        Rational fail = Rational(1) - t.prob0(i, i);
        if (fail > worst) {
            worst = fail;
        }
    }
    return worst;
}

bool distinct_rows_bound(const std::vector<std::vector<int>> &rows) {
    if (rows.empty()) {
        return true;
    }
    RationalMatrix m(rows.size(), rows.front().size());
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) {
            throw Error("lemma 4: ragged matrix");
        }
        for (size_t c = 0; c < m.cols(); ++c) {
            if (rows[r][c] != 0 && rows[r][c] != 1) {
                throw Error("lemma 4: entries must be 0 or 1");
            }
            m(r, c) = Rational(rows[r][c]);
        }
    }
    std::set<std::vector<int>> distinct(rows.begin(), rows.end());
    const size_t k = rank(m);
    // 2^k exceeds any row count once k reaches the bit width.
    return k >= 63 || distinct.size() <= (size_t{1} << k);
}

std::string to_string(AuditStatus s) {
    switch (s) {
        case AuditStatus::kPassed:
            return "passed";
        case AuditStatus::kInapplicable:
            return "inapplicable";
        case AuditStatus::kFailed:
            return "failed";
    }
    return "failed";
}

AuditResult audit(const StatisticsTable &t, const OntologicalModel &model) {
    t.validate();
    if (model.n() != t.n() || model.m() != t.m()) {
        throw Error("audit: model shape " + std::to_string(model.n()) + " x " + std::to_string(model.m()) +
                    " differs from table " + std::to_string(t.n()) + " x " + std::to_string(t.m()));
    }
    StatisticsTable predicted = predicted_statistics(model);

    AuditResult r;
    r.eta = cross_failure(t);
    r.epsilon = model.epsilon ? *model.epsilon : self_failure(predicted);
    for (size_t i = 0; i < t.n(); ++i) {
        for (size_t j = 0; j < t.m(); ++j) {
            if ((predicted.prob0(i, j) - t.prob0(i, j)).abs() > r.epsilon) {
                throw Error("audit: model misses P(0|" + t.preparations[i] + "," + t.measurements[j] +
                            ") by more than epsilon");
            }
        }
    }
    if (self_failure(predicted) > r.epsilon) {
        throw Error("audit: model self-failure exceeds its declared epsilon");
    }
    r.mu_affine_dimension = mu_affine_dimension(model);

    if (!(r.epsilon < r.eta * r.eta / Rational(4))) {
        r.status = AuditStatus::kInapplicable;
        r.message = "theorem inapplicable: epsilon " + r.epsilon.str() + " is not below eta^2/4 = " +
                    (r.eta * r.eta / Rational(4)).str();
        return r;
    }

    const Rational threshold = r.eta / Rational(2);
    RationalMatrix v(t.n(), model.state_count());
    for (size_t i = 0; i < t.n(); ++i) {
        std::vector<int> row;
        for (size_t l = 0; l < model.state_count(); ++l) {
            row.push_back(Rational(1) - model.response(l, i) < threshold ? 1 : 0);
            v(i, l) = Rational(row.back());
        }
        r.support_vectors.push_back(std::move(row));
    }
    std::set<std::vector<int>> distinct(r.support_vectors.begin(), r.support_vectors.end());
    r.distinct = distinct.size() == r.support_vectors.size();
    r.k_lower = rank(v);
    r.lemma4_holds = distinct_rows_bound(r.support_vectors);
    r.chain_excludes_collision = !(r.eta <= threshold + Rational(2) * r.epsilon / r.eta);

    if (r.distinct && r.lemma4_holds && r.chain_excludes_collision) {
        r.status = AuditStatus::kPassed;
        r.message = "support vectors pairwise distinct; rank " + std::to_string(r.k_lower);
    } else {
        r.status = AuditStatus::kFailed;
        r.message = r.distinct ? "self-check failed" : "two support vectors coincide";
    }
    return r;
}

}  // namespace ctxcert
