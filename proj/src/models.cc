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

#include "ctxcert/models.h"

#include <cmath>

#include "ctxcert/error.h"

namespace ctxcert {

namespace {

std::vector<std::string> string_list(const Json &j, const char *key) {
    if (!j.contains(key) || !j.at(key).is_array()) {
        throw Error(std::string("model: missing list '") + key + "'");
    }
    return j.at(key).get<std::vector<std::string>>();
}

std::string assignment_label(size_t index, size_t m) {
    std::string s = "a";
    for (size_t j = 0; j < m; ++j) {
        s += ((index >> j) & 1) ? '1' : '0';
    }
    return s;
}

RationalVector mixture_of_rows(const RationalMatrix &rows, const ConvexCombination &c) {
    RationalVector out(rows.cols(), Rational(0));
    for (size_t k = 0; k < c.indices.size(); ++k) {
        if (c.indices[k] >= rows.rows()) {
            throw Error("model: mixture index " + std::to_string(c.indices[k]) + " out of range");
        }
        for (size_t l = 0; l < rows.cols(); ++l) {
            out[l] += c.weights[k] * rows(c.indices[k], l);
        }
    }
    return out;
}

bool close(const RationalVector &a, const RationalVector &b, double tolerance) {
    for (size_t k = 0; k < a.size(); ++k) {
        if (std::abs(a[k].to_double() - b[k].to_double()) > tolerance) {
            return false;
        }
    }
    return true;
}

}  // namespace

void OntologicalModel::validate() const {
    if (preparations.size() != mu.rows()) {
        throw Error("model: " + std::to_string(preparations.size()) + " preparation labels for " +
                    std::to_string(mu.rows()) + " mu rows");
    }
    if (states.size() != mu.cols() || states.size() != response.rows()) {
        throw Error("model: state count disagrees between labels, mu and response");
    }
    if (measurements.size() != response.cols()) {
        throw Error("model: measurement labels disagree with response columns");
    }
    for (size_t i = 0; i < mu.rows(); ++i) {
        Rational total(0);
        for (size_t l = 0; l < mu.cols(); ++l) {
            if (mu(i, l).sign() < 0) {
                throw Error("model: negative mu for preparation " + preparations[i]);
            }
            total += mu(i, l);
        }
        if (total != Rational(1)) {
            throw Error("model: mu for preparation " + preparations[i] + " sums to " + total.str());
        }
    }
    for (const Rational &r : response.entries()) {
        if (r.sign() < 0 || r > Rational(1)) {
            throw Error("model: response probability " + r.str() + " outside [0, 1]");
        }
    }
    if (epsilon && epsilon->sign() < 0) {
        throw Error("model: negative epsilon");
    }
}

OntologicalModel model_from_json(const Json &j) {
    if (!j.is_object()) {
        throw Error("model: expected a JSON object");
    }
    OntologicalModel model;
    model.states = string_list(j, "states");
    model.measurements = string_list(j, "measurements");

    if (!j.contains("mu") || !j.at("mu").is_array()) {
        throw Error("model: missing 'mu'");
    }
    std::vector<Rational> mu_entries;
    for (const auto &row : j.at("mu")) {
        RationalVector r = rational_vector_from_json(row, "model: mu");
        if (r.size() != model.states.size()) {
            throw Error("model: every mu row needs one entry per state");
        }
        mu_entries.insert(mu_entries.end(), r.begin(), r.end());
    }
    const size_t n = j.at("mu").size();
    model.mu = RationalMatrix(n, model.states.size(), std::move(mu_entries));
    model.preparations = j.contains("preparations") ? string_list(j, "preparations") : default_labels("P", n);

    if (!j.contains("response") || !j.at("response").is_object()) {
        throw Error("model: missing 'response' object");
    }
    const Json &response = j.at("response");
    model.response = RationalMatrix(model.states.size(), model.measurements.size());
    for (size_t c = 0; c < model.measurements.size(); ++c) {
        const std::string &name = model.measurements[c];
        if (!response.contains(name)) {
            throw Error("model: no response for measurement '" + name + "'");
        }
        const Json &rows = response.at(name);
        if (!rows.is_array() || rows.size() != model.states.size()) {
            throw Error("model: response for '" + name + "' needs one outcome pair per state");
        }
        for (size_t l = 0; l < rows.size(); ++l) {
            RationalVector pair = rational_vector_from_json(rows[l], "model: response");
            if (pair.size() != 2 || pair[0] + pair[1] != Rational(1)) {
                throw Error("model: response of '" + name + "' on state " + model.states[l] +
                            " is not a binary distribution");
            }
            model.response(l, c) = pair[0];
        }
    }
    if (j.contains("epsilon")) {
        model.epsilon = rational_from_json(j.at("epsilon"), "model: epsilon");
    }
    model.validate();
    return model;
}

Json model_to_json(const OntologicalModel &model) {
    Json j;
    j["preparations"] = model.preparations;
    j["states"] = model.states;
    j["measurements"] = model.measurements;
    Json mu = Json::array();
    for (size_t i = 0; i < model.mu.rows(); ++i) {
        mu.push_back(rational_vector_to_json(model.mu.row_vector(i)));
    }
    j["mu"] = std::move(mu);
    Json response = Json::object();
    for (size_t c = 0; c < model.measurements.size(); ++c) {
        Json rows = Json::array();
        for (size_t l = 0; l < model.states.size(); ++l) {
            const Rational &p0 = model.response(l, c);
            rows.push_back(Json::array({p0.str(), (Rational(1) - p0).str()}));
        }
        response[model.measurements[c]] = std::move(rows);
    }
    j["response"] = std::move(response);
    if (model.epsilon) {
        j["epsilon"] = model.epsilon->str();
    }
    return j;
}

StatisticsTable predicted_statistics(const OntologicalModel &model) {
    model.validate();
    StatisticsTable t;
    t.preparations = model.preparations;
    t.measurements = model.measurements;
    t.prob0 = RationalMatrix(model.n(), model.m());
    for (size_t i = 0; i < model.n(); ++i) {
        for (size_t j = 0; j < model.m(); ++j) {
            Rational p(0);
            for (size_t l = 0; l < model.state_count(); ++l) {
                p += model.mu(i, l) * model.response(l, j);
            }
            t.prob0(i, j) = std::move(p);
        }
    }
    return t;
}

bool check_noncontextual(const OntologicalModel &model, const MixturePair &pair) {
    StatisticsTable t = predicted_statistics(model);
    if (!pair.q.is_valid(model.n()) || !pair.q_prime.is_valid(model.n())) {
        throw Error("model: mixture pair is not a pair of convex combinations over the preparations");
    }
    if (mixture_statistics(t, pair.q) != mixture_statistics(t, pair.q_prime)) {
        throw Error("model: mixtures are not operationally equivalent");
    }
    return mixture_of_rows(model.mu, pair.q) == mixture_of_rows(model.mu, pair.q_prime);
}

bool check_noncontextual(const OntologicalModel &model, const MixturePair &pair, double tolerance) {
    StatisticsTable t = predicted_statistics(model);
    if (!pair.q.is_valid(model.n()) || !pair.q_prime.is_valid(model.n())) {
        throw Error("model: mixture pair is not a pair of convex combinations over the preparations");
    }
    if (!close(mixture_statistics(t, pair.q), mixture_statistics(t, pair.q_prime), tolerance)) {
        throw Error("model: mixtures are not operationally equivalent within tolerance");
    }
    return close(mixture_of_rows(model.mu, pair.q), mixture_of_rows(model.mu, pair.q_prime), tolerance);
}

OntologicalModel extend_theorem1(const OntologicalModel &base, const StatisticsTable &t, size_t final_index) {
    t.validate();
    base.validate();
    if (final_index >= t.n()) {
        throw Error("theorem 1 extension: final preparation index out of range");
    }
    if (base.n() + 1 != t.n() || base.m() != t.m()) {
        throw Error("theorem 1 extension: base model must cover the other " + std::to_string(t.n() - 1) +
                    " preparations on all " + std::to_string(t.m()) + " measurements");
    }
    StatisticsTable predicted = predicted_statistics(base);
    for (size_t i = 0, b = 0; i < t.n(); ++i) {
        if (i == final_index) {
            continue;
        }
        if (predicted.row(b) != t.row(i)) {
            throw Error("theorem 1 extension: base model does not reproduce preparation " + t.preparations[i]);
        }
        ++b;
    }

    const size_t s = base.state_count();
    const size_t m = t.m();
    OntologicalModel out;
    out.preparations = t.preparations;
    out.states = base.states;
    out.states.push_back("lambda*");
    out.measurements = t.measurements;
    out.measurements.push_back("M*");

    out.mu = RationalMatrix(t.n(), s + 1);
    for (size_t i = 0, b = 0; i < t.n(); ++i) {
        if (i == final_index) {
            out.mu(i, s) = Rational(1);
            continue;
        }
        for (size_t l = 0; l < s; ++l) {
            out.mu(i, l) = base.mu(b, l);
        }
        ++b;
    }

    out.response = RationalMatrix(s + 1, m + 1);
    for (size_t l = 0; l < s; ++l) {
        for (size_t j = 0; j < m; ++j) {
            out.response(l, j) = base.response(l, j);
        }
        out.response(l, m) = Rational(1);
    }
    for (size_t j = 0; j < m; ++j) {
        out.response(s, j) = t.prob0(final_index, j);
    }
    out.response(s, m) = Rational(0);
    return out;
}

OntologicalModel trivial_product_model(const StatisticsTable &t, bool emit_discriminators, size_t max_m) {
    t.validate();
    const size_t m = t.m();
    const size_t states = enumerate_assignments(m, max_m).size();

    OntologicalModel model;
    model.preparations = t.preparations;
    for (size_t s = 0; s < states; ++s) {
        model.states.push_back(assignment_label(s, m));
    }
    model.measurements = t.measurements;
    const size_t discriminators = emit_discriminators ? states - 1 : 0;
    for (size_t s = 0; s < discriminators; ++s) {
        model.measurements.push_back("D_" + assignment_label(s, m));
    }

    model.mu = RationalMatrix(t.n(), states);
    for (size_t i = 0; i < t.n(); ++i) {
        RationalVector mu = product_distribution(t, i, max_m);
        for (size_t s = 0; s < states; ++s) {
            model.mu(i, s) = mu[s];
        }
    }

    model.response = RationalMatrix(states, m + discriminators);
    for (size_t s = 0; s < states; ++s) {
        for (size_t j = 0; j < m; ++j) {
            model.response(s, j) = Rational(((s >> j) & 1) == 0 ? 1 : 0);
        }
        for (size_t d = 0; d < discriminators; ++d) {
            model.response(s, m + d) = Rational(s == d ? 1 : 0);
        }
    }
    return model;
}

size_t mu_affine_dimension(const OntologicalModel &model) {
    std::vector<RationalVector> rows;
    for (size_t i = 0; i < model.n(); ++i) {
        rows.push_back(model.mu.row_vector(i));
    }
    return affine_dimension(rows);
}

}  // namespace ctxcert
