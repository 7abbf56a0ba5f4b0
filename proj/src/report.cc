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

#include "ctxcert/report.h"

#include "ctxcert/error.h"

namespace ctxcert {

namespace {

Json indices_to_json(const std::vector<size_t> &v) {
    return Json(v);
}

std::vector<size_t> indices_from_json(const Json &j) {
    return j.get<std::vector<size_t>>();
}

Json subsets_to_json(const SubsetPair &p) {
    return Json{{"first", indices_to_json(p.first)}, {"second", indices_to_json(p.second)}};
}

SubsetPair subsets_from_json(const Json &j) {
    return {indices_from_json(j.at("first")), indices_from_json(j.at("second"))};
}

Json combination_to_json(const ConvexCombination &c) {
    return Json{{"indices", indices_to_json(c.indices)}, {"weights", rational_vector_to_json(c.weights)}};
}

ConvexCombination combination_from_json(const Json &j, const std::string &where) {
    return {indices_from_json(j.at("indices")), rational_vector_from_json(j.at("weights"), where)};
}

Json vertex_weights_to_json(const std::vector<VertexWeight> &v) {
    Json out = Json::array();
    for (const auto &w : v) {
        out.push_back(Json{{"preparation", w.preparation}, {"vertex", w.vertex}, {"weight", w.weight.str()}});
    }
    return out;
}

std::vector<VertexWeight> vertex_weights_from_json(const Json &j) {
    std::vector<VertexWeight> out;
    for (const auto &w : j) {
        out.push_back({w.at("preparation").get<size_t>(), w.at("vertex").get<size_t>(),
                       rational_from_json(w.at("weight"), "report: vertex weight")});
    }
    return out;
}

Json axis_to_json(const AxisSource &a) {
    return Json{{"column", a.column}, {"flip", a.flip}};
}

AxisSource axis_from_json(const Json &j) {
    return {j.at("column").get<size_t>(), j.at("flip").get<bool>()};
}

Verdict verdict_from_string(const std::string &s) {
    if (s == "CONTEXTUAL") {
        return Verdict::kContextual;
    }
    if (s == "INCONCLUSIVE") {
        return Verdict::kInconclusive;
    }
    throw Error("report: unknown verdict '" + s + "'");
}

Method method_from_string(const std::string &s) {
    if (s == "algorithm") {
        return Method::kAlgorithm;
    }
    if (s == "pentagon") {
        return Method::kPentagon;
    }
    throw Error("report: unknown method '" + s + "'");
}

}  // namespace

std::string to_string(Verdict v) {
    return v == Verdict::kContextual ? "CONTEXTUAL" : "INCONCLUSIVE";
}

std::string to_string(Method m) {
    return m == Method::kAlgorithm ? "algorithm" : "pentagon";
}

Json report_to_json(const CertificationReport &r) {
    Json j;
    j["method"] = to_string(r.method);
    j["verdict"] = to_string(r.verdict);

    Json pre;
    pre["preparations"] = r.preconditions.preparations;
    pre["measurements"] = r.preconditions.measurements;
    pre["unknown_count"] = r.preconditions.unknown_count;
    if (r.preconditions.required_preparations) {
        pre["required_preparations"] = *r.preconditions.required_preparations;
    }
    if (r.preconditions.max_unknown_count) {
        pre["max_unknown_count"] = *r.preconditions.max_unknown_count;
    }
    pre["satisfied"] = r.preconditions.satisfied;
    j["preconditions"] = std::move(pre);

    if (r.method == Method::kAlgorithm) {
        Json polys = Json::array();
        for (const auto &p : r.polytope_vertices) {
            Json verts = Json::array();
            for (const auto &v : p.points) {
                verts.push_back(rational_vector_to_json(v));
            }
            polys.push_back(Json{{"dimension", p.dimension}, {"vertices", std::move(verts)}});
        }
        j["polytopes"] = std::move(polys);

        Json hits = Json::array();
        for (const auto &w : r.intersections) {
            Json h = subsets_to_json(w.subsets);
            h["point"] = rational_vector_to_json(w.point);
            h["first_weights"] = vertex_weights_to_json(w.first_weights);
            h["second_weights"] = vertex_weights_to_json(w.second_weights);
            h["q"] = combination_to_json(w.q);
            h["q_prime"] = combination_to_json(w.q_prime);
            hits.push_back(std::move(h));
        }
        j["intersections"] = std::move(hits);

        Json seps = Json::array();
        for (const auto &s : r.separations) {
            Json e = subsets_to_json(s.subsets);
            e["certificate"] = rational_vector_to_json(s.certificate);
            seps.push_back(std::move(e));
        }
        j["separations"] = std::move(seps);
    } else {
        Json cases = Json::array();
        for (const auto &c : r.cases) {
            cases.push_back(Json{{"case", c.case_id},
                                 {"ordering", Json(std::vector<size_t>(c.ordering.begin(), c.ordering.end()))},
                                 {"x", axis_to_json(c.x)},
                                 {"y", axis_to_json(c.y)},
                                 {"v_alpha", c.v_alpha},
                                 {"v_beta", c.v_beta},
                                 {"quadrilateral_alpha", c.quadrilateral_alpha},
                                 {"quadrilateral_beta", c.quadrilateral_beta},
                                 {"quadrilateral_ok", c.quadrilateral_ok},
                                 {"violated", c.violated}});
        }
        j["cases"] = std::move(cases);
    }

    j["provenance"] = Json{{"input_digest", r.provenance.input_digest},
                           {"tool_version", r.provenance.tool_version},
                           {"generated_at", r.provenance.generated_at}};
    return j;
}

CertificationReport report_from_json(const Json &j) {
    CertificationReport r;
    r.method = method_from_string(j.at("method").get<std::string>());
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());

    const Json &pre = j.at("preconditions");
    r.preconditions.preparations = pre.at("preparations").get<size_t>();
    r.preconditions.measurements = pre.at("measurements").get<size_t>();
    r.preconditions.unknown_count = pre.at("unknown_count").get<size_t>();
    if (pre.contains("required_preparations")) {
        r.preconditions.required_preparations = pre.at("required_preparations").get<size_t>();
    }
    if (pre.contains("max_unknown_count")) {
        r.preconditions.max_unknown_count = pre.at("max_unknown_count").get<size_t>();
    }
    r.preconditions.satisfied = pre.at("satisfied").get<bool>();

    if (r.method == Method::kAlgorithm) {
        for (const auto &p : j.at("polytopes")) {
            PointSet s;
            s.dimension = p.at("dimension").get<size_t>();
            for (const auto &v : p.at("vertices")) {
                s.points.push_back(rational_vector_from_json(v, "report: vertex"));
            }
            r.polytope_vertices.push_back(std::move(s));
        }
        for (const auto &h : j.at("intersections")) {
            IntersectionWitness w;
            w.subsets = subsets_from_json(h);
            w.point = rational_vector_from_json(h.at("point"), "report: point");
            w.first_weights = vertex_weights_from_json(h.at("first_weights"));
            w.second_weights = vertex_weights_from_json(h.at("second_weights"));
            w.q = combination_from_json(h.at("q"), "report: q");
            w.q_prime = combination_from_json(h.at("q_prime"), "report: q_prime");
            r.intersections.push_back(std::move(w));
        }
        for (const auto &e : j.at("separations")) {
            r.separations.push_back(
                {subsets_from_json(e), rational_vector_from_json(e.at("certificate"), "report: certificate")});
        }
    } else {
        for (const auto &c : j.at("cases")) {
            CaseResult cr;
            cr.case_id = c.at("case").get<size_t>();
            auto ordering = c.at("ordering").get<std::vector<size_t>>();
            if (ordering.size() != 5) {
                throw Error("report: pentagon ordering must have five entries");
            }
            std::copy(ordering.begin(), ordering.end(), cr.ordering.begin());
            cr.x = axis_from_json(c.at("x"));
            cr.y = axis_from_json(c.at("y"));
            cr.v_alpha = c.at("v_alpha").get<double>();
            cr.v_beta = c.at("v_beta").get<double>();
            cr.quadrilateral_alpha = c.at("quadrilateral_alpha").get<bool>();
            cr.quadrilateral_beta = c.at("quadrilateral_beta").get<bool>();
            cr.quadrilateral_ok = c.at("quadrilateral_ok").get<bool>();
            cr.violated = c.at("violated").get<bool>();
            r.cases.push_back(cr);
        }
    }

    const Json &prov = j.at("provenance");
    r.provenance.input_digest = prov.at("input_digest").get<std::string>();
    r.provenance.tool_version = prov.at("tool_version").get<std::string>();
    r.provenance.generated_at = prov.at("generated_at").get<std::string>();
    return r;
}

}  // namespace ctxcert
