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

// Command-line front end: certification, statistics generation, model audits
// and the geometric helpers.

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ctxcert/assignment.h"
#include "ctxcert/error.h"
#include "ctxcert/geometry.h"
#include "ctxcert/inequality.h"
#include "ctxcert/json.h"
#include "ctxcert/models.h"
#include "ctxcert/quantum.h"
#include "ctxcert/report.h"
#include "ctxcert/scenario.h"

#ifndef CTXCERT_VERSION
#define CTXCERT_VERSION "0.0.0"
#endif

namespace {

using namespace ctxcert;

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

struct Input {
    std::string bytes;
    Json json;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Input load(const std::string &path) {
    Input in;
    in.bytes = read_file(path);
    try {
        in.json = Json::parse(in.bytes);
    } catch (const Json::parse_error &e) {
        throw Error("'" + path + "' is not valid JSON: " + e.what());
    }
    return in;
}

std::string sha256_hex(const std::string &bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 digest failed");
    }
    std::string hex;
    char buf[3];
    for (unsigned int k = 0; k < length; ++k) {
        std::snprintf(buf, sizeof buf, "%02x", digest[k]);
        hex += buf;
    }
    return hex;
}

std::string utc_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Provenance provenance(const std::string &bytes) {
    return {"sha256:" + sha256_hex(bytes), CTXCERT_VERSION, utc_timestamp()};
}

void write_text(const std::string &path, const std::string &text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write '" + path + "'");
    }
    out << text;
}

std::string dump(const Json &j) {
    return j.dump(2) + "\n";
}

/// Report JSON goes to `report_path` when given (stdout then carries only the
/// verdict line), otherwise to stdout.
void emit_report(const CertificationReport &r, const std::string &report_path) {
    if (report_path.empty()) {
        std::cout << dump(report_to_json(r));
        return;
    }
    write_text(report_path, dump(report_to_json(r)));
    std::cout << to_string(r.verdict) << "\n";
}

std::string stats_csv(const RealTable &t) {
    std::string out = "prep";
    for (const auto &m : t.measurements) {
        out += "," + m;
    }
    out += "\n";
    char buf[32];
    for (size_t i = 0; i < t.n(); ++i) {
        out += t.preparations[i];
        for (double p : t.prob0[i]) {
            std::snprintf(buf, sizeof buf, ",%.17g", p);
            out += buf;
        }
        out += "\n";
    }
    return out;
}

Json combination_json(const ConvexCombination &c) {
    return Json{{"indices", c.indices}, {"weights", rational_vector_to_json(c.weights)}};
}

struct AlgorithmArgs {
    std::string scenario;
    size_t max_m = kMaxAssignmentMeasurements;
    std::string report;
    std::string plot;
};

int run_algorithm(const AlgorithmArgs &a) {
    Input in = load(a.scenario);
    StatisticsTable t = table_from_json(in.json);
    CertificationReport r = scan(t, ScanOptions{a.max_m});
    r.provenance = provenance(in.bytes);
    if (!a.plot.empty()) {
        write_text(a.plot, stats_csv(to_real(t)));
    }
    emit_report(r, a.report);
    return r.verdict == Verdict::kContextual ? kExitPositive : kExitNegative;
}

struct PentagonArgs {
    std::string scenario;
    double tolerance = 1e-9;
    std::string report;
    std::string plot;
};

int run_pentagon(const PentagonArgs &a) {
    Input in = load(a.scenario);
    RealTable t = real_table_from_json(in.json);
    CertificationReport r = certify_pentagon(t, PentagonOptions{a.tolerance});
    r.provenance = provenance(in.bytes);
    if (!a.plot.empty()) {
        write_text(a.plot, pentagon_plot_csv(t, r));
    }
    emit_report(r, a.report);
    return r.verdict == Verdict::kContextual ? kExitPositive : kExitNegative;
}

struct QubitArgs {
    size_t k = 2;
    bool pentagon = false;
    double noise = 0;
    long denominator_bound = 0;
    long unknown_count = -1;
    std::string output = "-";
};

int run_gen_qubit(const QubitArgs &a) {
    QubitScenario s = a.pentagon ? pentagon_scenario(a.noise) : theorem5_scenario(a.k, a.noise);
    if (a.unknown_count >= 0) {
        s.unknown_count = static_cast<size_t>(a.unknown_count);
    }
    RealTable t = generate_qubit_stats(s);
    Json j = a.denominator_bound > 0 ? table_to_json(rationalize_table(t, mpz_class(a.denominator_bound)))
                                     : real_table_to_json(t);
    write_text(a.output, dump(j));
    return kExitPositive;
}

int run_audit(const std::string &scenario_path, const std::string &model_path) {
    Input scenario = load(scenario_path);
    Input model_in = load(model_path);
    StatisticsTable t = table_from_json(scenario.json);
    OntologicalModel model = model_from_json(model_in.json);
    AuditResult r = audit(t, model);

    Json j;
    j["status"] = to_string(r.status);
    j["message"] = r.message;
    j["eta"] = r.eta.str();
    j["epsilon"] = r.epsilon.str();
    j["support_vectors"] = r.support_vectors;
    j["distinct"] = r.distinct;
    j["k_lower"] = r.k_lower;
    j["lemma4_holds"] = r.lemma4_holds;
    j["chain_excludes_collision"] = r.chain_excludes_collision;
    j["mu_affine_dimension"] = r.mu_affine_dimension;
    Provenance p = provenance(scenario.bytes + model_in.bytes);
    j["provenance"] = Json{{"input_digest", p.input_digest},
                           {"tool_version", p.tool_version},
                           {"generated_at", p.generated_at}};
    std::cout << dump(j);
    return r.status == AuditStatus::kPassed ? kExitPositive : kExitNegative;
}

int run_decompose(const std::string &path) {
    Input in = load(path);
    std::vector<Point> points;
    if (in.json.contains("points")) {
        for (const auto &p : in.json.at("points")) {
            points.push_back(rational_vector_from_json(p, "decompose: point"));
        }
    } else {
        points = table_from_json(in.json).rows();
    }
    PointSet s = PointSet::from_points(std::move(points));
    std::optional<ConvexCombination> start;
    if (in.json.contains("weights")) {
        start = ConvexCombination::from_dense(rational_vector_from_json(in.json.at("weights"), "decompose: weights"));
    }
    DisjointDecomposition d = disjoint_decomposition(s, start);
    Json j;
    j["first"] = combination_json(d.first);
    j["second"] = combination_json(d.second);
    j["meeting_point"] = rational_vector_to_json(d.meeting_point);
    std::cout << dump(j);
    return kExitPositive;
}

int run_equivalences(const std::string &path) {
    Input in = load(path);
    StatisticsTable t = table_from_json(in.json);
    Json list = Json::array();
    for (const MixturePair &p : find_equivalences(t)) {
        list.push_back(Json{{"q", combination_json(p.q)}, {"q_prime", combination_json(p.q_prime)}});
    }
    std::cout << dump(Json{{"equivalences", std::move(list)}});
    return kExitPositive;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Certify preparation contextuality from prepare-and-measure statistics"};
    app.set_version_flag("--version", CTXCERT_VERSION);
    app.require_subcommand(1);

    AlgorithmArgs algorithm;
    auto *alg = app.add_subcommand("certify-algorithm", "Assignment-polytope scan over disjoint subset pairs");
    alg->add_option("scenario", algorithm.scenario, "Scenario JSON")->required();
    alg->add_option("--max-m", algorithm.max_m, "Largest accepted number of known measurements")
        ->capture_default_str();
    alg->add_option("--report", algorithm.report, "Write the report JSON here");
    alg->add_option("--plot", algorithm.plot, "Write the statistics vectors as CSV");

    PentagonArgs pentagon;
    auto *pent = app.add_subcommand("certify-pentagon", "Five-case pentagon inequality test");
    pent->add_option("scenario", pentagon.scenario, "Scenario JSON with columns X, Z, W")->required();
    pent->add_option("--tolerance", pentagon.tolerance, "Strictness margin")->capture_default_str();
    pent->add_option("--report", pentagon.report, "Write the report JSON here");
    pent->add_option("--plot", pentagon.plot, "Write per-case (x, y) points as CSV");

    QubitArgs qubit;
    auto *gen = app.add_subcommand("gen-qubit", "Generate qubit statistics");
    gen->add_option("--k", qubit.k, "2^k states measured by their own projections")->capture_default_str();
    gen->add_flag("--pentagon", qubit.pentagon, "Five-state pentagon with X, Z, W measurements");
    gen->add_option("--noise", qubit.noise, "White-noise weight in [0, 1]")->capture_default_str();
    gen->add_option("--denominator-bound", qubit.denominator_bound,
                    "Rationalize entries with denominators up to this bound");
    gen->add_option("--unknown-count", qubit.unknown_count, "Override the declared unknown measurement count");
    gen->add_option("-o,--output", qubit.output, "Output path, '-' for stdout")->capture_default_str();

    std::string audit_scenario, audit_model;
    auto *aud = app.add_subcommand("audit-model", "Support-vector rank audit of a candidate model");
    aud->add_option("scenario", audit_scenario, "Square scenario JSON")->required();
    aud->add_option("model", audit_model, "Model JSON")->required();

    std::string decompose_path;
    auto *dec = app.add_subcommand("decompose", "Split a point set into two disjoint subsets with meeting hulls");
    dec->add_option("points", decompose_path, "Points JSON or scenario JSON")->required();

    std::string equivalence_path;
    auto *eq = app.add_subcommand("equivalences", "List operational equivalences among preparations");
    eq->add_option("scenario", equivalence_path, "Scenario JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (*alg) {
            return run_algorithm(algorithm);
        }
        if (*pent) {
            return run_pentagon(pentagon);
        }
        if (*gen) {
            return run_gen_qubit(qubit);
        }
        if (*aud) {
            return run_audit(audit_scenario, audit_model);
        }
        if (*dec) {
            return run_decompose(decompose_path);
        }
        if (*eq) {
            return run_equivalences(equivalence_path);
        }
    } catch (const std::exception &e) {
        std::cerr << "ctxcert: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
