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

#include "ctxcert/inequality.h"

#include <Eigen/Dense>
#include <cstdio>

#include "ctxcert/error.h"

namespace ctxcert {

namespace {

constexpr size_t kPentagonPreparations = 5;
constexpr size_t kPentagonColumns = 3;
constexpr size_t kPentagonMaxUnknown = 1;

double axis_value(const RealTable &t, const AxisSource &axis, size_t i) {
    if (i >= t.n()) {
        throw Error("inequality: preparation index " + std::to_string(i) + " out of range");
    }
    if (axis.column >= t.prob0[i].size()) {
        throw Error("inequality: table has no column " + std::to_string(axis.column));
    }
    double v = 2 * t.prob0[i][axis.column] - 1;
    return axis.flip ? -v : v;
}

double cross(const XYPoint &a, const XYPoint &b, const XYPoint &c) {
    return (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
}

CaseResult evaluate(const RealTable &t, const PentagonCase &c, const AxisSource &x, const AxisSource &y,
                    double tolerance) {
    auto at = [&](size_t i) { return xy_coords(t, x, y, i); };
    XYPoint pa = at(c.a());
    XYPoint pb = at(c.b());
    XYPoint palpha = at(c.alpha());
    XYPoint pbeta = at(c.beta());
    XYPoint pgamma = at(c.gamma());

    CaseResult r;
    r.case_id = c.case_id;
    r.ordering = c.ordering;
    r.x = x;
    r.y = y;
    r.v_alpha = v_determinant(pa, pgamma, palpha, pb);
    r.v_beta = v_determinant(pa, pgamma, pbeta, pb);
    r.quadrilateral_alpha = clockwise_convex(pa, pgamma, pb, palpha, tolerance);
    r.quadrilateral_beta = clockwise_convex(pa, pgamma, pb, pbeta, tolerance);
    r.quadrilateral_ok = r.quadrilateral_alpha && r.quadrilateral_beta;
    r.violated = r.quadrilateral_ok && r.v_alpha > tolerance && r.v_beta > tolerance;
    return r;
}

}  // namespace

XYPoint xy_coords(const RealTable &t, const AxisSource &x, const AxisSource &y, size_t i) {
    return {axis_value(t, x, i), axis_value(t, y, i)};
}

XYPoint xy_coords(const RealTable &t, const PentagonCase &c, size_t i) {
    return xy_coords(t, c.x, c.y, i);
}

bool clockwise_convex(const XYPoint &q1, const XYPoint &q2, const XYPoint &q3, const XYPoint &q4,
                      double tolerance) {
    const std::array<XYPoint, 4> q{q1, q2, q3, q4};
    for (size_t k = 0; k < 4; ++k) {
        if (!(cross(q[k], q[(k + 1) % 4], q[(k + 2) % 4]) < -tolerance)) {
            return false;
        }
    }
    return true;
}

double v_determinant(const XYPoint &pa, const XYPoint &pg, const XYPoint &pi, const XYPoint &pb) {
    Eigen::Matrix4d v;
    v << pa.x, pa.y, pa.x + pa.y - 1, 1,
         pg.x, pg.y, -pg.x + pg.y + 1, 1,
         pi.x, pi.y, pi.x - pi.y + 1, 1,
         pb.x, pb.y, -pb.x - pb.y - 1, 1;
    return v.determinant();
}

std::vector<PentagonCase> pentagon_cases() {
    return {
        {1, {1, 3, 4, 0, 2}, {kColumnX, false}, {kColumnZ, false}},
        {2, {2, 4, 0, 1, 3}, {kColumnZ, true}, {kColumnX, false}},
        {3, {3, 0, 1, 2, 4}, {kColumnX, true}, {kColumnZ, true}},
        {4, {4, 1, 2, 3, 0}, {kColumnZ, false}, {kColumnX, true}},
        {0, {0, 2, 3, 4, 1}, {kColumnW, false}, {kColumnZ, false}},
    };
}

CertificationReport certify_pentagon(const RealTable &t, const PentagonOptions &options) {
    t.validate();
    if (t.n() != kPentagonPreparations || t.m() != kPentagonColumns) {
        throw Error("inequality: pentagon test needs 5 preparations and 3 measurement columns, got " +
                    std::to_string(t.n()) + " x " + std::to_string(t.m()));
    }

    CertificationReport report;
    report.method = Method::kPentagon;
    report.preconditions.preparations = t.n();
    report.preconditions.measurements = t.m();
    report.preconditions.unknown_count = t.unknown_count;
    report.preconditions.max_unknown_count = kPentagonMaxUnknown;
    report.preconditions.satisfied = t.unknown_count <= kPentagonMaxUnknown;

    const std::vector<PentagonCase> cases = pentagon_cases();
    bool all_violated = true;
    for (const PentagonCase &c : cases) {
        CaseResult result = evaluate(t, c, c.x, c.y, options.tolerance);
        for (const PentagonCase &other : cases) {
            if (result.violated) {
                break;
            }
            if (other.case_id == c.case_id) {
                continue;
            }
            CaseResult alternative = evaluate(t, c, other.x, other.y, options.tolerance);
            if (alternative.violated) {
                result = alternative;
            }
        }
        all_violated = all_violated && result.violated;
        report.cases.push_back(result);
    }

    report.verdict =
        all_violated && report.preconditions.satisfied ? Verdict::kContextual : Verdict::kInconclusive;
    return report;
}

std::string pentagon_plot_csv(const RealTable &t, const CertificationReport &report) {
    std::string out = "case,prep,x,y\n";
    char line[128];
    for (const CaseResult &c : report.cases) {
        for (size_t i = 0; i < t.n(); ++i) {
            XYPoint p = xy_coords(t, c.x, c.y, i);
            std::snprintf(line, sizeof(line), "%zu,%zu,%.17g,%.17g\n", c.case_id, i, p.x, p.y);
            out += line;
        }
    }
    return out;
}

}  // namespace ctxcert
