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

#ifndef CTXCERT_INEQUALITY_H
#define CTXCERT_INEQUALITY_H

#include <array>
#include <string>
#include <vector>

#include "ctxcert/report.h"
#include "ctxcert/scenario.h"

namespace ctxcert {

/// Measurement columns of a pentagon table.
inline constexpr size_t kColumnX = 0;
inline constexpr size_t kColumnZ = 1;
inline constexpr size_t kColumnW = 2;

struct XYPoint {
    double x = 0;
    double y = 0;

    friend bool operator==(const XYPoint &, const XYPoint &) = default;
};

/// One labelling of the pentagon: which preparations play P_a, P_b, P_alpha,
/// P_beta, P_gamma, and which columns give the x and y coordinates.
struct PentagonCase {
    size_t case_id = 0;
    std::array<size_t, 5> ordering{};  // (a, b, alpha, beta, gamma)
    AxisSource x;
    AxisSource y;

    size_t a() const { return ordering[0]; }
    size_t b() const { return ordering[1]; }
    size_t alpha() const { return ordering[2]; }
    size_t beta() const { return ordering[3]; }
    size_t gamma() const { return ordering[4]; }
};

/// (2 prob0 - 1) on the case's x and y columns, negated where flipped.
XYPoint xy_coords(const RealTable &t, const PentagonCase &c, size_t i);
XYPoint xy_coords(const RealTable &t, const AxisSource &x, const AxisSource &y, size_t i);

inline constexpr double kAnalyticTolerance = 1e-12;

/// True iff every cyclically consecutive triple turns right by more than
/// `tolerance` (cross product below -tolerance).
bool clockwise_convex(const XYPoint &q1, const XYPoint &q2, const XYPoint &q3, const XYPoint &q4,
                      double tolerance = kAnalyticTolerance);

/// det of the rows (x_a, y_a, x_a + y_a - 1, 1), (x_g, y_g, -x_g + y_g + 1, 1),
/// (x_i, y_i, x_i - y_i + 1, 1), (x_b, y_b, -x_b - y_b - 1, 1).
double v_determinant(const XYPoint &pa, const XYPoint &pg, const XYPoint &pi, const XYPoint &pb);

/// The five labellings, in the order a = 1, 2, 3, 4, 0.
std::vector<PentagonCase> pentagon_cases();

struct PentagonOptions {
    double tolerance = 1e-9;
};

/// Evaluates every case of a five-preparation table with columns (X, Z, W).
/// For each ordering the case's own axis choice is tried first, then the
/// axis choices of the other cases; the first one that yields a convex
/// clockwise quadrilateral with both determinants positive is reported.
/// CONTEXTUAL iff all five cases are violated and at most one measurement
/// is unknown.
CertificationReport certify_pentagon(const RealTable &t, const PentagonOptions &options = {});

/// CSV with header "case,prep,x,y": the coordinates of every preparation
/// under each case's reported axes.
std::string pentagon_plot_csv(const RealTable &t, const CertificationReport &report);

}  // namespace ctxcert

#endif
