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

#include "ctxcert/geometry.h"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "ctxcert/error.h"

namespace ctxcert {

void PointSet::validate() const {
    for (const auto &p : points) {
        if (p.size() != dimension) {
            throw Error("point set: every point must have length " + std::to_string(dimension));
        }
    }
}

PointSet PointSet::from_points(std::vector<Point> points) {
    PointSet s;
    s.dimension = points.empty() ? 0 : points.front().size();
    s.points = std::move(points);
    s.validate();
    return s;
}

bool ConvexCombination::is_valid(size_t family_size) const {
    if (indices.size() != weights.size() || indices.empty()) {
        return false;
    }
    std::vector<bool> seen(family_size, false);
    Rational total;
    for (size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] >= family_size || seen[indices[k]] || weights[k].sign() < 0) {
            return false;
        }
        seen[indices[k]] = true;
        total += weights[k];
    }
    return total == Rational(1);
}

std::vector<size_t> ConvexCombination::support() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < indices.size(); ++k) {
        if (weights[k].sign() > 0) {
            out.push_back(indices[k]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

RationalVector ConvexCombination::dense(size_t family_size) const {
    RationalVector out(family_size);
    for (size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] >= family_size) {
            throw Error("convex combination: index out of range");
        }
        out[indices[k]] += weights[k];
    }
    return out;
}

ConvexCombination ConvexCombination::from_dense(const RationalVector &weights) {
    ConvexCombination c;
    for (size_t i = 0; i < weights.size(); ++i) {
        if (!weights[i].is_zero()) {
            c.indices.push_back(i);
            c.weights.push_back(weights[i]);
        }
    }
    return c;
}

ConvexCombination ConvexCombination::uniform(size_t n) {
    ConvexCombination c;
    for (size_t i = 0; i < n; ++i) {
        c.indices.push_back(i);
        c.weights.push_back(Rational(1, static_cast<long>(n)));
    }
    return c;
}

Point combine(const PointSet &s, const ConvexCombination &c) {
    Point out(s.dimension);
    for (size_t k = 0; k < c.indices.size(); ++k) {
        if (c.indices[k] >= s.size()) {
            throw Error("combine: index out of range");
        }
        if (c.weights[k].is_zero()) {
            continue;
        }
        const Point &p = s.points[c.indices[k]];
        for (size_t j = 0; j < s.dimension; ++j) {
            out[j] += c.weights[k] * p[j];
        }
    }
    return out;
}

LpProblem hull_intersection_lp(const PointSet &a, const PointSet &b) {
    a.validate();
    b.validate();
    if (a.dimension != b.dimension) {
        throw Error("hulls_intersect: point sets live in different dimensions");
    }
    if (a.size() == 0 || b.size() == 0) {
        throw Error("hulls_intersect: both point sets must be nonempty");
    }
    const size_t d = a.dimension;
    const size_t na = a.size();
    const size_t nb = b.size();
    LpProblem lp{RationalMatrix(d + 2, na + nb), RationalVector(d + 2)};
    for (size_t j = 0; j < d; ++j) {
        for (size_t i = 0; i < na; ++i) {
            lp.A(j, i) = a.points[i][j];
        }
        for (size_t i = 0; i < nb; ++i) {
            lp.A(j, na + i) = -b.points[i][j];
        }
    }
    for (size_t i = 0; i < na; ++i) {
        lp.A(d, i) = 1;
    }
    for (size_t i = 0; i < nb; ++i) {
        lp.A(d + 1, na + i) = 1;
    }
    lp.b[d] = 1;
    lp.b[d + 1] = 1;
    return lp;
}

HullTest test_hulls(const PointSet &a, const PointSet &b) {
    LpProblem lp = hull_intersection_lp(a, b);
    FeasibilityResult r = lp_feasible(lp);
    HullTest out;
    if (!r.feasible()) {
        out.certificate = std::move(*r.certificate);
        return out;
    }
    HullIntersection w;
    for (size_t i = 0; i < a.size(); ++i) {
        w.first.indices.push_back(i);
        w.first.weights.push_back((*r.point)[i]);
    }
    for (size_t i = 0; i < b.size(); ++i) {
        w.second.indices.push_back(i);
        w.second.weights.push_back((*r.point)[a.size() + i]);
    }
    w.point = combine(a, w.first);
    out.witness = std::move(w);
    return out;
}

std::optional<HullIntersection> hulls_intersect(const PointSet &a, const PointSet &b) {
    return test_hulls(a, b).witness;
}

ConvexCombination caratheodory_reduce(const PointSet &s, const Point &x, const ConvexCombination &c) {
    s.validate();
    if (!c.is_valid(s.size())) {
        throw Error("caratheodory_reduce: weights are not a convex combination over the point set");
    }
    if (combine(s, c) != x) {
        throw Error("caratheodory_reduce: combination does not reproduce the target point");
    }
    const size_t target = affine_dimension(s.points) + 1;
    if (c.indices.size() <= target) {
        return c;
    }

    std::vector<std::pair<size_t, Rational>> support;
    for (size_t k = 0; k < c.indices.size(); ++k) {
        if (c.weights[k].sign() > 0) {
            support.emplace_back(c.indices[k], c.weights[k]);
        }
    }
    std::sort(support.begin(), support.end(), [](const auto &l, const auto &r) { return l.first < r.first; });

    while (support.size() > target) {
        // Columns (p_i, 1): a null vector is an affine dependence.
        RationalMatrix m(s.dimension + 1, support.size());
        for (size_t k = 0; k < support.size(); ++k) {
            const Point &p = s.points[support[k].first];
            for (size_t j = 0; j < s.dimension; ++j) {
                m(j, k) = p[j];
            }
            m(s.dimension, k) = 1;
        }
        std::vector<RationalVector> dependences = null_space(m);
        if (dependences.empty()) {
            throw std::logic_error("caratheodory_reduce: support is affinely independent but too large");
        }
        const RationalVector &alpha = dependences.front();

        // Largest step keeping all weights nonnegative; ties resolve to the
        // smallest point index because support is sorted by index.
        size_t arg = support.size();
        Rational step;
        for (size_t k = 0; k < support.size(); ++k) {
            if (alpha[k].sign() <= 0) {
                continue;
            }
            Rational ratio = support[k].second / alpha[k];
            if (arg == support.size() || ratio < step) {
                arg = k;
                step = ratio;
            }
        }
        if (arg == support.size()) {
            throw std::logic_error("caratheodory_reduce: affine dependence without a positive entry");
        }
        std::vector<std::pair<size_t, Rational>> next;
        for (size_t k = 0; k < support.size(); ++k) {
            Rational w = k == arg ? Rational(0) : support[k].second - step * alpha[k];
            if (w.sign() > 0) {
                next.emplace_back(support[k].first, std::move(w));
            }
        }
        support = std::move(next);
    }

    ConvexCombination out;
    for (auto &[i, w] : support) {
        out.indices.push_back(i);
        out.weights.push_back(w);
    }
    return out;
}

namespace {

ConvexCombination normalized_part(const RationalVector &diff, int sign, const Rational &total) {
    ConvexCombination c;
    for (size_t i = 0; i < diff.size(); ++i) {
        if (diff[i].sign() == sign) {
            c.indices.push_back(i);
            c.weights.push_back(diff[i].abs() / total);
        }
    }
    return c;
}

std::optional<DisjointDecomposition> try_decompose(const PointSet &s, const ConvexCombination &start) {
    const size_t n = s.size();
    const RationalVector c = start.dense(n);
    const Point x = combine(s, start);
    const RationalVector b = caratheodory_reduce(s, x, start).dense(n);

    RationalVector diff(n);
    Rational positive_total;
    for (size_t i = 0; i < n; ++i) {
        diff[i] = c[i] - b[i];
        if (diff[i].sign() > 0) {
            positive_total += diff[i];
        }
    }
    if (positive_total.is_zero()) {
        return std::nullopt;
    }
    ConvexCombination first = normalized_part(diff, +1, positive_total);
    ConvexCombination second = normalized_part(diff, -1, positive_total);
    DisjointDecomposition out;
    out.meeting_point = combine(s, first);
    out.first = caratheodory_reduce(s, out.meeting_point, first);
    out.second = caratheodory_reduce(s, out.meeting_point, second);
    if (combine(s, out.second) != out.meeting_point || combine(s, out.first) != out.meeting_point) {
        throw std::logic_error("disjoint_decomposition: sides do not meet");
    }
    return out;
}

}  // namespace

DisjointDecomposition disjoint_decomposition(const PointSet &s, const std::optional<ConvexCombination> &start) {
    s.validate();
    const size_t n = s.size();
    if (n < s.dimension + 2) {
        throw Error("disjoint_decomposition: need at least dimension + 2 = " + std::to_string(s.dimension + 2) +
                    " points, got " + std::to_string(n));
    }
    ConvexCombination initial = start.value_or(ConvexCombination::uniform(n));
    if (!initial.is_valid(n)) {
        throw Error("disjoint_decomposition: starting weights are not a convex combination");
    }

    std::vector<ConvexCombination> attempts{initial};
    RationalVector perturbed = initial.dense(n);
    const Rational eps(1, static_cast<long>(2 * n));
    if (perturbed.front() >= eps) {
        perturbed.front() -= eps;
        perturbed.back() += eps;
        attempts.push_back(ConvexCombination::from_dense(perturbed));
    }
    attempts.push_back(ConvexCombination::uniform(n));

    for (const auto &attempt : attempts) {
        if (auto d = try_decompose(s, attempt)) {
            return std::move(*d);
        }
    }
    throw std::logic_error("disjoint_decomposition: centroid start produced no decomposition");
}

namespace {

// Double description method for the cone { x : E x = 0, x >= 0 }.
class DoubleDescription {
   public:
    explicit DoubleDescription(size_t width) : width_(width), words_((width + 63) / 64) {}

    struct Ray {
        RationalVector v;
        std::vector<uint64_t> zeros;  // processed constraints tight at v
    };

    void add_line(RationalVector v) { lines_.push_back(std::move(v)); }

    void add_nonnegativity(size_t i) {
        // A line that is not tight on the new constraint becomes a ray, and
        // every other generator is projected onto the hyperplane x_i = 0.
        for (size_t l = 0; l < lines_.size(); ++l) {
            if (lines_[l][i].is_zero()) {
                continue;
            }
            RationalVector pivot = std::move(lines_[l]);
            lines_.erase(lines_.begin() + static_cast<std::ptrdiff_t>(l));
            if (pivot[i].sign() < 0) {
                for (auto &x : pivot) {
                    x = -x;
                }
            }
            for (auto &other : lines_) {
                eliminate(&other, pivot, i);
            }
            for (auto &r : rays_) {
                eliminate(&r.v, pivot, i);
                set_bit(&r.zeros, i);
            }
            Ray fresh{normalize(std::move(pivot)), processed_};
            rays_.push_back(std::move(fresh));
            mark_processed(i);
            return;
        }

        std::vector<size_t> positive, negative;
        std::vector<Ray> next;
        for (size_t k = 0; k < rays_.size(); ++k) {
            int s = rays_[k].v[i].sign();
            if (s > 0) {
                positive.push_back(k);
            } else if (s < 0) {
                negative.push_back(k);
            }
        }
        for (size_t k = 0; k < rays_.size(); ++k) {
            int s = rays_[k].v[i].sign();
            if (s == 0) {
                Ray r = rays_[k];
                set_bit(&r.zeros, i);
                next.push_back(std::move(r));
            } else if (s > 0) {
                next.push_back(rays_[k]);
            }
        }
        for (size_t p : positive) {
            for (size_t q : negative) {
                std::vector<uint64_t> common = intersect(rays_[p].zeros, rays_[q].zeros);
                if (!adjacent(common, p, q)) {
                    continue;
                }
                const Rational &hp = rays_[p].v[i];
                const Rational &hq = rays_[q].v[i];
                RationalVector v(width_);
                for (size_t j = 0; j < width_; ++j) {
                    v[j] = hp * rays_[q].v[j] - hq * rays_[p].v[j];
                }
                set_bit(&common, i);
                next.push_back(Ray{normalize(std::move(v)), std::move(common)});
            }
        }
        rays_ = std::move(next);
        mark_processed(i);
    }

    const std::vector<Ray> &rays() const { return rays_; }
    const std::vector<RationalVector> &lines() const { return lines_; }

   private:
    static void set_bit(std::vector<uint64_t> *bits, size_t i) { (*bits)[i / 64] |= uint64_t{1} << (i % 64); }

    void mark_processed(size_t i) { set_bit(&processed_, i); }

    std::vector<uint64_t> intersect(const std::vector<uint64_t> &a, const std::vector<uint64_t> &b) const {
        std::vector<uint64_t> out(words_);
        for (size_t w = 0; w < words_; ++w) {
            out[w] = a[w] & b[w];
        }
        return out;
    }

    bool adjacent(const std::vector<uint64_t> &common, size_t p, size_t q) const {
        for (size_t k = 0; k < rays_.size(); ++k) {
            if (k == p || k == q) {
                continue;
            }
            bool contains = true;
            for (size_t w = 0; w < words_ && contains; ++w) {
                contains = (common[w] & ~rays_[k].zeros[w]) == 0;
            }
            if (contains) {
                return false;
            }
        }
        return true;
    }

    static void eliminate(RationalVector *v, const RationalVector &pivot, size_t i) {
        if ((*v)[i].is_zero()) {
            return;
        }
        Rational f = (*v)[i] / pivot[i];
        for (size_t j = 0; j < v->size(); ++j) {
            if (!pivot[j].is_zero()) {
                (*v)[j] -= f * pivot[j];
            }
        }
    }

    // Scales to the primitive integer vector with the same direction.
    static RationalVector normalize(RationalVector v) {
        mpz_class lcm = 1;
        for (const auto &x : v) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.gmp().get_den_mpz_t());
        }
        mpz_class g = 0;
        std::vector<mpz_class> ints(v.size());
        for (size_t j = 0; j < v.size(); ++j) {
            ints[j] = v[j].numerator() * (lcm / v[j].denominator());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[j].get_mpz_t());
        }
        if (g == 0) {
            return v;
        }
        for (size_t j = 0; j < v.size(); ++j) {
            v[j] = Rational(mpq_class(ints[j] / g));
        }
        return v;
    }

    size_t width_;
    size_t words_;
    std::vector<uint64_t> processed_ = std::vector<uint64_t>(words_);
    std::vector<RationalVector> lines_;
    std::vector<Ray> rays_;
};

}  // namespace

PointSet enumerate_vertices(const HPolytope &p) {
    p.validate();
    const size_t n = p.variables();
    // Homogenize: x = (z, t) with A z - b t = 0, z >= 0, t >= 0.
    RationalMatrix homogeneous(p.constraints(), n + 1);
    for (size_t r = 0; r < p.constraints(); ++r) {
        for (size_t c = 0; c < n; ++c) {
            homogeneous(r, c) = p.A(r, c);
        }
        homogeneous(r, n) = -p.b[r];
    }
    DoubleDescription dd(n + 1);
    if (p.constraints() == 0) {
        for (size_t c = 0; c <= n; ++c) {
            RationalVector e(n + 1);
            e[c] = 1;
            dd.add_line(std::move(e));
        }
    } else {
        for (auto &v : null_space(homogeneous)) {
            dd.add_line(std::move(v));
        }
    }
    for (size_t i = 0; i <= n; ++i) {
        dd.add_nonnegativity(i);
    }
    if (!dd.lines().empty()) {
        throw Error("enumerate_vertices: polytope is unbounded (contains a line)");
    }

    PointSet out;
    out.dimension = n;
    bool recession = false;
    for (const auto &ray : dd.rays()) {
        const Rational &t = ray.v[n];
        if (t.is_zero()) {
            recession = true;
            continue;
        }
        Point z(ray.v.begin(), ray.v.begin() + static_cast<std::ptrdiff_t>(n));
        for (auto &x : z) {
            x /= t;
        }
        out.points.push_back(std::move(z));
    }
    if (recession && !out.points.empty()) {
        throw Error("enumerate_vertices: polytope is unbounded (has a recession direction)");
    }
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    return out;
}

}  // namespace ctxcert
