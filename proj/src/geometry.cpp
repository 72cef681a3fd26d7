#include "bkk/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "bkk/error.hpp"
#include "bkk/exact_linear.hpp"
#include "bkk/planar.hpp"
#include "placing.hpp"

namespace bkk {

PointConfiguration::PointConfiguration(std::size_t dimension, std::vector<Point> points)
    : dimension_(dimension), points_(std::move(points)) {
    for (const auto& p : points_)
        if (p.size() != dimension_) throw DimensionError("point length differs from configuration dimension");
    std::vector<const Point*> sorted;
    sorted.reserve(points_.size());
    for (const auto& p : points_) sorted.push_back(&p);
    std::sort(sorted.begin(), sorted.end(), [](const Point* a, const Point* b) { return *a < *b; });
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (*sorted[i] == *sorted[i - 1]) throw PreconditionError("point configuration contains a repeated point");
}

PointConfiguration PointConfiguration::deduplicated(std::size_t dimension, std::vector<Point> points) {
    std::set<Point> seen;
    std::vector<Point> unique;
    unique.reserve(points.size());
    for (auto& p : points)
        if (seen.insert(p).second) unique.push_back(std::move(p));
    return PointConfiguration(dimension, std::move(unique));
}

std::size_t PointConfiguration::index_of(const Point& p) const {
    auto it = std::find(points_.begin(), points_.end(), p);
    return static_cast<std::size_t>(it - points_.begin());
}

PointConfiguration PointConfiguration::translated(const Point& v) const {
    if (v.size() != dimension_) throw DimensionError("translation vector length mismatch");
    std::vector<Point> pts = points_;
    for (auto& p : pts)
        for (std::size_t i = 0; i < dimension_; ++i) p[i] += v[i];
    return PointConfiguration(dimension_, std::move(pts));
}

BigInt factorial(std::size_t n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

namespace {

std::vector<BigVector> to_big_points(const std::vector<Point>& pts) {
    std::vector<BigVector> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(to_big(p));
    return out;
}

std::vector<planar::Vec2> to_vec2(const std::vector<Point>& pts) {
    std::vector<planar::Vec2> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back({p[0], p[1]});
    return out;
}

std::vector<std::size_t> identity_order(std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    return order;
}

LatticePolytope hull_1d(const PointConfiguration& a) {
    LatticePolytope out{a, 1, 0, {}, {}};
    auto [lo, hi] = std::minmax_element(a.points().begin(), a.points().end());
    out.vertices.push_back(*lo);
    if (*hi != *lo) {
        out.vertices.push_back(*hi);
        out.affine_dimension = 1;
        out.facets.push_back({{BigInt(1)}, to_big((*lo)[0])});
        out.facets.push_back({{BigInt(-1)}, -to_big((*hi)[0])});
    }
    return out;
}

LatticePolytope hull_2d(const PointConfiguration& a) {
    LatticePolytope out{a, 2, 0, {}, {}};
    const auto h = planar::hull(to_vec2(a.points()));
    for (const auto& v : h) out.vertices.push_back({v.x, v.y});
    out.affine_dimension = h.size() >= 3 ? 2 : h.size() - 1;
    if (out.affine_dimension == 2) {
        for (std::size_t i = 0; i < h.size(); ++i) {
            const auto e = h[(i + 1) % h.size()] - h[i];
            BigVector normal = primitive({to_big(-e.y), to_big(e.x)});
            BigInt offset = normal[0] * to_big(h[i].x) + normal[1] * to_big(h[i].y);
            out.facets.push_back({std::move(normal), std::move(offset)});
        }
    }
    return out;
}

LatticePolytope hull_full(const PointConfiguration& a) {
    const std::size_t n = a.dimension();
    const auto pts = to_big_points(a.points());
    const auto tri = detail::placing_triangulation(pts);

    LatticePolytope out{a, n, n, {}, {}};
    std::map<BigVector, BigInt> unique_facets;
    for (const auto& f : tri.boundary) unique_facets.emplace(f.normal, f.offset);
    for (auto& [normal, offset] : unique_facets) out.facets.push_back({normal, offset});

    std::set<std::size_t> candidates;
    for (const auto& f : tri.boundary) candidates.insert(f.vertices.begin(), f.vertices.end());
    for (std::size_t idx : candidates) {
        std::vector<BigVector> tight;
        for (const auto& f : out.facets)
            if (dot(f.normal, pts[idx]) == f.offset) tight.push_back(f.normal);
        if (tight.size() >= n && rank(IntegerMatrix::from_rows(tight, n)) == n) out.vertices.push_back(a[idx]);
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

}  // namespace

std::size_t affine_dimension(const std::vector<Point>& pts) {
    if (pts.empty()) return 0;
    const auto big = to_big_points(pts);
    return detail::affine_basis(big, identity_order(big.size())).size() - 1;
}

LatticePolytope convex_hull(const PointConfiguration& a) {
    if (a.empty()) throw PreconditionError("convex hull of an empty configuration");
    const std::size_t n = a.dimension();
    if (n == 0) throw DimensionError("configuration in dimension zero");
    if (n == 2) return hull_2d(a);
    if (n > kMaxHullDimension) throw DimensionError("convex hull is limited to dimension 8");
    if (n == 1) return hull_1d(a);

    const auto big = to_big_points(a.points());
    const auto basis = detail::affine_basis(big, identity_order(big.size()));
    const std::size_t r = basis.size() - 1;
    if (r == n) return hull_full(a);

    LatticePolytope out{a, n, r, {}, {}};
    if (r == 0) {
        out.vertices.push_back(a[0]);
        return out;
    }
    // Project onto r coordinates on which the affine hull maps bijectively.
    std::vector<BigVector> diffs;
    for (std::size_t i = 1; i <= r; ++i) {
        BigVector d(n);
        for (std::size_t j = 0; j < n; ++j) d[j] = big[basis[i]][j] - big[basis[0]][j];
        diffs.push_back(std::move(d));
    }
    const auto hf = hermite_factorization(IntegerMatrix::from_rows(diffs, n));
    std::vector<Point> projected;
    projected.reserve(a.size());
    for (const auto& p : a.points()) {
        Point q;
        for (std::size_t c : hf.pivot_columns) q.push_back(p[c]);
        projected.push_back(std::move(q));
    }
    const PointConfiguration pc(r, std::move(projected));
    const auto sub = convex_hull(pc);
    for (const auto& v : sub.vertices) out.vertices.push_back(a[pc.index_of(v)]);
    if (r != 2) std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

Face face(const PointConfiguration& a, const BigVector& w) {
    if (w.size() != a.dimension()) throw DimensionError("face normal length differs from configuration dimension");
    if (std::all_of(w.begin(), w.end(), [](const BigInt& x) { return x == 0; }))
        throw PreconditionError("face normal must be nonzero");
    Face out{w, {}};
    BigInt best;
    for (const auto& p : a.points()) {
        BigInt v = dot(w, to_big(p));
        if (out.points.empty() || v < best) {
            best = v;
            out.points.clear();
            out.points.push_back(p);
        } else if (v == best) {
            out.points.push_back(p);
        }
    }
    return out;
}

Face face(const PointConfiguration& a, const std::vector<Coord>& w) { return face(a, to_big(w)); }

PointConfiguration minkowski_sum_points(const PointConfiguration& a, const PointConfiguration& b) {
    if (a.dimension() != b.dimension()) throw DimensionError("Minkowski summands live in different dimensions");
    const auto va = convex_hull(a).vertices;
    const auto vb = convex_hull(b).vertices;
    std::vector<Point> sums;
    sums.reserve(va.size() * vb.size());
    for (const auto& p : va)
        for (const auto& q : vb) {
            Point s(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) s[i] = p[i] + q[i];
            sums.push_back(std::move(s));
        }
    return PointConfiguration::deduplicated(a.dimension(), std::move(sums));
}

PointConfiguration minkowski_sum_points(const std::vector<PointConfiguration>& summands) {
    if (summands.empty()) throw PreconditionError("empty Minkowski sum");
    PointConfiguration acc = summands.front();
    for (std::size_t i = 1; i < summands.size(); ++i) acc = minkowski_sum_points(acc, summands[i]);
    return acc;
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.ambient_dimension != q.ambient_dimension) throw DimensionError("Minkowski summands live in different dimensions");
    if (p.ambient_dimension == 2) {
        const auto sum = planar::minkowski(to_vec2(p.vertices), to_vec2(q.vertices));
        std::vector<Point> pts;
        for (const auto& v : sum) pts.push_back({v.x, v.y});
        return convex_hull(PointConfiguration(2, std::move(pts)));
    }
    return convex_hull(minkowski_sum_points(PointConfiguration(p.ambient_dimension, p.vertices),
                                            PointConfiguration(q.ambient_dimension, q.vertices)));
}

BigInt normalized_volume(const PointConfiguration& a) {
    if (a.empty()) return 0;
    const std::size_t n = a.dimension();
    if (n == 1) {
        auto [lo, hi] = std::minmax_element(a.points().begin(), a.points().end());
        return to_big((*hi)[0]) - to_big((*lo)[0]);
    }
    if (n == 2) return planar::twice_area(planar::hull(to_vec2(a.points())));
    const auto big = to_big_points(a.points());
    if (detail::affine_basis(big, identity_order(big.size())).size() != n + 1) return 0;
    return detail::placing_triangulation(big).normalized_volume;
}

Rational euclidean_volume(const PointConfiguration& a) {
    Rational v(normalized_volume(a), factorial(a.dimension()));
    v.canonicalize();
    return v;
}

}  // namespace bkk
