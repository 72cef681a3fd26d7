#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bkk/bigint.hpp"

namespace bkk {

using Coord = std::int64_t;
using Point = std::vector<Coord>;

/// Largest ambient dimension accepted by convex_hull.
inline constexpr std::size_t kMaxHullDimension = 8;

/// A finite set of pairwise distinct lattice points in Z^n.
class PointConfiguration {
public:
    PointConfiguration() = default;

    /// Throws DimensionError on inconsistent lengths, PreconditionError on
    /// repeated points.
    PointConfiguration(std::size_t dimension, std::vector<Point> points);

    /// Drops repeated points (first occurrence wins) instead of rejecting them.
    static PointConfiguration deduplicated(std::size_t dimension, std::vector<Point> points);

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    const std::vector<Point>& points() const noexcept { return points_; }
    const Point& operator[](std::size_t i) const { return points_[i]; }

    std::size_t index_of(const Point& p) const;  // size() when absent
    bool contains(const Point& p) const { return index_of(p) != size(); }

    PointConfiguration translated(const Point& v) const;

    friend bool operator==(const PointConfiguration&, const PointConfiguration&) = default;

private:
    std::size_t dimension_ = 0;
    std::vector<Point> points_;
};

/// Facet inequality normal . y >= offset, with a primitive inner normal.
struct Facet {
    BigVector normal;
    BigInt offset;
};

/// Convex hull of a configuration. Vertices are listed counter-clockwise from
/// the lexicographic minimum in the plane and lexicographically otherwise.
/// Facets are only reported for full-dimensional hulls.
struct LatticePolytope {
    PointConfiguration source;
    std::size_t ambient_dimension = 0;
    std::size_t affine_dimension = 0;
    std::vector<Point> vertices;
    std::vector<Facet> facets;

    bool full_dimensional() const noexcept { return affine_dimension == ambient_dimension; }
};

/// Sub-configuration minimizing w . y.
struct Face {
    BigVector normal;
    std::vector<Point> points;
};

std::size_t affine_dimension(const std::vector<Point>& pts);
inline std::size_t affine_dimension(const PointConfiguration& a) { return affine_dimension(a.points()); }

LatticePolytope convex_hull(const PointConfiguration& a);

Face face(const PointConfiguration& a, const BigVector& w);
Face face(const PointConfiguration& a, const std::vector<Coord>& w);

/// Pairwise vertex sums, deduplicated (the hull of this set is the sum).
PointConfiguration minkowski_sum_points(const PointConfiguration& a, const PointConfiguration& b);
PointConfiguration minkowski_sum_points(const std::vector<PointConfiguration>& summands);

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

/// n! times the Euclidean volume of Conv(A); zero for lower-dimensional hulls.
BigInt normalized_volume(const PointConfiguration& a);

Rational euclidean_volume(const PointConfiguration& a);

BigInt factorial(std::size_t n);

}  // namespace bkk
