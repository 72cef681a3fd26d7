#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bkk/bigint.hpp"

// Integer planar primitives shared by the 2D hull, the edge-merge Minkowski
// sum and the strip mixed-area algorithm. Coordinates are bounded by
// kCoordinateLimit in absolute value so every cross product fits in 128 bits.
namespace bkk::planar {

inline constexpr std::int64_t kCoordinateLimit = std::int64_t{1} << 61;

struct Vec2 {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend bool operator==(Vec2, Vec2) = default;
    friend auto operator<=>(Vec2, Vec2) = default;
};

inline __int128 cross(Vec2 a, Vec2 b) {
    return static_cast<__int128>(a.x) * b.y - static_cast<__int128>(a.y) * b.x;
}

/// Throws RangeError if any coordinate is outside the supported range.
void check_range(std::span<const Vec2> pts);

/// Strict "comes before" on edge directions, measured counter-clockwise from
/// just past the downward direction. Edges of a convex polygon listed
/// counter-clockwise from its lexicographically smallest vertex are sorted
/// by this order.
bool angle_less(Vec2 a, Vec2 b);

/// Convex hull vertices, counter-clockwise from the lexicographic minimum,
/// without collinear boundary points. Degenerate inputs yield one or two
/// vertices.
std::vector<Vec2> hull(std::vector<Vec2> pts);

/// Edge vectors of a hull polygon (a two-vertex hull has two opposite edges).
std::vector<Vec2> edges(const std::vector<Vec2>& polygon);

/// Minkowski sum of two hulls by merging their edge sequences by angle.
std::vector<Vec2> minkowski(const std::vector<Vec2>& p, const std::vector<Vec2>& q);

/// Strictly convex lattice polygon with exactly `vertices` vertices (at least
/// 3), counter-clockwise from the lexicographic minimum. Built from random
/// primitive edge vectors with pairwise distinct directions and entries in
/// [-max_step, max_step], closed by one extra edge. Deterministic in `seed`.
std::vector<Vec2> random_convex_polygon(std::size_t vertices, std::uint64_t seed, std::int64_t max_step = 1000);

/// Twice the Euclidean area of a counter-clockwise polygon.
BigInt twice_area(const std::vector<Vec2>& polygon);

}  // namespace bkk::planar
