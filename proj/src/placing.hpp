#pragma once

#include <cstddef>
#include <vector>

#include "bkk/bigint.hpp"

// Exact convex hulls in arbitrary dimension by the placing (beneath-beyond)
// triangulation. Internal to the library.
namespace bkk::detail {

struct HullFacet {
    std::vector<std::size_t> vertices;  // sorted indices into the input
    BigVector normal;                   // primitive, inward
    BigInt offset;                      // normal . y >= offset on the hull
    BigInt content;                     // gcd stripped from the cofactor normal
};

struct PlacingTriangulation {
    std::size_t dimension = 0;
    std::vector<std::vector<std::size_t>> simplices;
    std::vector<HullFacet> boundary;
    BigInt normalized_volume = 0;
};

/// Indices of a maximal affinely independent subset, chosen greedily in the
/// given order.
std::vector<std::size_t> affine_basis(const std::vector<BigVector>& pts, const std::vector<std::size_t>& order);

/// Primitive vector orthogonal to the given d-1 vectors in R^d (cofactor
/// expansion), together with the gcd that was divided out.
std::pair<BigVector, BigInt> cofactor_normal(const std::vector<BigVector>& rows);

/// Requires the points to affinely span R^d with d = pts[0].size() >= 1.
PlacingTriangulation placing_triangulation(const std::vector<BigVector>& pts);

}  // namespace bkk::detail
