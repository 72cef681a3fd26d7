#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bkk/bigint.hpp"
#include "bkk/geometry.hpp"
#include "bkk/polynomial_system.hpp"

namespace bkk {

/// Product of total degrees. Square systems only.
BigInt bezout_bound(const PolynomialSystem& f);

/// Permanent of d[i][j] = degree of f_i in x_j (one variable per block).
BigInt multigraded_bound(const PolynomialSystem& f);

BigInt kushnirenko_bound(const PointConfiguration& a);

/// Mixed volume of the supports. Square systems only.
BigInt bkk_bound(const PolynomialSystem& f, std::uint64_t seed = 0);

enum class ComponentBranch { fewer_equations, at_least_as_many_equations };

const char* branch_name(ComponentBranch b) noexcept;

struct ComponentBound {
    BigInt value;
    ComponentBranch branch;
};

/// Bound on the number of connected components of the zero set in C^n.
/// k < n: Vol({O, e_1..e_n} and every support). k >= n: each support is
/// zero-padded into Z^k and the bound is M({O, e_1} + A_1, ..., {O, e_k} + A_k),
/// with + meaning union.
ComponentBound component_bound(const PolynomialSystem& f, std::uint64_t seed = 0);

/// A_1 x {0} together with A_i x {e_{i-1}} for i >= 2, in Z^{n+k-1}.
PointConfiguration cayley_configuration(const std::vector<PointConfiguration>& inputs);

/// Every applicable bound. The Bezout, multigraded and BKK fields are set for
/// square systems only.
struct BoundReport {
    std::size_t equations = 0;
    std::size_t variables = 0;
    std::optional<BigInt> bezout;
    std::optional<BigInt> multigraded;
    BigInt kushnirenko_union;
    std::optional<BigInt> bkk;
    BigInt component_bound;
    ComponentBranch branch = ComponentBranch::fewer_equations;
};

BoundReport bound_report(const PolynomialSystem& f, std::uint64_t seed = 0);

}  // namespace bkk
