#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bkk/bigint.hpp"
#include "bkk/geometry.hpp"
#include "bkk/polynomial_system.hpp"

namespace bkk {

/// Integer lift value per point of a configuration, aligned with its point order.
struct LiftingFunction {
    enum class Provenance { explicit_values, seeded_random };

    std::vector<Coord> values;
    Provenance provenance = Provenance::explicit_values;
    std::uint64_t seed = 0;
    Coord range = 0;

    static LiftingFunction zero(const PointConfiguration& a) { return {std::vector<Coord>(a.size(), 0)}; }
};

struct LiftedConfiguration {
    PointConfiguration base;
    PointConfiguration lifted;  // points (a, omega(a)) in Z^{n+1}
};

LiftedConfiguration lift(const PointConfiguration& a, const LiftingFunction& omega);

/// One full-dimensional cell: parts[i] is the projection of the face of the
/// i-th lifted configuration selected by `witness`, a primitive inner normal
/// (w, c) of a lower facet of the lifted Minkowski sum with c > 0.
struct SubdivisionCell {
    std::vector<std::vector<Point>> parts;
    BigVector witness;
    std::vector<std::size_t> type;  // affine dimension of each part

    bool is_mixed() const;
};

struct MixedSubdivision {
    std::vector<PointConfiguration> inputs;
    std::vector<LiftingFunction> lifts;
    std::vector<SubdivisionCell> cells;  // ordered lexicographically by witness
};

MixedSubdivision induced_subdivision(const PointConfiguration& a, const LiftingFunction& omega);

MixedSubdivision induced_mixed_subdivision(const std::vector<PointConfiguration>& inputs,
                                           const std::vector<LiftingFunction>& lifts);

/// Single configuration: every cell is a simplex. Several configurations:
/// every cell satisfies sum_i dim parts[i] = n.
bool is_generic(const MixedSubdivision& s);

inline constexpr int kMaxLiftingAttempts = 32;

/// Default lift range 4 * (total number of points)^2.
Coord default_lift_range(const std::vector<PointConfiguration>& inputs);

/// Uniform integer lifts in [0, range], certified generic; on failure the
/// range doubles, for at most kMaxLiftingAttempts draws. Deterministic in
/// `seed`. range == 0 selects default_lift_range. Throws GenericityError
/// when every attempt fails.
MixedSubdivision certified_generic_subdivision(const std::vector<PointConfiguration>& inputs, std::uint64_t seed,
                                               Coord range = 0);

std::vector<LiftingFunction> random_generic_lifting(const std::vector<PointConfiguration>& inputs,
                                                    std::uint64_t seed, Coord range = 0);

/// Appends t^{omega_i(a)} to every term c_a x^a of f_i. Lifts must be nonnegative.
PolynomialSystem lift_system(const PolynomialSystem& f, const std::vector<LiftingFunction>& lifts);

/// Each polynomial restricted to the face of its support minimizing w.
PolynomialSystem initial_term_system(const PolynomialSystem& f, const BigVector& w);

}  // namespace bkk
