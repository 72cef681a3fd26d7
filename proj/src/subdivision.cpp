#include "bkk/subdivision.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "bkk/error.hpp"
#include "placing.hpp"

namespace bkk {

LiftedConfiguration lift(const PointConfiguration& a, const LiftingFunction& omega) {
    if (omega.values.size() != a.size()) throw DimensionError("lifting function size differs from configuration size");
    std::vector<Point> pts;
    pts.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Point p = a[i];
        p.push_back(omega.values[i]);
        pts.push_back(std::move(p));
    }
    return {a, PointConfiguration(a.dimension() + 1, std::move(pts))};
}

bool SubdivisionCell::is_mixed() const {
    return std::all_of(type.begin(), type.end(), [](std::size_t d) { return d == 1; });
}

namespace {

std::vector<BigVector> lifted_points(const PointConfiguration& a, const LiftingFunction& omega) {
    std::vector<BigVector> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        BigVector p = to_big(a[i]);
        p.push_back(to_big(omega.values[i]));
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Point> lifted_face(const PointConfiguration& a, const std::vector<BigVector>& lifted, const BigVector& normal) {
    std::vector<Point> pts;
    BigInt best;
    for (std::size_t i = 0; i < lifted.size(); ++i) {
        BigInt v = dot(normal, lifted[i]);
        if (pts.empty() || v < best) {
            best = v;
            pts.clear();
            pts.push_back(a[i]);
        } else if (v == best) {
            pts.push_back(a[i]);
        }
    }
    return pts;
}

}  // namespace

MixedSubdivision induced_subdivision(const PointConfiguration& a, const LiftingFunction& omega) {
    return induced_mixed_subdivision({a}, {omega});
}

MixedSubdivision induced_mixed_subdivision(const std::vector<PointConfiguration>& inputs,
                                           const std::vector<LiftingFunction>& lifts) {
    if (inputs.empty()) throw PreconditionError("subdivision of an empty tuple");
    if (inputs.size() != lifts.size()) throw DimensionError("one lifting function per configuration is required");
    const std::size_t n = inputs.front().dimension();
    for (const auto& a : inputs) {
        if (a.dimension() != n) throw DimensionError("configurations live in different dimensions");
        if (a.empty()) throw PreconditionError("empty configuration");
    }

    MixedSubdivision out{inputs, lifts, {}};
    std::vector<std::vector<BigVector>> lifted;
    for (std::size_t i = 0; i < inputs.size(); ++i) lifted.push_back(lifted_points(inputs[i], lifts[i]));

    // All sums of lifted points, one from each configuration.
    std::set<BigVector> sums{BigVector(n + 1, BigInt(0))};
    for (const auto& li : lifted) {
        std::set<BigVector> next;
        for (const auto& s : sums)
            for (const auto& p : li) {
                BigVector t = s;
                for (std::size_t j = 0; j <= n; ++j) t[j] += p[j];
                next.insert(std::move(t));
            }
        sums = std::move(next);
    }
    std::vector<BigVector> pts(sums.begin(), sums.end());
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    const auto basis = detail::affine_basis(pts, order);

    // The base Minkowski sum must be full-dimensional to have any cells.
    {
        std::vector<BigVector> base;
        for (const auto& p : pts) base.emplace_back(p.begin(), p.end() - 1);
        if (detail::affine_basis(base, order).size() != n + 1) return out;
    }

    std::vector<BigVector> normals;
    if (basis.size() == n + 1) {
        // Lifted sum is flat: one cell, selected by the normal of its hyperplane.
        std::vector<BigVector> rows;
        for (std::size_t i = 1; i < basis.size(); ++i) {
            BigVector d(n + 1);
            for (std::size_t j = 0; j <= n; ++j) d[j] = pts[basis[i]][j] - pts[basis[0]][j];
            rows.push_back(std::move(d));
        }
        auto normal = detail::cofactor_normal(rows).first;
        if (normal[n] < 0)
            for (auto& x : normal) x = -x;
        normals.push_back(std::move(normal));
    } else {
        const auto tri = detail::placing_triangulation(pts);
        std::set<BigVector> lower;
        for (const auto& f : tri.boundary)
            if (f.normal[n] > 0) lower.insert(f.normal);
        normals.assign(lower.begin(), lower.end());
    }

    for (auto& normal : normals) {
        SubdivisionCell cell;
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            auto part = lifted_face(inputs[i], lifted[i], normal);
            cell.type.push_back(affine_dimension(part));
            cell.parts.push_back(std::move(part));
        }
        cell.witness = std::move(normal);
        out.cells.push_back(std::move(cell));
    }
    return out;
}

bool is_generic(const MixedSubdivision& s) {
    if (s.inputs.empty()) return true;
    const std::size_t n = s.inputs.front().dimension();
    for (const auto& cell : s.cells) {
        if (s.inputs.size() == 1) {
            if (cell.parts.front().size() != n + 1) return false;
        } else if (std::accumulate(cell.type.begin(), cell.type.end(), std::size_t{0}) != n) {
            return false;
        }
    }
    return true;
}

Coord default_lift_range(const std::vector<PointConfiguration>& inputs) {
    Coord total = 0;
    for (const auto& a : inputs) total += static_cast<Coord>(a.size());
    return std::max<Coord>(1, 4 * total * total);
}

MixedSubdivision certified_generic_subdivision(const std::vector<PointConfiguration>& inputs, std::uint64_t seed,
                                               Coord range) {
    if (range < 0) throw PreconditionError("lift range must be positive");
    if (range == 0) range = default_lift_range(inputs);
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kMaxLiftingAttempts; ++attempt) {
        std::uniform_int_distribution<Coord> dist(0, range);
        std::vector<LiftingFunction> lifts;
        for (const auto& a : inputs) {
            LiftingFunction f;
            f.provenance = LiftingFunction::Provenance::seeded_random;
            f.seed = seed;
            f.range = range;
            f.values.reserve(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) f.values.push_back(dist(rng));
            lifts.push_back(std::move(f));
        }
        auto s = induced_mixed_subdivision(inputs, lifts);
        if (is_generic(s)) return s;
        if (range > (Coord{1} << 56)) break;
        range *= 2;
    }
    throw GenericityError("no generic lifting found after " + std::to_string(kMaxLiftingAttempts) + " attempts");
}

std::vector<LiftingFunction> random_generic_lifting(const std::vector<PointConfiguration>& inputs,
                                                    std::uint64_t seed, Coord range) {
    return certified_generic_subdivision(inputs, seed, range).lifts;
}

PolynomialSystem lift_system(const PolynomialSystem& f, const std::vector<LiftingFunction>& lifts) {
    if (lifts.size() != f.size()) throw DimensionError("one lifting function per polynomial is required");
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto& terms = f[i].terms();
        if (lifts[i].values.size() != terms.size()) throw DimensionError("lifting function size differs from support size");
        Polynomial g(f.num_vars() + 1);
        std::size_t k = 0;
        for (const auto& [e, c] : terms) {
            const Coord w = lifts[i].values[k++];
            if (w < 0) throw PreconditionError("lifted exponents must be nonnegative");
            Exponent lifted = e;
            lifted.push_back(w);
            g.add_term(lifted, c);
        }
        out.push_back(std::move(g));
    }
    return PolynomialSystem(f.num_vars() + 1, std::move(out));
}

PolynomialSystem initial_term_system(const PolynomialSystem& f, const BigVector& w) {
    if (w.size() != f.num_vars()) throw DimensionError("weight length differs from variable count");
    if (std::all_of(w.begin(), w.end(), [](const BigInt& x) { return x == 0; }))
        throw PreconditionError("initial term weight must be nonzero");
    std::vector<Polynomial> out;
    for (const auto& g : f.polynomials()) {
        const auto selected = face(g.support(), w).points;
        Polynomial h(f.num_vars());
        for (const auto& e : selected) h.add_term(e, g.terms().at(e));
        out.push_back(std::move(h));
    }
    return PolynomialSystem(f.num_vars(), std::move(out));
}

}  // namespace bkk
