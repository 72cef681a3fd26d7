#include "placing.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bkk/error.hpp"
#include "bkk/exact_linear.hpp"

namespace bkk::detail {

namespace {

BigVector diff(const BigVector& a, const BigVector& b) {
    BigVector d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

// Incremental fraction-free echelon basis used to test affine independence.
class EchelonBasis {
public:
    // Returns true and keeps v if it is independent of the stored rows.
    bool insert(BigVector v) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t c = pivots_[r];
            if (v[c] == 0) continue;
            BigInt a = rows_[r][c];
            BigInt b = v[c];
            for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] * a - rows_[r][j] * b;
            v = primitive(std::move(v));
        }
        std::size_t c = 0;
        while (c < v.size() && v[c] == 0) ++c;
        if (c == v.size()) return false;
        rows_.push_back(std::move(v));
        pivots_.push_back(c);
        return true;
    }

private:
    std::vector<BigVector> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace

std::vector<std::size_t> affine_basis(const std::vector<BigVector>& pts, const std::vector<std::size_t>& order) {
    std::vector<std::size_t> basis;
    if (order.empty()) return basis;
    basis.push_back(order.front());
    const BigVector& origin = pts[order.front()];
    EchelonBasis echelon;
    const std::size_t d = origin.size();
    for (std::size_t k = 1; k < order.size() && basis.size() <= d; ++k) {
        if (echelon.insert(diff(pts[order[k]], origin))) basis.push_back(order[k]);
    }
    return basis;
}

std::pair<BigVector, BigInt> cofactor_normal(const std::vector<BigVector>& rows) {
    const std::size_t d = rows.size() + 1;
    BigVector normal(d);
    for (std::size_t k = 0; k < d; ++k) {
        IntegerMatrix minor(d - 1, d - 1);
        for (std::size_t i = 0; i + 1 < d; ++i)
            for (std::size_t j = 0, jj = 0; j < d; ++j) {
                if (j == k) continue;
                minor(i, jj++) = rows[i][j];
            }
        BigInt det = determinant(minor);
        normal[k] = (k % 2 == 0) ? det : BigInt(-det);
    }
    BigInt g = 0;
    for (const auto& x : normal) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) throw InternalError("degenerate facet in hull construction");
    for (auto& x : normal) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return {std::move(normal), std::move(g)};
}

namespace {

HullFacet make_facet(const std::vector<BigVector>& pts, std::vector<std::size_t> verts, const BigVector& interior_sum,
                     std::size_t interior_weight) {
    std::sort(verts.begin(), verts.end());
    std::vector<BigVector> rows;
    rows.reserve(verts.size() - 1);
    for (std::size_t i = 1; i < verts.size(); ++i) rows.push_back(diff(pts[verts[i]], pts[verts[0]]));
    auto [normal, content] = cofactor_normal(rows);
    BigInt offset = dot(normal, pts[verts[0]]);
    // The interior reference point is interior_sum / interior_weight.
    if (dot(normal, interior_sum) < offset * static_cast<unsigned long>(interior_weight)) {
        for (auto& x : normal) x = -x;
        offset = -offset;
    }
    return {std::move(verts), std::move(normal), std::move(offset), std::move(content)};
}

}  // namespace

PlacingTriangulation placing_triangulation(const std::vector<BigVector>& pts) {
    if (pts.empty()) throw PreconditionError("hull of an empty point set");
    const std::size_t d = pts.front().size();
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });

    const auto basis = affine_basis(pts, order);
    if (basis.size() != d + 1) throw InternalError("placing triangulation needs a full-dimensional point set");

    PlacingTriangulation out;
    out.dimension = d;

    BigVector interior(d, BigInt(0));
    for (auto i : basis)
        for (std::size_t j = 0; j < d; ++j) interior[j] += pts[i][j];
    const std::size_t weight = d + 1;

    {
        IntegerMatrix m(d, d);
        for (std::size_t i = 1; i <= d; ++i)
            for (std::size_t j = 0; j < d; ++j) m(i - 1, j) = pts[basis[i]][j] - pts[basis[0]][j];
        out.normalized_volume = abs(determinant(m));
        auto s = basis;
        std::sort(s.begin(), s.end());
        out.simplices.push_back(std::move(s));
    }

    std::vector<HullFacet> facets;
    std::vector<bool> alive;
    for (std::size_t skip = 0; skip <= d; ++skip) {
        std::vector<std::size_t> verts;
        for (std::size_t i = 0; i <= d; ++i)
            if (i != skip) verts.push_back(basis[i]);
        facets.push_back(make_facet(pts, std::move(verts), interior, weight));
        alive.push_back(true);
    }

    std::vector<bool> in_basis(pts.size(), false);
    for (auto i : basis) in_basis[i] = true;

    std::vector<std::size_t> visible;
    for (std::size_t idx : order) {
        if (in_basis[idx]) continue;
        const BigVector& p = pts[idx];
        visible.clear();
        for (std::size_t f = 0; f < facets.size(); ++f) {
            if (alive[f] && dot(facets[f].normal, p) < facets[f].offset) visible.push_back(f);
        }
        if (visible.empty()) continue;

        std::map<std::vector<std::size_t>, int> ridges;
        for (std::size_t f : visible) {
            const HullFacet& hf = facets[f];
            auto simplex = hf.vertices;
            simplex.push_back(idx);
            std::sort(simplex.begin(), simplex.end());
            out.simplices.push_back(std::move(simplex));
            out.normalized_volume += hf.content * (hf.offset - dot(hf.normal, p));
            for (std::size_t drop = 0; drop < hf.vertices.size(); ++drop) {
                std::vector<std::size_t> ridge;
                ridge.reserve(hf.vertices.size() - 1);
                for (std::size_t t = 0; t < hf.vertices.size(); ++t)
                    if (t != drop) ridge.push_back(hf.vertices[t]);
                ++ridges[ridge];
            }
            alive[f] = false;
        }
        for (auto& [ridge, count] : ridges) {
            if (count != 1) continue;
            auto verts = ridge;
            verts.push_back(idx);
            facets.push_back(make_facet(pts, std::move(verts), interior, weight));
            alive.push_back(true);
        }

        // Compact once dead facets dominate.
        if (facets.size() > 64 && std::count(alive.begin(), alive.end(), true) * 2 < static_cast<long>(facets.size())) {
            std::vector<HullFacet> kept;
            for (std::size_t f = 0; f < facets.size(); ++f)
                if (alive[f]) kept.push_back(std::move(facets[f]));
            facets = std::move(kept);
            alive.assign(facets.size(), true);
        }
    }

    for (std::size_t f = 0; f < facets.size(); ++f)
        if (alive[f]) out.boundary.push_back(std::move(facets[f]));
    return out;
}

}  // namespace bkk::detail
