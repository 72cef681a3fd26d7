#include "bkk/root_bounds.hpp"

#include <set>

#include "bkk/error.hpp"
#include "bkk/exact_linear.hpp"
#include "bkk/mixed_volume.hpp"

namespace bkk {

namespace {

void require_square(const PolynomialSystem& f, const char* what) {
    if (!f.square())
        throw DimensionError(std::string(what) + " needs a square system, got " + std::to_string(f.size()) + " equations in " +
                             std::to_string(f.num_vars()) + " variables");
}

PointConfiguration union_of_supports(const PolynomialSystem& f) {
    std::set<Point> pts;
    for (const auto& a : f.supports()) pts.insert(a.points().begin(), a.points().end());
    return PointConfiguration(f.num_vars(), {pts.begin(), pts.end()});
}

}  // namespace

BigInt bezout_bound(const PolynomialSystem& f) {
    require_square(f, "the Bezout bound");
    BigInt out = 1;
    for (const auto& g : f.polynomials()) out *= to_big(g.total_degree());
    return out;
}

BigInt multigraded_bound(const PolynomialSystem& f) {
    require_square(f, "the multigraded bound");
    const std::size_t n = f.num_vars();
    IntegerMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d(i, j) = to_big(f[i].degree_in(j));
    return permanent(d);
}

BigInt kushnirenko_bound(const PointConfiguration& a) { return normalized_volume(a); }

BigInt bkk_bound(const PolynomialSystem& f, std::uint64_t seed) {
    require_square(f, "the BKK bound");
    return mixed_volume(f.supports(), MixedVolumeStrategy::automatic, seed).value;
}

const char* branch_name(ComponentBranch b) noexcept {
    return b == ComponentBranch::fewer_equations ? "k<n" : "k>=n";
}

ComponentBound component_bound(const PolynomialSystem& f, std::uint64_t seed) {
    const std::size_t n = f.num_vars();
    const std::size_t k = f.size();
    if (k < n) {
        std::set<Point> pts;
        pts.insert(Point(n, 0));
        for (std::size_t j = 0; j < n; ++j) {
            Point e(n, 0);
            e[j] = 1;
            pts.insert(e);
        }
        for (const auto& a : f.supports()) pts.insert(a.points().begin(), a.points().end());
        return {normalized_volume(PointConfiguration(n, {pts.begin(), pts.end()})), ComponentBranch::fewer_equations};
    }
    std::vector<PointConfiguration> augmented;
    for (std::size_t i = 0; i < k; ++i) {
        std::set<Point> pts;
        pts.insert(Point(k, 0));
        Point e(k, 0);
        e[i] = 1;
        pts.insert(e);
        const auto support = f[i].support();
        for (const auto& p : support.points()) {
            Point q(k, 0);
            std::copy(p.begin(), p.end(), q.begin());
            pts.insert(q);
        }
        augmented.emplace_back(k, std::vector<Point>(pts.begin(), pts.end()));
    }
    return {mixed_volume(augmented, MixedVolumeStrategy::automatic, seed).value, ComponentBranch::at_least_as_many_equations};
}

PointConfiguration cayley_configuration(const std::vector<PointConfiguration>& inputs) {
    if (inputs.empty()) throw PreconditionError("Cayley configuration of an empty tuple");
    const std::size_t n = inputs.front().dimension();
    const std::size_t k = inputs.size();
    std::vector<Point> pts;
    for (std::size_t i = 0; i < k; ++i) {
        if (inputs[i].dimension() != n) throw DimensionError("configurations live in different dimensions");
        for (const auto& p : inputs[i].points()) {
            Point q = p;
            q.resize(n + k - 1, 0);
            if (i > 0) q[n + i - 1] = 1;
            pts.push_back(std::move(q));
        }
    }
    return PointConfiguration(n + k - 1, std::move(pts));
}

BoundReport bound_report(const PolynomialSystem& f, std::uint64_t seed) {
    BoundReport r;
    r.equations = f.size();
    r.variables = f.num_vars();
    if (f.square()) {
        r.bezout = bezout_bound(f);
        r.multigraded = multigraded_bound(f);
        r.bkk = bkk_bound(f, seed);
    }
    r.kushnirenko_union = kushnirenko_bound(union_of_supports(f));
    auto c = component_bound(f, seed);
    r.component_bound = c.value;
    r.branch = c.branch;
    return r;
}

}  // namespace bkk
