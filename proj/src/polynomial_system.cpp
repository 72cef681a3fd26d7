#include "bkk/polynomial_system.hpp"

#include <algorithm>
#include <numeric>

#include "bkk/error.hpp"

namespace bkk {

Polynomial& Polynomial::add_term(const Exponent& e, const GaussianRational& c) {
    if (e.size() != num_vars_) throw DimensionError("exponent length differs from variable count");
    if (c.is_zero()) return *this;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second.re += c.re;
        it->second.im += c.im;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

PointConfiguration Polynomial::support() const {
    std::vector<Point> pts;
    pts.reserve(terms_.size());
    for (const auto& [e, c] : terms_) pts.push_back(e);
    return PointConfiguration(num_vars_, std::move(pts));
}

std::int64_t Polynomial::total_degree() const {
    std::int64_t best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), std::int64_t{0}));
    return best;
}

std::int64_t Polynomial::degree_in(std::size_t var) const {
    std::int64_t best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, e.at(var));
    return best;
}

NewtonData newton_data(const Polynomial& f) {
    if (f.is_zero()) throw PreconditionError("Newton polytope of the zero polynomial");
    auto support = f.support();
    auto polytope = convex_hull(support);
    return {std::move(support), std::move(polytope)};
}

PolynomialSystem::PolynomialSystem(std::size_t num_vars, std::vector<Polynomial> polynomials)
    : num_vars_(num_vars), polynomials_(std::move(polynomials)) {
    if (polynomials_.empty()) throw PreconditionError("a polynomial system needs at least one polynomial");
    for (const auto& f : polynomials_) {
        if (f.num_vars() != num_vars_) throw DimensionError("polynomial variable count mismatch");
        if (f.is_zero()) throw PreconditionError("polynomial system contains the zero polynomial");
        for (const auto& [e, c] : f.terms())
            if (std::any_of(e.begin(), e.end(), [](std::int64_t x) { return x < 0; }))
                throw PreconditionError("polynomial exponents must be nonnegative");
    }
}

std::vector<PointConfiguration> PolynomialSystem::supports() const {
    std::vector<PointConfiguration> out;
    out.reserve(polynomials_.size());
    for (const auto& f : polynomials_) out.push_back(f.support());
    return out;
}

}  // namespace bkk
