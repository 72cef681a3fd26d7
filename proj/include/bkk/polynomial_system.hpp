#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "bkk/gaussian_rational.hpp"
#include "bkk/geometry.hpp"

namespace bkk {

using Exponent = std::vector<std::int64_t>;

/// Sparse polynomial as exponent vector -> nonzero exact coefficient.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

    /// Adds c x^e, merging with an existing term; zero results are dropped.
    Polynomial& add_term(const Exponent& e, const GaussianRational& c);

    std::size_t num_vars() const noexcept { return num_vars_; }
    const std::map<Exponent, GaussianRational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    PointConfiguration support() const;
    std::int64_t total_degree() const;
    std::int64_t degree_in(std::size_t var) const;

private:
    std::size_t num_vars_ = 0;
    std::map<Exponent, GaussianRational> terms_;
};

struct NewtonData {
    PointConfiguration support;
    LatticePolytope polytope;
};

/// Support and Newton polytope. Throws PreconditionError for the zero polynomial.
NewtonData newton_data(const Polynomial& f);

/// k polynomials in n variables with nonnegative exponents.
class PolynomialSystem {
public:
    PolynomialSystem(std::size_t num_vars, std::vector<Polynomial> polynomials);

    std::size_t num_vars() const noexcept { return num_vars_; }
    std::size_t size() const noexcept { return polynomials_.size(); }
    bool square() const noexcept { return size() == num_vars_; }
    const std::vector<Polynomial>& polynomials() const noexcept { return polynomials_; }
    const Polynomial& operator[](std::size_t i) const { return polynomials_[i]; }

    std::vector<PointConfiguration> supports() const;

private:
    std::size_t num_vars_;
    std::vector<Polynomial> polynomials_;
};

}  // namespace bkk
