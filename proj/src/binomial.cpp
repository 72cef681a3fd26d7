#include "bkk/binomial.hpp"

#include <cmath>
#include <numbers>

#include "bkk/error.hpp"

namespace bkk {

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw PreconditionError("inverse of zero");
    Rational norm = re * re + im * im;
    return {re / norm, -im / norm};
}

GaussianRational GaussianRational::pow(const BigInt& exponent) const {
    if (abs(exponent) > (BigInt(1) << 20)) throw RangeError("exact power exponent too large: " + exponent.get_str());
    long e = exponent.get_si();
    GaussianRational base = e < 0 ? inverse() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    GaussianRational acc{Rational(1), Rational(0)};
    while (k) {
        if (k & 1UL) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

namespace {

void check_square(const IntegerMatrix& e, std::size_t constants) {
    if (!e.square()) throw DimensionError("binomial exponent matrix must be square");
    if (constants != e.rows()) throw DimensionError("one constant per binomial is required");
}

LogComplex principal_log(Complex c) {
    const long double re = c.real();
    const long double im = c.imag();
    return {std::log(std::hypot(re, im)), std::atan2(im, re)};
}

long double to_ld(const BigInt& v) { return static_cast<long double>(v.get_d()); }

// Reduce the imaginary part into (-pi, pi].
LogComplex principal(LogComplex z) {
    constexpr long double two_pi = 2 * std::numbers::pi_v<long double>;
    long double im = z.imag() - two_pi * std::round(z.imag() / two_pi);
    if (im <= -std::numbers::pi_v<long double>) im += two_pi;
    if (im > std::numbers::pi_v<long double>) im -= two_pi;
    return {z.real(), im};
}

Complex checked_exp(LogComplex z) {
    if (!(std::fabs(z.real()) < 700.0L)) throw RangeError("root magnitude overflows double precision");
    const long double m = std::exp(z.real());
    return {static_cast<double>(m * std::cos(z.imag())), static_cast<double>(m * std::sin(z.imag()))};
}

}  // namespace

BinomialSystem::BinomialSystem(IntegerMatrix exponents, std::vector<GaussianRational> constants)
    : exponents_(std::move(exponents)), mode_(ConstantMode::exact), exact_(std::move(constants)) {
    check_square(exponents_, exact_.size());
    for (const auto& c : exact_)
        if (c.is_zero()) throw PreconditionError("binomial constants must be nonzero");
}

BinomialSystem::BinomialSystem(IntegerMatrix exponents, std::vector<Complex> constants)
    : exponents_(std::move(exponents)), mode_(ConstantMode::floating), numeric_(std::move(constants)) {
    check_square(exponents_, numeric_.size());
    for (const auto& c : numeric_)
        if (c == Complex(0.0, 0.0)) throw PreconditionError("binomial constants must be nonzero");
}

std::vector<Complex> BinomialSystem::numeric_constants() const {
    if (mode_ == ConstantMode::floating) return numeric_;
    std::vector<Complex> out;
    for (const auto& c : exact_) out.push_back(c.to_complex());
    return out;
}

RootCount count_torus_roots(const IntegerMatrix& exponents) {
    BigInt d = determinant(exponents);
    if (d == 0) return {false, 0};
    return {true, abs(d)};
}

Complex TriangularBinomialSystem::constant(std::size_t i) const { return checked_exp(log_constants.at(i)); }

TriangularBinomialSystem triangularize(const BinomialSystem& system) {
    const auto hf = hermite_factorization(system.exponents());
    TriangularBinomialSystem t;
    t.U = hf.U;
    t.H = hf.H;
    t.mode = system.mode();
    const std::size_t n = system.dimension();
    const auto numeric = system.numeric_constants();
    std::vector<LogComplex> logs;
    for (const auto& c : numeric) logs.push_back(principal_log(c));
    for (std::size_t i = 0; i < n; ++i) {
        LogComplex acc{0, 0};
        for (std::size_t j = 0; j < n; ++j) acc += to_ld(t.U(i, j)) * logs[j];
        t.log_constants.push_back(acc);
        if (t.mode == ConstantMode::exact) {
            GaussianRational prod{Rational(1), Rational(0)};
            for (std::size_t j = 0; j < n; ++j)
                if (t.U(i, j) != 0) prod = prod * system.exact_constants()[j].pow(t.U(i, j));
            t.exact_constants.push_back(std::move(prod));
        }
    }
    return t;
}

std::vector<Root> solve_triangular(const TriangularBinomialSystem& t) {
    const std::size_t n = t.H.rows();
    BigInt total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (t.H(i, i) == 0) throw PreconditionError("triangular system is singular");
        total *= abs(t.H(i, i));
    }
    if (total > kMaxEnumeratedRoots) throw RangeError("refusing to enumerate " + total.get_str() + " roots");

    constexpr long double two_pi = 2 * std::numbers::pi_v<long double>;
    // Partial solutions hold log x_j for j = i+1..n-1, stored back to front.
    std::vector<std::vector<LogComplex>> partial{{}};
    for (std::size_t i = n; i-- > 0;) {
        const long d = to_int64(t.H(i, i));
        std::vector<std::vector<LogComplex>> next;
        next.reserve(partial.size() * static_cast<std::size_t>(d));
        for (const auto& sol : partial) {
            LogComplex rhs = t.log_constants[i];
            for (std::size_t j = i + 1; j < n; ++j) {
                const LogComplex& xj = sol[n - 1 - j];
                rhs -= to_ld(t.H(i, j)) * xj;
            }
            rhs = principal(rhs);
            for (long k = 0; k < d; ++k) {
                auto extended = sol;
                extended.push_back((rhs + LogComplex(0, two_pi * static_cast<long double>(k))) /
                                   static_cast<long double>(d));
                next.push_back(std::move(extended));
            }
        }
        partial = std::move(next);
    }

    std::vector<Root> roots;
    roots.reserve(partial.size());
    for (const auto& sol : partial) {
        Root x(n);
        for (std::size_t j = 0; j < n; ++j) x[j] = checked_exp(sol[n - 1 - j]);
        roots.push_back(std::move(x));
    }
    return roots;
}

RootEnumeration enumerate_roots(const BinomialSystem& system, RootMode mode) {
    if (!count_torus_roots(system.exponents()).finite)
        throw PreconditionError("exponent matrix is singular: the root set is not finite");
    RootEnumeration out{triangularize(system), {}};
    if (mode == RootMode::numeric) out.roots = solve_triangular(out.triangular);
    return out;
}

namespace {

std::complex<long double> int_pow(std::complex<long double> z, const BigInt& exponent) {
    long e = to_int64(exponent);
    if (e < 0) {
        z = 1.0L / z;
        e = -e;
    }
    std::complex<long double> acc = 1;
    while (e) {
        if (e & 1) acc *= z;
        z *= z;
        e >>= 1;
    }
    return acc;
}

}  // namespace

double binomial_residual(const IntegerMatrix& exponents, const std::vector<Complex>& constants, const Root& x) {
    if (x.size() != exponents.cols() || constants.size() != exponents.rows())
        throw DimensionError("residual shape mismatch");
    long double worst = 0;
    for (std::size_t i = 0; i < exponents.rows(); ++i) {
        std::complex<long double> v = 1;
        for (std::size_t j = 0; j < exponents.cols(); ++j)
            if (exponents(i, j) != 0) v *= int_pow(std::complex<long double>(x[j]), exponents(i, j));
        worst = std::max(worst, std::abs(v - std::complex<long double>(constants[i])));
    }
    return static_cast<double>(worst);
}

ToricIdeal toric_ideal_binomials(const PointConfiguration& a) {
    if (a.empty()) throw PreconditionError("toric ideal of an empty configuration");
    const std::size_t n = a.dimension();
    const std::size_t count = a.size();
    IntegerMatrix e(count, n);
    IntegerMatrix homogenized(count, n + 1);
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            e(i, j) = to_big(a[i][j]);
            homogenized(i, j) = e(i, j);
        }
        homogenized(i, n) = 1;
    }
    const auto hf = hermite_factorization(homogenized);
    ToricIdeal out;
    out.rank = hf.rank;
    out.degree = hermite_factorization(e).pivot_product;
    for (std::size_t i = hf.rank; i < count; ++i) {
        BinomialRelation rel{BigVector(count, BigInt(0)), BigVector(count, BigInt(0))};
        for (std::size_t j = 0; j < count; ++j) {
            const BigInt& u = hf.U(i, j);
            if (u > 0) rel.plus[j] = u;
            if (u < 0) rel.minus[j] = -u;
        }
        out.relations.push_back(std::move(rel));
    }
    return out;
}

}  // namespace bkk
