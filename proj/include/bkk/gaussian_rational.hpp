#pragma once

#include <complex>

#include "bkk/bigint.hpp"

namespace bkk {

using Complex = std::complex<double>;

/// Exact complex number with rational real and imaginary parts.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianRational inverse() const;
    /// Integer power; negative exponents use the reciprocal. Exponents beyond
    /// 2^20 in absolute value raise RangeError.
    GaussianRational pow(const BigInt& exponent) const;
    Complex to_complex() const { return {re.get_d(), im.get_d()}; }

    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

}  // namespace bkk
