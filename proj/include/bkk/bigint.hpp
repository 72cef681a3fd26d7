#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bkk {

using BigInt = mpz_class;
using Rational = mpq_class;
using BigVector = std::vector<BigInt>;

inline BigInt to_big(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    BigInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
    BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
    BigInt r = (hi << 64) + lo;
    return neg ? BigInt(-r) : r;
}

inline BigInt to_big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

/// Throws RangeError when the value does not fit.
std::int64_t to_int64(const BigInt& v);

BigVector to_big(const std::vector<std::int64_t>& v);

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
BigVector primitive(BigVector v);

BigInt dot(const BigVector& a, const BigVector& b);

}  // namespace bkk
