#include "bkk/bigint.hpp"

#include <limits>

#include "bkk/error.hpp"

namespace bkk {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::dimension: return "dimension_error";
        case ErrorCode::precondition: return "precondition_error";
        case ErrorCode::range: return "range_error";
        case ErrorCode::genericity: return "genericity_error";
        case ErrorCode::parse: return "parse_error";
        case ErrorCode::internal: return "internal_error";
    }
    return "unknown_error";
}

std::int64_t to_int64(const BigInt& v) {
    static const BigInt lo = to_big(std::numeric_limits<std::int64_t>::min());
    static const BigInt hi = to_big(std::numeric_limits<std::int64_t>::max());
    if (v < lo || v > hi) throw RangeError("integer " + v.get_str() + " does not fit in 64 bits");
    if (v.fits_slong_p()) return v.get_si();
    // long is narrower than 64 bits on this platform: go through the string.
    return std::stoll(v.get_str());
}

BigVector to_big(const std::vector<std::int64_t>& v) {
    BigVector out;
    out.reserve(v.size());
    for (auto x : v) out.push_back(to_big(x));
    return out;
}

BigVector primitive(BigVector v) {
    BigInt g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0 || g == 1) return v;
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

BigInt dot(const BigVector& a, const BigVector& b) {
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
    return s;
}

}  // namespace bkk
