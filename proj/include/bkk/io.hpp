#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bkk/bigint.hpp"
#include "bkk/binomial.hpp"
#include "bkk/exact_linear.hpp"
#include "bkk/geometry.hpp"
#include "bkk/polynomial_system.hpp"

// JSON documents read and written by the command-line tool. Integers may be
// JSON numbers or decimal strings; coefficients are exact decimals or p/q
// fractions. Every parser throws ParseError on malformed input.
namespace bkk::io {

using Json = nlohmann::json;

Json read_file(const std::string& path);

BigInt parse_integer(const Json& j);
/// "12", "-0.125", "3e-2", "7/3".
Rational parse_rational(const std::string& text);
/// [re, im], or a single real value.
GaussianRational parse_coefficient(const Json& j);

/// {"entries": [[...], ...]}
IntegerMatrix parse_matrix(const Json& j);

struct SystemDocument {
    std::vector<std::string> variables;
    PolynomialSystem system;
};

/// {"variables": [...], "polynomials": [[{"exponents": [...], "coeff": [re, im]}, ...], ...]}
SystemDocument parse_system(const Json& j);

struct PointsDocument {
    PointConfiguration points;
    std::optional<std::vector<Coord>> lifts;
};

/// {"dimension": n, "points": [[...], ...], "lifts": [...]}; "lifts" is optional.
PointsDocument parse_points(const Json& j);

/// {"exponent_matrix": [[...]], "constants": [[re, im], ...]} for x^{a_i} = c_i,
/// or a system document in which every polynomial has exactly two terms
/// (c_a x^a + c_b x^b = 0 becomes x^{a-b} = -c_b / c_a).
BinomialSystem parse_binomial(const Json& j);

/// Numbers when the value fits in 64 bits, decimal strings otherwise.
Json to_json(const BigInt& v);
Json to_json(const BigVector& v);
Json to_json(const IntegerMatrix& m);
Json to_json(const Rational& q);
Json to_json(const GaussianRational& c);
Json to_json(const PointConfiguration& a, const std::optional<std::vector<Coord>>& lifts = std::nullopt);
Json to_json(const SystemDocument& doc);

}  // namespace bkk::io
