#include <doctest.h>

#include "bkk/error.hpp"
#include "bkk/io.hpp"

using namespace bkk;
using io::Json;

namespace {

std::string data(const std::string& name) { return std::string(BKK_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("exact decimal parsing") {
    CHECK(io::parse_rational("12") == 12);
    CHECK(io::parse_rational("-0.125") == Rational(-1, 8));
    CHECK(io::parse_rational("+3e-2") == Rational(3, 100));
    CHECK(io::parse_rational("1.5E3") == 1500);
    CHECK(io::parse_rational("7/3") == Rational(7, 3));
    CHECK(io::parse_rational(".5") == Rational(1, 2));
    CHECK(io::parse_rational("0.1") == Rational(1, 10));
    for (const char* bad : {"", "-", "1.2.3", "abc", "1/0", "1e", "3/x", "1e9999999"})
        CHECK_THROWS_AS(io::parse_rational(bad), ParseError);
}

TEST_CASE("integers and coefficients") {
    CHECK(io::parse_integer(Json(-42)) == -42);
    CHECK(io::parse_integer(Json("123456789012345678901234567890")) == BigInt("123456789012345678901234567890"));
    CHECK(io::parse_integer(Json("+7")) == 7);
    CHECK_THROWS_AS(io::parse_integer(Json(1.5)), ParseError);
    CHECK_THROWS_AS(io::parse_integer(Json("1.5")), ParseError);
    CHECK(io::parse_coefficient(Json::array({"1/2", "-3"})) == GaussianRational{Rational(1, 2), -3});
    CHECK(io::parse_coefficient(Json(0.25)) == GaussianRational{Rational(1, 4), 0});
    CHECK_THROWS_AS(io::parse_coefficient(Json::array({"1"})), ParseError);
}

TEST_CASE("matrix documents") {
    const auto m = io::parse_matrix(io::read_file(data("hermite_matrix.json")));
    CHECK(m == IntegerMatrix{{1, 7, 7, 4}, {6, 4, 9, 6}, {2, 3, 2, 6}, {6, 4, 8, 5}});
    CHECK(io::parse_matrix(io::to_json(m)) == m);
    CHECK_THROWS_AS(io::parse_matrix(Json::parse(R"({"entries": [[1, 2], [3]]})")), ParseError);
    CHECK_THROWS_AS(io::parse_matrix(Json::parse(R"({"rows": []})")), ParseError);
    IntegerMatrix big(1, 1);
    big(0, 0) = BigInt(1) << 100;
    CHECK(io::to_json(big)["entries"][0][0].is_string());
    CHECK(io::parse_matrix(io::to_json(big)) == big);
}

TEST_CASE("system documents") {
    const auto doc = io::parse_system(io::read_file(data("kushnirenko_system.json")));
    CHECK(doc.variables == std::vector<std::string>{"x", "y"});
    CHECK(doc.system.size() == 2);
    CHECK(doc.system[0].terms().at({7, 5}) == GaussianRational{5, 0});
    const auto again = io::parse_system(io::to_json(doc));
    CHECK(again.system.polynomials().size() == 2);
    CHECK(again.system[1].terms() == doc.system[1].terms());
    CHECK_THROWS_AS(io::parse_system(Json::parse(R"({"variables": ["x"], "polynomials": [[{"exponents": [1, 2], "coeff": ["1", "0"]}]]})")),
                    ParseError);
    CHECK_THROWS_AS(io::parse_system(Json::parse(R"({"variables": ["x"], "polynomials": [[{"exponents": [-1], "coeff": ["1", "0"]}]]})")),
                    ParseError);
    CHECK_THROWS_AS(io::parse_system(Json::parse(R"({"variables": ["x"], "polynomials": [[{"exponents": [1], "coeff": ["0", "0"]}]]})")),
                    ParseError);
    CHECK_THROWS_AS(io::read_file(data("missing.json")), ParseError);
}

TEST_CASE("points documents") {
    const auto doc = io::parse_points(io::read_file(data("pentagon.json")));
    CHECK(doc.points.size() == 5);
    REQUIRE(doc.lifts);
    CHECK(*doc.lifts == std::vector<Coord>{1, 0, 0, 0, 1});
    const auto again = io::parse_points(io::to_json(doc.points, doc.lifts));
    CHECK(again.points == doc.points);
    CHECK(again.lifts == doc.lifts);
    CHECK_THROWS_AS(io::parse_points(Json::parse(R"({"dimension": 2, "points": [[0, 0], [0, 0]]})")), ParseError);
    CHECK_THROWS_AS(io::parse_points(Json::parse(R"({"dimension": 2, "points": [[0, 0]], "lifts": [1, 2]})")), ParseError);
    CHECK_THROWS_AS(io::parse_points(Json::parse(R"({"dimension": 2, "points": [[0, "99999999999999999999"]]})")), ParseError);
}

TEST_CASE("binomial documents") {
    const auto b = io::parse_binomial(io::read_file(data("binomial_system.json")));
    CHECK(b.dimension() == 4);
    CHECK(b.exact_constants()[3] == GaussianRational{Rational(3, 2), 0});
    // 2x^2 y - 6 = 0 and y^3 + x = 0 give x^2 y = 3 and y^3 x^{-1} = -1.
    const auto s = io::parse_binomial(Json::parse(R"({"variables": ["x", "y"], "polynomials": [
        [{"exponents": [2, 1], "coeff": ["2", "0"]}, {"exponents": [0, 0], "coeff": ["-6", "0"]}],
        [{"exponents": [0, 3], "coeff": ["1", "0"]}, {"exponents": [1, 0], "coeff": ["1", "0"]}]]})"));
    const auto& e = s.exponents();
    const auto& c = s.exact_constants();
    const bool first_forward = e(0, 0) == 2;
    CHECK(c[0] == (first_forward ? GaussianRational{3, 0} : GaussianRational{Rational(1, 3), 0}));
    CHECK(c[1] == GaussianRational{-1, 0});
    CHECK(abs(determinant(e)) == 7);
    CHECK_THROWS_AS(io::parse_binomial(io::read_file(data("kushnirenko_system.json"))), ParseError);
}
