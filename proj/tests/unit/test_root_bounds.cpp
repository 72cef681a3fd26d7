#include <doctest.h>

#include "bkk/error.hpp"
#include "bkk/mixed_volume.hpp"
#include "bkk/root_bounds.hpp"
#include "oracles.hpp"

using namespace bkk;

namespace {

using Terms = std::vector<std::pair<Exponent, long>>;

Polynomial poly(std::size_t n, const Terms& terms) {
    Polynomial f(n);
    for (const auto& [e, c] : terms) f.add_term(e, {Rational(c), 0});
    return f;
}

// Twelve-point support in Z^3 with normalized volume 321.
const std::vector<Exponent> kTwelve{{0, 0, 0}, {1, 0, 0}, {0, 2, 0}, {0, 0, 3}, {5, 6, 7}, {6, 7, 5},
                                   {7, 5, 6}, {8, 9, 9}, {10, 9, 9}, {9, 8, 9}, {9, 10, 9}, {9, 9, 10}};

PolynomialSystem twelve_point_system() {
    std::vector<Polynomial> fs;
    for (long k = 1; k <= 3; ++k) {
        Terms t;
        for (std::size_t i = 0; i < kTwelve.size(); ++i) t.push_back({kTwelve[i], static_cast<long>(i) * k + 1});
        fs.push_back(poly(3, t));
    }
    return PolynomialSystem(3, fs);
}

PolynomialSystem example_pair() {
    return PolynomialSystem(2, {poly(2, {{{0, 0}, -2}, {{2, 0}, 1}, {{0, 1}, -3}, {{7, 5}, 5}, {{6, 7}, 4}}),
                                poly(2, {{{0, 0}, 3}, {{2, 0}, 2}, {{0, 1}, 1}, {{7, 5}, 4}, {{6, 7}, 2}})});
}

}  // namespace

TEST_CASE("Bezout bound") {
    CHECK(bezout_bound(twelve_point_system()) == 21952);
    CHECK(bezout_bound(example_pair()) == 169);
    CHECK(bezout_bound(PolynomialSystem(2, {poly(2, {{{1, 0}, 1}, {{0, 1}, 2}, {{0, 0}, 3}}),
                                            poly(2, {{{1, 0}, 4}, {{0, 1}, 5}})})) == 1);
    CHECK_THROWS_AS(bezout_bound(PolynomialSystem(2, {poly(2, {{{1, 0}, 1}})})), DimensionError);
}

TEST_CASE("multigraded bound") {
    CHECK(multigraded_bound(twelve_point_system()) == 6000);
    CHECK(multigraded_bound(example_pair()) == 98);
    CHECK(multigraded_bound(PolynomialSystem(2, {poly(2, {{{4, 0}, 1}, {{0, 0}, 1}}), poly(2, {{{0, 3}, 1}, {{0, 0}, 1}})})) ==
          12);
    CHECK_THROWS_AS(multigraded_bound(PolynomialSystem(2, {poly(2, {{{1, 0}, 1}})})), DimensionError);
}

TEST_CASE("Kushnirenko bound") {
    CHECK(kushnirenko_bound(example_pair()[0].support()) == 35);
    CHECK(kushnirenko_bound(twelve_point_system()[0].support()) == 321);
    CHECK(kushnirenko_bound(PointConfiguration(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 1);
}

TEST_CASE("BKK bound") {
    CHECK(bkk_bound(example_pair()) == 35);
    CHECK(bkk_bound(twelve_point_system()) == 321);
    const PolynomialSystem boxes(2, {poly(2, {{{0, 0}, 1}, {{2, 0}, 2}, {{0, 3}, 3}, {{2, 3}, 4}}),
                                     poly(2, {{{0, 0}, 5}, {{5, 0}, 6}, {{0, 7}, 7}, {{5, 7}, 8}})});
    CHECK(bkk_bound(boxes) == 29);
    const PolynomialSystem binomials(3, {poly(3, {{{1, 7, 7}, 1}, {{0, 0, 0}, -2}}), poly(3, {{{6, 4, 9}, 1}, {{1, 0, 0}, -3}}),
                                         poly(3, {{{2, 3, 2}, 1}, {{0, 1, 1}, -5}})});
    CHECK(bkk_bound(binomials) == abs(determinant(IntegerMatrix{{1, 7, 7}, {5, 4, 9}, {2, 2, 1}})));
    CHECK_THROWS_AS(bkk_bound(PolynomialSystem(2, {poly(2, {{{1, 0}, 1}})})), DimensionError);
}

TEST_CASE("component bound") {
    const PolynomialSystem curve(2, {poly(2, {{{2, 1}, 1}, {{0, 0}, -1}})});
    const auto c = component_bound(curve);
    CHECK(c.branch == ComponentBranch::fewer_equations);
    CHECK(c.value == 3);
    CHECK(c.value == oracle::gift_wrap_twice_area({{0, 0}, {1, 0}, {0, 1}, {2, 1}}));

    const auto pair = component_bound(example_pair());
    CHECK(pair.branch == ComponentBranch::at_least_as_many_equations);
    CHECK(pair.value >= kushnirenko_bound(example_pair()[0].support()));

    const PolynomialSystem univariate(1, {poly(1, {{{2}, 1}, {{0}, 1}}), poly(1, {{{3}, 1}, {{0}, -1}})});
    const auto u = component_bound(univariate);
    CHECK(u.branch == ComponentBranch::at_least_as_many_equations);
    const PointConfiguration a1(2, {{0, 0}, {1, 0}, {2, 0}});
    const PointConfiguration a2(2, {{0, 0}, {0, 1}, {3, 0}});
    CHECK(u.value == mixed_volume_ie({a1, a2}).value);

    const PolynomialSystem full(2, {poly(2, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{3, 2}, 1}}),
                                    poly(2, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{1, 4}, 1}})});
    CHECK(component_bound(full).value == bkk_bound(full));
}

TEST_CASE("Cayley configuration") {
    const PointConfiguration a(1, {{0}, {1}});
    CHECK(cayley_configuration({a}) == a);
    const auto c = cayley_configuration({a, PointConfiguration(1, {{0}, {2}})});
    CHECK(c.dimension() == 2);
    CHECK(c.points() == std::vector<Point>{{0, 0}, {1, 0}, {0, 1}, {2, 1}});
    const PointConfiguration p(2, {{0, 0}, {2, 0}, {0, 1}, {7, 5}, {6, 7}});
    const PointConfiguration q(2, {{0, 0}, {1, 1}});
    const auto pq = cayley_configuration({p, q});
    CHECK(pq.dimension() == 3);
    CHECK(pq.size() == 7);
    for (const auto& x : pq.points()) CHECK((x[2] == 0 || x[2] == 1));
    const auto three = cayley_configuration({p, q, q});
    CHECK(three.dimension() == 4);
    CHECK(three[6] == Point{1, 1, 1, 0});
    CHECK(three[8] == Point{1, 1, 0, 1});
    CHECK_THROWS_AS(cayley_configuration({}), PreconditionError);
    CHECK_THROWS_AS(cayley_configuration({p, a}), DimensionError);
}

TEST_CASE("bound reports") {
    const auto r = bound_report(twelve_point_system());
    CHECK(r.bezout == BigInt(21952));
    CHECK(r.multigraded == BigInt(6000));
    CHECK(r.kushnirenko_union == 321);
    CHECK(r.bkk == BigInt(321));
    CHECK(r.branch == ComponentBranch::at_least_as_many_equations);

    const auto e = bound_report(example_pair());
    CHECK(e.bezout == BigInt(169));
    CHECK(e.multigraded == BigInt(98));
    CHECK(e.kushnirenko_union == 35);
    CHECK(e.bkk == BigInt(35));

    const auto u = bound_report(PolynomialSystem(1, {poly(1, {{{3}, 1}, {{0}, -1}})}));
    CHECK(u.bezout == BigInt(3));
    CHECK(u.kushnirenko_union == 3);

    const auto under = bound_report(PolynomialSystem(2, {poly(2, {{{2, 1}, 1}, {{0, 0}, -1}})}));
    CHECK_FALSE(under.bezout);
    CHECK_FALSE(under.bkk);
    CHECK(under.component_bound == 3);
}

TEST_CASE("unmixed square systems: BKK equals Kushnirenko") {
    oracle::Rng rng(8);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = t % 3 == 0 ? 3 : 2;
        const auto a = oracle::random_configuration(rng, n, static_cast<std::size_t>(oracle::uniform(rng, 1, 8)), 5);
        std::vector<Polynomial> fs;
        for (std::size_t i = 0; i < n; ++i) {
            Terms terms;
            for (const auto& p : a.points()) terms.push_back({p, oracle::uniform(rng, 1, 9)});
            fs.push_back(poly(n, terms));
        }
        const PolynomialSystem f(n, fs);
        CHECK(bkk_bound(f) == kushnirenko_bound(a));
        CHECK(bound_report(f).kushnirenko_union == bkk_bound(f));
    }
}
