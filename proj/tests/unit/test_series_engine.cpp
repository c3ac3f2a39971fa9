#include <doctest.h>

#include "hypermod/series.hpp"

using namespace hypermod;

namespace {

PowerSeries poly(long N, std::initializer_list<long> c) {
    RatPoly p;
    for (long v : c) p.emplace_back(v);
    return PowerSeries::from_poly("p", N, p);
}

}  // namespace

TEST_CASE("half-integer power of a binomial") {
    PowerSeries s = ps_pow_rational(poly(5, {1, -4}), Rational(-5, 2));
    CHECK(s[0] == 1);
    CHECK(s[1] == 10);
    CHECK(s[2] == 70);
    CHECK(s[3] == 420);
}

TEST_CASE("quarter powers compose to the integer power") {
    PowerSeries a = poly(12, {1, 3, -2});
    PowerSeries q = ps_pow_rational(a, Rational(1, 4));
    CHECK(ps_pow_int(q, 4) == a);
    CHECK_THROWS_AS(ps_pow_rational(a, Rational(1, 3)), SeriesError);
}

TEST_CASE("inverse and division") {
    PowerSeries a = poly(20, {1, -1, 5});
    PowerSeries one = PowerSeries::constant("p", 20, 1);
    CHECK(a * ps_inverse(a) == one);
    CHECK((a * a) / a == a);
    CHECK_THROWS(ps_inverse(poly(5, {0, 1})));
}

TEST_CASE("composition and reversion") {
    PowerSeries b = poly(15, {0, 1, -3, 2});
    PowerSeries r = ps_reversion(b);
    CHECK(ps_compose(b, r) == PowerSeries::monomial("p", 15, 1));
    CHECK(ps_compose(r, b) == PowerSeries::monomial("p", 15, 1));
    CHECK_THROWS(ps_compose(b, poly(5, {1, 1})));
}

TEST_CASE("geometric series composed with a monomial") {
    PowerSeries geo("x", std::vector<Rational>(11, Rational(1)));
    PowerSeries arg = poly(10, {0, 0, 1});  // p^2
    PowerSeries c = ps_compose(geo, arg);
    for (long n = 0; n <= 10; ++n) CHECK(c[n] == (n % 2 == 0 ? 1 : 0));
    CHECK(c.var() == "p");
}

TEST_CASE("clausen branch solves 4x(1-x) = X") {
    PowerSeries X = poly(20, {0, 1, 7});
    PowerSeries x = clausen_branch(X);
    PowerSeries lhs = Rational(4) * x * (PowerSeries::constant("p", 20, 1) - x);
    CHECK(lhs == X);
}

TEST_CASE("derivative, valuation and first difference") {
    PowerSeries a = poly(6, {0, 0, 3, 1});
    CHECK(a.valuation() == 2);
    PowerSeries d = ps_derivative(a);
    CHECK(d[1] == 6);
    CHECK(d[2] == 3);
    PowerSeries b = a;
    b[5] = 1;
    CHECK(first_difference(a, b) == 5);
    CHECK(first_difference(a, a) == -1);
    CHECK(PowerSeries("p", 4).is_zero());
}

TEST_CASE("mixed variables are rejected") {
    CHECK_THROWS_AS(poly(3, {1, 1}) + PowerSeries("q", 3), SeriesError);
}
