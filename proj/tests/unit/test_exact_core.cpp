#include <doctest.h>

#include "hypermod/ball.hpp"
#include "hypermod/qfield.hpp"
#include "hypermod/rational.hpp"

using namespace hypermod;

TEST_CASE("rational helpers") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(5, 7) == 0);
    CHECK(factorial(20) == Integer("2432902008176640000"));
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(to_string(Rational(3, 28)) == "3/28");
    CHECK(is_integer(make_rational(8, 4)));
    CHECK_FALSE(is_integer(Rational(1, 4)));
}

TEST_CASE("polynomial evaluation and derivative") {
    RatPoly p{Rational(1), Rational(-4)};
    CHECK(poly_eval(p, Rational(1, 8)) == Rational(1, 2));
    RatPoly d = poly_derivative(RatPoly{1, 2, 3});
    CHECK(d == RatPoly{2, 6});
}

TEST_CASE("golden ratio power in Q(sqrt5)") {
    QuadFieldElem a(5, 1, -1, 1);  // sqrt5 - 1
    QuadFieldElem v = pow(a, 8) * Rational(1, 1 << 20);
    CHECK(v == QuadFieldElem(5, 1, Rational(47, 8192), Rational(-21, 8192)));
}

TEST_CASE("square in Q(sqrt2, sqrt3)") {
    QuadFieldElem a(2, 3, 0, -21, 20, 0);  // 20 sqrt3 - 21 sqrt2
    CHECK(a * a == QuadFieldElem(2, 3, 2082, 0, 0, -840));
}

TEST_CASE("field inverse, norm and conjugates") {
    QuadFieldElem a(2, 3, Rational(1, 4), Rational(3, 4), Rational(-3, 4), 0);
    QuadFieldElem one = QuadFieldElem::rational(2, 3, 1);
    CHECK(a * a.inverse() == one);
    Rational n = a.norm();
    CHECK(a * a.conjugate(1) * a.conjugate(2) * a.conjugate(1).conjugate(2) == QuadFieldElem::rational(2, 3, n));
    CHECK_THROWS_AS(a + QuadFieldElem(5, 1, 1), FieldTagMismatch);
    CHECK_THROWS(QuadFieldElem(2, 3).inverse());
}

TEST_CASE("embedding between fields") {
    QuadFieldElem s5(5, 1, 0, 1);
    QuadFieldElem e = s5.embed(3, 5);
    CHECK(e * e == QuadFieldElem::rational(3, 5, 5));
}

TEST_CASE("balls enclose exact values") {
    Ball third = Ball::from_rational(Rational(1, 3), 80);
    CHECK(third.contains(Rational(1, 3)));
    CHECK(third.width() < ten_pow(-20));

    Ball two = Ball::exact(2);
    Ball r = sqrt(two, 100);
    CHECK(r.lower() < Rational(14142135623731, 10000000000000) + ten_pow(-13));
    CHECK(mul(r, r, 100).contains(Rational(2)));

    Ball x = qf_to_ball(QuadFieldElem(2, 1, 1, 1), 64);  // 1 + sqrt2
    CHECK(x.overlaps(add(r, Ball::exact(1), 100)));
    CHECK(x.width() <= Rational(1, 1L << 58));
}

TEST_CASE("ball domain errors") {
    CHECK_THROWS_AS(pow_halfint(Ball::exact(-1), 3, 64), BallDomainError);
    CHECK_THROWS_AS(sqrt(Ball::exact(-4), 64), BallDomainError);
    CHECK_THROWS(div(Ball::exact(1), Ball::exact(0), 64));
}

TEST_CASE("ball arithmetic dispatch matches direct calls") {
    Ball a = Ball::from_rational(Rational(7, 5), 64), b = Ball::from_rational(Rational(-2, 3), 64);
    CHECK(ball_arith(a, b, BallOp::mul, 64).overlaps(mul(a, b, 64)));
    CHECK(ball_arith(a, b, BallOp::pow_halfint, 64, 3).contains(Rational(0)) == false);
    CHECK(digits_to_bits(50) > 166);
    CHECK(ten_pow(-3) == Rational(1, 1000));
}
