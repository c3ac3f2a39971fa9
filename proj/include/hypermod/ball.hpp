#pragma once
// Midpoint-radius real balls with dyadic endpoints.
//
// Midpoints are rounded to a caller-chosen number of bits; the rounding error
// is always folded into the radius, and radii are only ever rounded upward.

#include <stdexcept>
#include <string>

#include "hypermod/qfield.hpp"
#include "hypermod/rational.hpp"

namespace hypermod {

struct BallDomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// man * 2^exp
struct Dyadic {
    Integer man = 0;
    long exp = 0;

    Dyadic() = default;
    Dyadic(Integer m, long e) : man(std::move(m)), exp(e) {}
    explicit Dyadic(long v) : man(v), exp(0) {}

    Rational to_rational() const;
    int sign() const { return sgn(man); }
};

enum class Round { down, up, nearest };

Dyadic dy_add(const Dyadic& a, const Dyadic& b);
Dyadic dy_sub(const Dyadic& a, const Dyadic& b);
Dyadic dy_mul(const Dyadic& a, const Dyadic& b);
Dyadic dy_abs(Dyadic a);
int dy_cmp(const Dyadic& a, const Dyadic& b);
Dyadic dy_round(const Dyadic& a, long bits, Round r);
Dyadic dy_div(const Dyadic& a, const Dyadic& b, long bits, Round r);  // b > 0 for directed modes
Dyadic dy_sqrt(const Dyadic& a, long bits, Round r);                  // a >= 0
Dyadic dy_from_rational(const Rational& q, long bits, Round r);

class Ball {
public:
    Ball() = default;
    Ball(Dyadic mid, Dyadic rad);

    static Ball exact(const Integer& v) { return Ball(Dyadic(v, 0), Dyadic()); }
    static Ball from_rational(const Rational& q, long prec);

    const Dyadic& mid() const { return mid_; }
    const Dyadic& rad() const { return rad_; }

    Rational mid_rational() const { return mid_.to_rational(); }
    Rational rad_rational() const { return rad_.to_rational(); }
    Rational lower() const { return mid_rational() - rad_rational(); }
    Rational upper() const { return mid_rational() + rad_rational(); }
    Rational width() const { return 2 * rad_rational(); }

    bool contains(const Rational& q) const;
    bool contains(const Ball& inner) const;
    bool overlaps(const Ball& o) const;
    bool is_positive() const { return sgn(lower()) > 0; }
    bool is_negative() const { return sgn(upper()) < 0; }
    bool excludes_zero() const { return is_positive() || is_negative(); }

    Ball operator-() const;

    // Decimal rendering of the midpoint with the radius in scientific form.
    std::string to_string(int digits = 20) const;

private:
    Dyadic mid_, rad_;
};

Ball add(const Ball& a, const Ball& b, long prec);
Ball sub(const Ball& a, const Ball& b, long prec);
Ball mul(const Ball& a, const Ball& b, long prec);
Ball div(const Ball& a, const Ball& b, long prec);
Ball sqrt(const Ball& a, long prec);
Ball pow(const Ball& a, long e, long prec);
// a^(num/2) for a strictly positive
Ball pow_halfint(const Ball& a, long num, long prec);

enum class BallOp { add, sub, mul, div, sqrt, pow_halfint };
// Unary ops ignore b; pow_halfint reads its exponent numerator from half_num.
Ball ball_arith(const Ball& a, const Ball& b, BallOp op, long prec, long half_num = 1);

// Adds guard bits until width <= 2^(3-prec) * max(1, |value|).
Ball qf_to_ball(const QuadFieldElem& a, long prec);

long digits_to_bits(long digits);
Rational ten_pow(long e);  // 10^e, e may be negative

}  // namespace hypermod
