#pragma once
// Exact rationals and integers backed by GMP.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hypermod {

using Integer = mpz_class;
using Rational = mpq_class;

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

enum class ArithOp { add, sub, mul, div };

// Always canonical; throws DivisionByZero for x/0.
Rational rat_arith(const Rational& a, const Rational& b, ArithOp op);

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(const std::string& s);  // "a/b" or "a"
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer binomial(long n, long k);  // 0 outside 0 <= k <= n
Integer factorial(long n);

bool is_integer(const Rational& q);

// Integer-coefficient polynomial, ascending powers.
using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

RatPoly to_ratpoly(const IntPoly& p);
RatPoly poly_derivative(const RatPoly& p);
void poly_trim(RatPoly& p);

Rational poly_eval(const RatPoly& p, const Rational& x);

}  // namespace hypermod
