#pragma once
// Truncated power series with exact rational coefficients.

#include <stdexcept>
#include <string>
#include <vector>

#include "hypermod/rational.hpp"

namespace hypermod {

struct SeriesError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class PowerSeries {
public:
    PowerSeries() : PowerSeries("x", 0) {}
    PowerSeries(std::string var, long order);  // zero series
    PowerSeries(std::string var, std::vector<Rational> coeffs);  // order = size - 1

    static PowerSeries constant(const std::string& var, long order, const Rational& c);
    static PowerSeries monomial(const std::string& var, long order, long k, const Rational& c = 1);
    static PowerSeries from_poly(const std::string& var, long order, const RatPoly& p);

    const std::string& var() const { return var_; }
    long order() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& operator[](long n) const { return c_[static_cast<size_t>(n)]; }
    Rational& operator[](long n) { return c_[static_cast<size_t>(n)]; }

    // Index of the first nonzero coefficient, or order+1 for the zero series.
    long valuation() const;
    bool is_zero() const { return valuation() > order(); }

    PowerSeries truncate(long order) const;
    PowerSeries with_var(const std::string& v) const;

    PowerSeries operator-() const;
    PowerSeries& operator*=(const Rational& q);

    bool operator==(const PowerSeries& o) const { return var_ == o.var_ && c_ == o.c_; }
    bool operator!=(const PowerSeries& o) const { return !(*this == o); }

private:
    std::string var_;
    std::vector<Rational> c_;
};

enum class SeriesOp { add, sub, mul, div };

PowerSeries ps_arith(const PowerSeries& a, const PowerSeries& b, SeriesOp op);
PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(PowerSeries a, const Rational& q);
PowerSeries operator*(const Rational& q, PowerSeries a);

PowerSeries ps_inverse(const PowerSeries& a);
// A(B) truncated at B's order; B(0) must be 0. Result takes B's variable.
PowerSeries ps_compose(const PowerSeries& a, const PowerSeries& b);
// A^e for A(0) = 1 and den(e) | 4.
PowerSeries ps_pow_rational(const PowerSeries& a, const Rational& e);
PowerSeries ps_pow_int(const PowerSeries& a, long e);
PowerSeries ps_derivative(const PowerSeries& a);
// Compositional inverse; needs B(0) = 0, B'(0) != 0.
PowerSeries ps_reversion(const PowerSeries& b);
// x with 4x(1-x) = X, x(0) = 0.
PowerSeries clausen_branch(const PowerSeries& X);

// Smallest index where a and b differ up to the shared order, or -1.
long first_difference(const PowerSeries& a, const PowerSeries& b);

std::string to_string(const PowerSeries& s, long terms = 6);

}  // namespace hypermod
