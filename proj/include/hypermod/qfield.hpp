#pragma once
// Elements of Q(sqrt d1, sqrt d2); d2 == 1 tags a single quadratic field.

#include <array>
#include <stdexcept>
#include <string>

#include "hypermod/rational.hpp"

namespace hypermod {

struct FieldTagMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class QuadFieldElem {
public:
    QuadFieldElem(long d1 = 2, long d2 = 1);
    QuadFieldElem(long d1, long d2, const Rational& c0, const Rational& c1 = 0,
                  const Rational& c2 = 0, const Rational& c3 = 0);

    static QuadFieldElem rational(long d1, long d2, const Rational& c) {
        return QuadFieldElem(d1, d2, c);
    }

    long d1() const { return d1_; }
    long d2() const { return d2_; }
    const std::array<Rational, 4>& coords() const { return c_; }
    const Rational& operator[](int i) const { return c_[i]; }

    bool is_zero() const;
    bool is_rational() const;
    bool same_field(const QuadFieldElem& o) const { return d1_ == o.d1_ && d2_ == o.d2_; }

    // Image under sqrt d1 -> -sqrt d1 (which=1) or sqrt d2 -> -sqrt d2 (which=2).
    QuadFieldElem conjugate(int which) const;
    QuadFieldElem inverse() const;
    // Product of all conjugates; a rational.
    Rational norm() const;

    QuadFieldElem operator-() const;
    QuadFieldElem& operator+=(const QuadFieldElem& o);
    QuadFieldElem& operator-=(const QuadFieldElem& o);
    QuadFieldElem& operator*=(const QuadFieldElem& o);
    QuadFieldElem& operator/=(const QuadFieldElem& o);
    QuadFieldElem& operator*=(const Rational& q);

    bool operator==(const QuadFieldElem& o) const;
    bool operator!=(const QuadFieldElem& o) const { return !(*this == o); }

    // Re-express inside Q(sqrt e1, sqrt e2) when every basis radical is available there.
    QuadFieldElem embed(long e1, long e2) const;

    std::string to_string() const;

private:
    void check(const QuadFieldElem& o) const;
    void fold();
    long d1_, d2_;
    std::array<Rational, 4> c_;
};

inline QuadFieldElem operator+(QuadFieldElem a, const QuadFieldElem& b) { return a += b; }
inline QuadFieldElem operator-(QuadFieldElem a, const QuadFieldElem& b) { return a -= b; }
inline QuadFieldElem operator*(QuadFieldElem a, const QuadFieldElem& b) { return a *= b; }
inline QuadFieldElem operator/(QuadFieldElem a, const QuadFieldElem& b) { return a /= b; }
inline QuadFieldElem operator*(QuadFieldElem a, const Rational& q) { return a *= q; }
inline QuadFieldElem operator*(const Rational& q, QuadFieldElem a) { return a *= q; }
inline QuadFieldElem operator+(QuadFieldElem a, const Rational& q) {
    return a += QuadFieldElem(a.d1(), a.d2(), q);
}
inline QuadFieldElem operator-(QuadFieldElem a, const Rational& q) {
    return a -= QuadFieldElem(a.d1(), a.d2(), q);
}

enum class FieldOp { add, sub, mul, div };
QuadFieldElem qf_arith(const QuadFieldElem& a, const QuadFieldElem& b, FieldOp op);

QuadFieldElem pow(const QuadFieldElem& a, long e);
QuadFieldElem poly_eval(const RatPoly& p, const QuadFieldElem& x);

}  // namespace hypermod
