#include "hypermod/qfield.hpp"

namespace hypermod {

namespace {

bool squarefree(long d) {
    for (long f = 2; f * f <= d; ++f)
        if (d % (f * f) == 0) return false;
    return true;
}

// d = k^2 * s with s squarefree
void split_square(long d, long& k, long& s) {
    k = 1;
    s = d;
    for (long f = 2; f * f <= s; ++f)
        while (s % (f * f) == 0) {
            s /= f * f;
            k *= f;
        }
}

}  // namespace

QuadFieldElem::QuadFieldElem(long d1, long d2) : QuadFieldElem(d1, d2, 0) {}

QuadFieldElem::QuadFieldElem(long d1, long d2, const Rational& c0, const Rational& c1,
                             const Rational& c2, const Rational& c3)
    : d1_(d1), d2_(d2), c_{c0, c1, c2, c3} {
    if (d1 <= 1 || d2 < 1 || d1 == d2 || !squarefree(d1) || !squarefree(d2))
        throw FieldTagMismatch("field tags must be distinct squarefree integers > 1 (d2 may be 1)");
    fold();
}

void QuadFieldElem::fold() {
    if (d2_ == 1) {
        c_[0] += c_[2];
        c_[1] += c_[3];
        c_[2] = 0;
        c_[3] = 0;
    }
}

void QuadFieldElem::check(const QuadFieldElem& o) const {
    if (!same_field(o))
        throw FieldTagMismatch("field tags differ: (" + std::to_string(d1_) + "," +
                               std::to_string(d2_) + ") vs (" + std::to_string(o.d1_) + "," +
                               std::to_string(o.d2_) + ")");
}

bool QuadFieldElem::is_zero() const {
    for (const auto& c : c_)
        if (sgn(c) != 0) return false;
    return true;
}

bool QuadFieldElem::is_rational() const {
    return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

QuadFieldElem QuadFieldElem::conjugate(int which) const {
    QuadFieldElem r = *this;
    if (which == 1) {
        r.c_[1] = -r.c_[1];
        r.c_[3] = -r.c_[3];
    } else {
        r.c_[2] = -r.c_[2];
        r.c_[3] = -r.c_[3];
    }
    return r;
}

Rational QuadFieldElem::norm() const {
    QuadFieldElem u = *this * conjugate(1);
    if (d2_ == 1) return u.c_[0];
    QuadFieldElem n = u * u.conjugate(2);
    return n.c_[0];
}

QuadFieldElem QuadFieldElem::inverse() const {
    if (is_zero()) throw DivisionByZero();
    QuadFieldElem s1 = conjugate(1);
    QuadFieldElem u = *this * s1;  // lies in Q(sqrt d2)
    if (d2_ == 1) return s1 * (Rational(1) / u.c_[0]);
    QuadFieldElem s2 = u.conjugate(2);
    Rational n = (u * s2).c_[0];
    return s1 * s2 * (Rational(1) / n);
}

QuadFieldElem QuadFieldElem::operator-() const {
    QuadFieldElem r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

QuadFieldElem& QuadFieldElem::operator+=(const QuadFieldElem& o) {
    check(o);
    for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
}

QuadFieldElem& QuadFieldElem::operator-=(const QuadFieldElem& o) {
    check(o);
    for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
}

QuadFieldElem& QuadFieldElem::operator*=(const QuadFieldElem& o) {
    check(o);
    const auto& x = c_;
    const auto& y = o.c_;
    const Rational a(d1_), b(d2_);
    std::array<Rational, 4> r;
    r[0] = x[0] * y[0] + a * x[1] * y[1] + b * x[2] * y[2] + a * b * x[3] * y[3];
    r[1] = x[0] * y[1] + x[1] * y[0] + b * (x[2] * y[3] + x[3] * y[2]);
    r[2] = x[0] * y[2] + x[2] * y[0] + a * (x[1] * y[3] + x[3] * y[1]);
    r[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1];
    c_ = r;
    fold();
    return *this;
}

QuadFieldElem& QuadFieldElem::operator/=(const QuadFieldElem& o) {
    check(o);
    return *this *= o.inverse();
}

QuadFieldElem& QuadFieldElem::operator*=(const Rational& q) {
    for (auto& c : c_) c *= q;
    return *this;
}

bool QuadFieldElem::operator==(const QuadFieldElem& o) const {
    return same_field(o) && c_ == o.c_;
}

QuadFieldElem QuadFieldElem::embed(long e1, long e2) const {
    QuadFieldElem r(e1, e2);
    const long src[4] = {1, d1_, d2_, d1_ * d2_};
    const long dst[4] = {1, e1, e2, e1 * e2};
    for (int i = 0; i < 4; ++i) {
        if (sgn(c_[i]) == 0) continue;
        long ks, ss;
        split_square(src[i], ks, ss);
        bool placed = false;
        for (int j = 0; j < 4 && !placed; ++j) {
            if (j >= 2 && e2 == 1) break;
            long kd, sd;
            split_square(dst[j], kd, sd);
            if (sd != ss) continue;
            // sqrt(src) = ks*sqrt(s), sqrt(dst) = kd*sqrt(s)
            r.c_[j] += c_[i] * Rational(ks) / Rational(kd);
            placed = true;
        }
        if (!placed)
            throw FieldTagMismatch("element of Q(sqrt " + std::to_string(d1_) + ", sqrt " +
                                   std::to_string(d2_) + ") does not embed");
    }
    return r;
}

std::string QuadFieldElem::to_string() const {
    const long rad[4] = {1, d1_, d2_, d1_ * d2_};
    std::string s;
    for (int i = 0; i < 4; ++i) {
        if (sgn(c_[i]) == 0) continue;
        if (!s.empty()) s += sgn(c_[i]) > 0 ? " + " : " - ";
        else if (sgn(c_[i]) < 0) s += "-";
        s += Rational(abs(c_[i])).get_str();
        if (i > 0) s += "*sqrt(" + std::to_string(rad[i]) + ")";
    }
    return s.empty() ? "0" : s;
}

QuadFieldElem qf_arith(const QuadFieldElem& a, const QuadFieldElem& b, FieldOp op) {
    switch (op) {
        case FieldOp::add: return a + b;
        case FieldOp::sub: return a - b;
        case FieldOp::mul: return a * b;
        case FieldOp::div: return a / b;
    }
    throw std::logic_error("bad op");
}

QuadFieldElem pow(const QuadFieldElem& a, long e) {
    if (e < 0) return pow(a.inverse(), -e);
    QuadFieldElem r(a.d1(), a.d2(), 1), base = a;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

QuadFieldElem poly_eval(const RatPoly& p, const QuadFieldElem& x) {
    QuadFieldElem acc(x.d1(), x.d2());
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace hypermod
