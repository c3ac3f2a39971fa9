#include "hypermod/series.hpp"

#include <algorithm>

namespace hypermod {

namespace {

void same_var(const PowerSeries& a, const PowerSeries& b) {
    if (a.var() != b.var())
        throw SeriesError("variable mismatch: " + a.var() + " vs " + b.var());
}

// Truncated product at order n, skipping zero coefficients of either side.
std::vector<Rational> mul_trunc(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                long n) {
    std::vector<Rational> r(static_cast<size_t>(n + 1));
    long la = std::min<long>(static_cast<long>(a.size()) - 1, n);
    long lb = static_cast<long>(b.size()) - 1;
    std::vector<long> nzb;
    for (long j = 0; j <= std::min(lb, n); ++j)
        if (sgn(b[j]) != 0) nzb.push_back(j);
    for (long i = 0; i <= la; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (long j : nzb) {
            if (i + j > n) break;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

}  // namespace

PowerSeries::PowerSeries(std::string var, long order)
    : var_(std::move(var)), c_(static_cast<size_t>(std::max(order, -1L) + 1)) {
    if (order < 0) throw SeriesError("negative truncation order");
}

PowerSeries::PowerSeries(std::string var, std::vector<Rational> coeffs)
    : var_(std::move(var)), c_(std::move(coeffs)) {
    if (c_.empty()) throw SeriesError("series needs at least one coefficient");
}

PowerSeries PowerSeries::constant(const std::string& var, long order, const Rational& c) {
    PowerSeries s(var, order);
    s[0] = c;
    return s;
}

PowerSeries PowerSeries::monomial(const std::string& var, long order, long k, const Rational& c) {
    PowerSeries s(var, order);
    if (k <= order) s[k] = c;
    return s;
}

PowerSeries PowerSeries::from_poly(const std::string& var, long order, const RatPoly& p) {
    PowerSeries s(var, order);
    for (long i = 0; i < static_cast<long>(p.size()) && i <= order; ++i) s[i] = p[i];
    return s;
}

long PowerSeries::valuation() const {
    for (long i = 0; i <= order(); ++i)
        if (sgn(c_[i]) != 0) return i;
    return order() + 1;
}

PowerSeries PowerSeries::truncate(long n) const {
    if (n > order()) throw SeriesError("cannot extend a truncated series");
    return PowerSeries(var_, std::vector<Rational>(c_.begin(), c_.begin() + n + 1));
}

PowerSeries PowerSeries::with_var(const std::string& v) const {
    PowerSeries r = *this;
    r.var_ = v;
    return r;
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

PowerSeries& PowerSeries::operator*=(const Rational& q) {
    for (auto& c : c_) c *= q;
    return *this;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    same_var(a, b);
    long n = std::min(a.order(), b.order());
    PowerSeries r(a.var(), n);
    for (long i = 0; i <= n; ++i) r[i] = a[i] + b[i];
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    same_var(a, b);
    long n = std::min(a.order(), b.order());
    return PowerSeries(a.var(), mul_trunc(a.coeffs(), b.coeffs(), n));
}

PowerSeries ps_inverse(const PowerSeries& a) {
    if (sgn(a[0]) == 0) throw SeriesError("division by a series with zero constant term");
    long n = a.order();
    PowerSeries r(a.var(), n);
    Rational inv0 = 1 / a[0];
    r[0] = inv0;
    for (long k = 1; k <= n; ++k) {
        Rational s = 0;
        for (long j = 1; j <= k; ++j)
            if (sgn(a[j]) != 0) s += a[j] * r[k - j];
        r[k] = -s * inv0;
    }
    return r;
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
    same_var(a, b);
    long n = std::min(a.order(), b.order());
    return a.truncate(n) * ps_inverse(b.truncate(n));
}

PowerSeries operator*(PowerSeries a, const Rational& q) { return a *= q; }
PowerSeries operator*(const Rational& q, PowerSeries a) { return a *= q; }

PowerSeries ps_arith(const PowerSeries& a, const PowerSeries& b, SeriesOp op) {
    switch (op) {
        case SeriesOp::add: return a + b;
        case SeriesOp::sub: return a - b;
        case SeriesOp::mul: return a * b;
        case SeriesOp::div: return a / b;
    }
    throw std::logic_error("bad op");
}

PowerSeries ps_compose(const PowerSeries& a, const PowerSeries& b) {
    if (sgn(b[0]) != 0) throw SeriesError("inner series must vanish at 0");
    long n = b.order();
    PowerSeries r(b.var(), n);
    r[0] = a[0];
    long m = b.valuation();
    if (m > n) return r;
    if (a.order() < n / m)
        throw SeriesError("outer series too short for the requested composition order");
    std::vector<Rational> pw = b.coeffs();  // b^k, k = 1, 2, ...
    for (long k = 1; k * m <= n && k <= a.order(); ++k) {
        if (k > 1) pw = mul_trunc(pw, b.coeffs(), n);
        if (sgn(a[k]) == 0) continue;
        for (long i = k * m; i <= n; ++i)
            if (sgn(pw[i]) != 0) r[i] += a[k] * pw[i];
    }
    return r;
}

PowerSeries ps_pow_rational(const PowerSeries& a, const Rational& e) {
    if (a[0] != 1) throw SeriesError("rational power needs constant term 1");
    const Integer& d = e.get_den();
    if (d != 1 && d != 2 && d != 4) throw SeriesError("exponent denominator must divide 4");
    long n = a.order();
    PowerSeries b(a.var(), n);
    b[0] = 1;
    for (long k = 1; k <= n; ++k) {
        Rational s = 0;
        for (long j = 1; j <= k; ++j)
            if (sgn(a[j]) != 0) s += (e * j - (k - j)) * a[j] * b[k - j];
        b[k] = s / k;
    }
    return b;
}

PowerSeries ps_pow_int(const PowerSeries& a, long e) {
    if (e < 0) return ps_pow_int(ps_inverse(a), -e);
    PowerSeries r = PowerSeries::constant(a.var(), a.order(), 1), base = a;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

PowerSeries ps_derivative(const PowerSeries& a) {
    long n = a.order();
    if (n == 0) return PowerSeries(a.var(), 0);
    PowerSeries r(a.var(), n - 1);
    for (long i = 1; i <= n; ++i) r[i - 1] = a[i] * i;
    return r;
}

PowerSeries ps_reversion(const PowerSeries& b) {
    if (sgn(b[0]) != 0 || sgn(b[1]) == 0)
        throw SeriesError("reversion needs B(0) = 0 and B'(0) != 0");
    long n = b.order();
    PowerSeries r(b.var(), n);
    r[1] = 1 / b[1];
    for (long k = 2; k <= n; ++k) {
        PowerSeries c = ps_compose(b, r);
        r[k] = -c[k] / b[1];
    }
    return r;
}

PowerSeries clausen_branch(const PowerSeries& X) {
    if (sgn(X[0]) != 0) throw SeriesError("clausen_branch needs X(0) = 0");
    PowerSeries one = PowerSeries::constant(X.var(), X.order(), 1);
    PowerSeries s = ps_pow_rational(one - X, Rational(1, 2));
    return (one - s) * Rational(1, 2);
}

long first_difference(const PowerSeries& a, const PowerSeries& b) {
    long n = std::min(a.order(), b.order());
    for (long i = 0; i <= n; ++i)
        if (a[i] != b[i]) return i;
    return -1;
}

std::string to_string(const PowerSeries& s, long terms) {
    std::string out;
    long n = std::min(terms, s.order() + 1);
    for (long i = 0; i < n; ++i) {
        if (sgn(s[i]) == 0) continue;
        Rational c = s[i];
        if (!out.empty()) out += sgn(c) > 0 ? " + " : " - ";
        else if (sgn(c) < 0) out += "-";
        c = abs(c);
        bool unit = c == 1 && i > 0;
        if (!unit) out += c.get_str();
        if (i > 0) {
            if (!unit) out += "*";
            out += s.var();
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    if (out.empty()) out = "0";
    return out + " + O(" + s.var() + "^" + std::to_string(n) + ")";
}

}  // namespace hypermod
