#include "hypermod/ball.hpp"

#include <algorithm>
#include <cmath>

namespace hypermod {

namespace {

constexpr long kRadBits = 32;

long bitlen(const Integer& z) {
    if (sgn(z) == 0) return 0;
    return static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

Integer shl(const Integer& z, long k) {
    Integer r;
    if (k >= 0)
        mpz_mul_2exp(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(k));
    else
        mpz_fdiv_q_2exp(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(-k));
    return r;
}

// z / 2^k with the requested rounding; k > 0
Integer shr_round(const Integer& z, long k, Round r) {
    Integer q;
    auto kk = static_cast<unsigned long>(k);
    switch (r) {
        case Round::down: mpz_fdiv_q_2exp(q.get_mpz_t(), z.get_mpz_t(), kk); break;
        case Round::up: mpz_cdiv_q_2exp(q.get_mpz_t(), z.get_mpz_t(), kk); break;
        case Round::nearest: {
            Integer half = shl(Integer(1), k - 1);
            Integer t = z + half;
            mpz_fdiv_q_2exp(q.get_mpz_t(), t.get_mpz_t(), kk);
        } break;
    }
    return q;
}

Integer div_round(const Integer& n, const Integer& d, Round r) {
    Integer q;
    switch (r) {
        case Round::down: mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t()); break;
        case Round::up: mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t()); break;
        case Round::nearest: {
            Integer t = 2 * n + d;
            Integer dd = 2 * d;
            mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), dd.get_mpz_t());
        } break;
    }
    return q;
}

Dyadic rad_up(const Dyadic& r) { return dy_round(r, kRadBits, Round::up); }

bool is_pow2(const Integer& z) { return sgn(z) > 0 && mpz_popcount(z.get_mpz_t()) == 1; }

}  // namespace

Rational Dyadic::to_rational() const {
    if (exp >= 0) return Rational(shl(man, exp));
    Rational q(man, shl(Integer(1), -exp));
    q.canonicalize();
    return q;
}

Dyadic dy_add(const Dyadic& a, const Dyadic& b) {
    if (sgn(a.man) == 0) return b;
    if (sgn(b.man) == 0) return a;
    long e = std::min(a.exp, b.exp);
    return Dyadic(shl(a.man, a.exp - e) + shl(b.man, b.exp - e), e);
}

Dyadic dy_sub(const Dyadic& a, const Dyadic& b) { return dy_add(a, Dyadic(-b.man, b.exp)); }

Dyadic dy_mul(const Dyadic& a, const Dyadic& b) { return Dyadic(a.man * b.man, a.exp + b.exp); }

Dyadic dy_abs(Dyadic a) {
    a.man = abs(a.man);
    return a;
}

int dy_cmp(const Dyadic& a, const Dyadic& b) { return dy_sub(a, b).sign(); }

Dyadic dy_round(const Dyadic& a, long bits, Round r) {
    long n = bitlen(a.man);
    if (n <= bits) return a;
    long k = n - bits;
    return Dyadic(shr_round(a.man, k, r), a.exp + k);
}

Dyadic dy_div(const Dyadic& a, const Dyadic& b, long bits, Round r) {
    if (sgn(b.man) == 0) throw DivisionByZero();
    if (sgn(a.man) == 0) return Dyadic();
    Integer bm = b.man, am = a.man;
    if (sgn(bm) < 0) {
        bm = -bm;
        am = -am;
    }
    long s = bits + bitlen(bm) - bitlen(am) + 1;
    Integer n = am, d = bm;
    if (s >= 0) n = shl(am, s);
    else d = shl(bm, -s);
    return Dyadic(div_round(n, d, r), a.exp - b.exp - s);
}

Dyadic dy_sqrt(const Dyadic& a, long bits, Round r) {
    if (a.sign() < 0) throw BallDomainError("sqrt of negative dyadic");
    if (a.sign() == 0) return Dyadic();
    long t = std::max(0L, 2 * bits + 2 - bitlen(a.man));
    if ((a.exp - t) % 2 != 0) ++t;
    Integer m = shl(a.man, t);
    long e = a.exp - t;
    Integer s;
    mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
    if (r == Round::up && s * s < m) s += 1;
    if (r == Round::nearest) {
        // round to nearest: compare m with (s + 1/2)^2 = s^2 + s + 1/4
        if (4 * (m - s * s) > 4 * s + 1) s += 1;
    }
    return Dyadic(s, e / 2);
}

Dyadic dy_from_rational(const Rational& q, long bits, Round r) {
    const Integer& den = q.get_den();
    if (is_pow2(den)) {
        long k = bitlen(den) - 1;
        return dy_round(Dyadic(q.get_num(), -k), bits, r);
    }
    return dy_div(Dyadic(q.get_num(), 0), Dyadic(den, 0), bits, r);
}

Ball::Ball(Dyadic mid, Dyadic rad) : mid_(std::move(mid)), rad_(std::move(rad)) {
    if (rad_.sign() < 0) throw std::invalid_argument("negative radius");
}

Ball Ball::from_rational(const Rational& q, long prec) {
    Dyadic m = dy_from_rational(q, prec, Round::nearest);
    Rational err = abs(q - m.to_rational());
    Dyadic r = sgn(err) == 0 ? Dyadic() : dy_from_rational(err, kRadBits, Round::up);
    return Ball(m, r);
}

bool Ball::contains(const Rational& q) const { return abs(q - mid_rational()) <= rad_rational(); }

bool Ball::contains(const Ball& inner) const {
    return lower() <= inner.lower() && inner.upper() <= upper();
}

bool Ball::overlaps(const Ball& o) const {
    return abs(mid_rational() - o.mid_rational()) <= rad_rational() + o.rad_rational();
}

Ball Ball::operator-() const { return Ball(Dyadic(-mid_.man, mid_.exp), rad_); }

std::string Ball::to_string(int digits) const {
    Rational m = mid_rational();
    std::string sign = sgn(m) < 0 ? "-" : "";
    m = abs(m);
    Integer scaled = m.get_num() * ten_pow(digits).get_num() / m.get_den();
    std::string s = scaled.get_str();
    if (static_cast<int>(s.size()) <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
    s.insert(s.size() - digits, ".");
    double r = rad_.sign() == 0 ? 0.0 : std::ldexp(rad_.man.get_d(), static_cast<int>(rad_.exp));
    char buf[48];
    std::snprintf(buf, sizeof buf, " +/- %.3e", r);
    return sign + s + buf;
}

Ball add(const Ball& a, const Ball& b, long prec) {
    Dyadic ex = dy_add(a.mid(), b.mid());
    Dyadic m = dy_round(ex, prec, Round::nearest);
    Dyadic err = dy_abs(dy_sub(ex, m));
    return Ball(m, rad_up(dy_add(dy_add(a.rad(), b.rad()), err)));
}

Ball sub(const Ball& a, const Ball& b, long prec) { return add(a, -b, prec); }

Ball mul(const Ball& a, const Ball& b, long prec) {
    Dyadic ex = dy_mul(a.mid(), b.mid());
    Dyadic m = dy_round(ex, prec, Round::nearest);
    Dyadic err = dy_abs(dy_sub(ex, m));
    Dyadic r = dy_add(dy_mul(dy_abs(a.mid()), b.rad()), dy_mul(dy_abs(b.mid()), a.rad()));
    r = dy_add(r, dy_mul(a.rad(), b.rad()));
    return Ball(m, rad_up(dy_add(r, err)));
}

Ball div(const Ball& a, const Ball& b, long prec) {
    Dyadic bm = dy_abs(b.mid());
    Dyadic gap = dy_sub(bm, b.rad());
    if (gap.sign() <= 0) throw BallDomainError("division by a ball containing zero");
    Dyadic m = dy_div(a.mid(), b.mid(), prec, Round::nearest);
    // |am/bm - m| <= 1 ulp of the quotient
    Dyadic ulp(Integer(1), m.exp);
    if (m.sign() == 0) ulp = Dyadic();
    // |a/b - am/bm| <= (ar|bm| + |am|br) / (|bm|(|bm|-br))
    Dyadic num = dy_add(dy_mul(a.rad(), bm), dy_mul(dy_abs(a.mid()), b.rad()));
    Dyadic den = dy_round(dy_mul(bm, gap), kRadBits + 8, Round::down);
    Dyadic prop = num.sign() == 0 ? Dyadic() : dy_div(num, den, kRadBits, Round::up);
    return Ball(m, rad_up(dy_add(prop, ulp)));
}

Ball sqrt(const Ball& a, long prec) {
    Dyadic lo = dy_sub(a.mid(), a.rad());
    if (lo.sign() <= 0) throw BallDomainError("sqrt of a ball not inside the positive reals");
    Dyadic m = dy_sqrt(a.mid(), prec, Round::nearest);
    Dyadic ulp(Integer(1), m.exp);
    Dyadic r;
    if (a.rad().sign() != 0) {
        Dyadic s = dy_sqrt(lo, kRadBits + 8, Round::down);
        r = dy_div(a.rad(), dy_mul(Dyadic(2), s), kRadBits, Round::up);
    }
    return Ball(m, rad_up(dy_add(r, ulp)));
}

Ball pow(const Ball& a, long e, long prec) {
    if (e < 0) return div(Ball::exact(1), pow(a, -e, prec), prec);
    Ball r = Ball::exact(1), base = a;
    while (e) {
        if (e & 1) r = mul(r, base, prec);
        e >>= 1;
        if (e) base = mul(base, base, prec);
    }
    return r;
}

Ball pow_halfint(const Ball& a, long num, long prec) {
    if (!a.is_positive()) throw BallDomainError("half-integer power needs a positive base");
    if (num % 2 == 0) return pow(a, num / 2, prec);
    Ball s = sqrt(a, prec + 8);
    return pow(s, num, prec);
}

Ball ball_arith(const Ball& a, const Ball& b, BallOp op, long prec, long half_num) {
    switch (op) {
        case BallOp::add: return add(a, b, prec);
        case BallOp::sub: return sub(a, b, prec);
        case BallOp::mul: return mul(a, b, prec);
        case BallOp::div: return div(a, b, prec);
        case BallOp::sqrt: return sqrt(a, prec);
        case BallOp::pow_halfint: return pow_halfint(a, half_num, prec);
    }
    throw std::logic_error("bad op");
}

Ball qf_to_ball(const QuadFieldElem& a, long prec) {
    if (a.is_zero()) return Ball();
    const long rad[4] = {1, a.d1(), a.d2(), a.d1() * a.d2()};
    for (long w = prec + 16;; w += 32) {
        Ball acc;
        for (int i = 0; i < 4; ++i) {
            if (sgn(a[i]) == 0) continue;
            Ball c = Ball::from_rational(a[i], w);
            if (i > 0) c = mul(c, sqrt(Ball::exact(rad[i]), w), w);
            acc = add(acc, c, w);
        }
        Rational mag = abs(acc.mid_rational()) - acc.rad_rational();
        Rational bound = Rational(std::max(Rational(1), mag)) * 8;
        Rational scale = Dyadic(Integer(1), -prec).to_rational();
        if (acc.width() <= bound * scale) return acc;
        if (w > prec + 4096) throw BallDomainError("qf_to_ball failed to converge");
    }
}

long digits_to_bits(long digits) {
    return static_cast<long>(std::ceil(digits * 3.3219280948873623)) + 16;
}

Rational ten_pow(long e) {
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(Integer(1), t) : Rational(t);
}

}  // namespace hypermod
