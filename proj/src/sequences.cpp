#include "hypermod/sequences.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace hypermod {

namespace {

const std::pair<SeriesId, const char*> kNames[] = {
    {SeriesId::f1, "f1"},   {SeriesId::f2, "f2"},   {SeriesId::f3, "f3"},   {SeriesId::f4, "f4"},
    {SeriesId::F1, "F1"},   {SeriesId::F2, "F2"},   {SeriesId::F3, "F3"},   {SeriesId::F4, "F4"},
    {SeriesId::f5, "f5"},   {SeriesId::F5, "F5"},   {SeriesId::G5, "G5"},   {SeriesId::f6a, "f6a"},
    {SeriesId::F6a, "F6a"}, {SeriesId::G6a, "G6a"}, {SeriesId::f6b, "f6b"}, {SeriesId::F6b, "F6b"},
    {SeriesId::G6b, "G6b"}, {SeriesId::f6c, "f6c"}, {SeriesId::F6c, "F6c"}, {SeriesId::G6c, "G6c"},
    {SeriesId::H, "H"},
};

// C(a, k) for any integer a and k >= 0 (falling factorial over k!)
Integer binomial_general(const Integer& a, long k) {
    if (k < 0) return 0;
    if (sgn(a) >= 0) return binomial(a.get_si(), k);
    Integer num = 1;
    for (long i = 0; i < k; ++i) num *= a - i;
    return num / factorial(k);
}

Integer ipow(long b, long e) {
    Integer r;
    mpz_class base(b);
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

Rational pochhammer(const Rational& s, long n) {
    Rational r = 1;
    for (long i = 0; i < n; ++i) r *= s + i;
    return r;
}

Rational level_s(int level) {
    switch (level) {
        case 1: return Rational(1, 6);
        case 2: return Rational(1, 4);
        case 3: return Rational(1, 3);
        case 4: return Rational(1, 2);
    }
    throw std::invalid_argument("hypergeometric level must be 1..4");
}

struct Cache {
    std::mutex mu;
    std::map<SeriesId, std::vector<Rational>> values;
};

Cache& cache() {
    static Cache c;
    return c;
}

Rational compute_coeff(SeriesId id, long n);

}  // namespace

void check_params(const ZagierParams& p) {
    for (const auto& t : kZagierTriples)
        if (t == p) return;
    throw std::invalid_argument("unsupported parameter triple (" + std::to_string(p.alpha) + "," +
                                std::to_string(p.beta) + "," + std::to_string(p.gamma) + ")");
}

std::string to_string(SeriesId id) {
    for (const auto& [k, v] : kNames)
        if (k == id) return v;
    return "?";
}

std::optional<SeriesId> parse_series_id(const std::string& s) {
    for (const auto& [k, v] : kNames)
        if (s == v) return k;
    return std::nullopt;
}

long hyper_constant(int level) {
    static const long c[] = {432, 64, 27, 16};
    if (level < 1 || level > 4) throw std::invalid_argument("hypergeometric level must be 1..4");
    return c[level - 1];
}

Rational hyper_coeff(int level, HyperKind kind, long n) {
    Rational s = level_s(level);
    Integer fact = factorial(n);
    Rational r = pochhammer(s, n) * pochhammer(1 - s, n) / (Rational(fact) * fact);
    long c = hyper_constant(level);
    if (kind == HyperKind::f) return r * Rational(ipow(c, n));
    return r * pochhammer(Rational(1, 2), n) / Rational(fact) * Rational(ipow(4 * c, n));
}

namespace {

// t(0..n) or T(0..n) from the recurrences, asserting integrality at every step
std::vector<Integer> recurrence_prefix(const ZagierParams& p, Which which, long n) {
    check_params(p);
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    const long a = p.alpha, b = p.beta, g = p.gamma;
    std::vector<Integer> out{1};
    Integer prev = 0;
    for (long k = 0; k < n; ++k) {
        const Integer& cur = out.back();
        Integer num, den;
        if (which == Which::t) {
            num = (a * k * k + a * k + b) * cur + Integer(g * k * k) * prev;
            den = Integer(k + 1) * (k + 1);
        } else {
            num = -Integer((2 * k + 1) * (a * k * k + a * k + a - 2 * b)) * cur -
                  Integer(a * a + 4 * g) * Integer(k) * k * k * prev;
            den = Integer(k + 1) * (k + 1) * (k + 1);
        }
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
            throw std::logic_error("recurrence lost integrality");
        prev = cur;
        out.push_back(num / den);
    }
    return out;
}

}  // namespace

Rational zagier_t(const ZagierParams& p, long n) {
    return Rational(recurrence_prefix(p, Which::t, n).back());
}

Rational zagier_T(const ZagierParams& p, long n) {
    return Rational(recurrence_prefix(p, Which::T, n).back());
}

Rational table1_oracle(const ZagierParams& p, Which which, long n) {
    check_params(p);
    Integer s = 0;
    if (p == ZagierParams{11, 3, 1}) {
        if (which == Which::t) {
            for (long j = 0; j <= n; ++j) {
                Integer c = binomial(n, j);
                s += c * c * binomial(n + j, j);
            }
        } else {
            for (long j = 0; j <= n; ++j) {
                Integer c = binomial(n, j);
                Integer term = c * c * c * binomial_general(Integer(4 * n - 5 * j), 3 * n);
                s += ((j + n) % 2 == 0) ? term : Integer(-term);
            }
        }
    } else if (p == ZagierParams{-17, -6, -72}) {
        if (which == Which::t) {
            for (long j = 0; j <= n; ++j) {
                Integer inner = 0;
                for (long l = 0; l <= j; ++l) {
                    Integer c = binomial(j, l);
                    inner += c * c * c;
                }
                s += ipow(-8, n - j) * binomial(n, j) * inner;
            }
        } else {
            for (long j = 0; j <= n; ++j) {
                Integer c = binomial(n, j) * binomial(n + j, j);
                s += c * c;
            }
        }
    } else if (p == ZagierParams{10, 3, -9}) {
        for (long j = 0; j <= n; ++j) {
            Integer c = binomial(n, j);
            Integer term = c * c * binomial(2 * j, j);
            if (which == Which::T) term *= binomial(2 * n - 2 * j, n - j);
            s += term;
        }
        if (which == Which::T && n % 2 == 1) s = -s;
    } else {  // (7,2,8)
        if (which == Which::t) {
            for (long j = 0; j <= n; ++j) {
                Integer c = binomial(n, j);
                s += c * c * c;
            }
        } else {
            // C(n-2j, j) vanishes once n - 2j < j, which bounds the sum
            for (long j = 0; 3 * j <= n; ++j) {
                Integer term = binomial(n + j, j) * binomial(n, j) * binomial(n - j, j) *
                               binomial(n - 2 * j, j) * ipow(3, n - 3 * j);
                s += ((n - 3 * j) % 2 == 0) ? term : Integer(-term);
            }
        }
    }
    return Rational(s);
}

Integer quartic_sum_H(long n) {
    Integer s = 0;
    for (long j = 0; j <= n; ++j) {
        Integer c = binomial(n, j);
        c *= c;
        s += c * c;
    }
    return s;
}

std::optional<ZagierParams> family_params(SeriesId id) {
    switch (id) {
        case SeriesId::f5: case SeriesId::F5: case SeriesId::G5: return kZagierTriples[0];
        case SeriesId::f6a: case SeriesId::F6a: case SeriesId::G6a: return kZagierTriples[1];
        case SeriesId::f6b: case SeriesId::F6b: case SeriesId::G6b: return kZagierTriples[2];
        case SeriesId::f6c: case SeriesId::F6c: case SeriesId::G6c: return kZagierTriples[3];
        default: return std::nullopt;
    }
}

namespace {

Rational compute_coeff(SeriesId id, long n) {
    switch (id) {
        case SeriesId::f1: return hyper_coeff(1, HyperKind::f, n);
        case SeriesId::f2: return hyper_coeff(2, HyperKind::f, n);
        case SeriesId::f3: return hyper_coeff(3, HyperKind::f, n);
        case SeriesId::f4: return hyper_coeff(4, HyperKind::f, n);
        case SeriesId::F1: return hyper_coeff(1, HyperKind::F, n);
        case SeriesId::F2: return hyper_coeff(2, HyperKind::F, n);
        case SeriesId::F3: return hyper_coeff(3, HyperKind::F, n);
        case SeriesId::F4: return hyper_coeff(4, HyperKind::F, n);
        case SeriesId::H: return Rational(quartic_sum_H(n));
        default: break;
    }
    throw std::logic_error("family coefficients come from the recurrence sweep");
}

}  // namespace

Rational series_coeff(SeriesId id, long n) {
    auto& c = cache();
    {
        std::lock_guard<std::mutex> lock(c.mu);
        auto& v = c.values[id];
        if (n < static_cast<long>(v.size())) return v[n];
    }
    // The recurrences are cheapest computed as one sweep, so fill the whole prefix.
    std::vector<Rational> fresh;
    auto p = family_params(id);
    if (p) {
        bool is_f = id == SeriesId::f5 || id == SeriesId::f6a || id == SeriesId::f6b ||
                    id == SeriesId::f6c;
        bool is_g = id == SeriesId::G5 || id == SeriesId::G6a || id == SeriesId::G6b ||
                    id == SeriesId::G6c;
        auto seq = recurrence_prefix(*p, is_g ? Which::T : Which::t, n);
        for (long k = 0; k <= n; ++k) {
            Rational v(seq[k]);
            if (!is_f && !is_g) v *= Rational(binomial(2 * k, k));
            fresh.push_back(v);
        }
    } else {
        for (long k = 0; k <= n; ++k) fresh.push_back(compute_coeff(id, k));
    }
    std::lock_guard<std::mutex> lock(c.mu);
    auto& v = c.values[id];
    if (v.size() < fresh.size()) v = std::move(fresh);
    return v[n];
}

PowerSeries base_series(SeriesId id, long N, const std::string& var) {
    series_coeff(id, N);
    PowerSeries s(var, N);
    for (long n = 0; n <= N; ++n) s[n] = series_coeff(id, n);
    return s;
}

Rational growth_bound(SeriesId id) {
    switch (id) {
        case SeriesId::f1: case SeriesId::f2: case SeriesId::f3: case SeriesId::f4:
            return hyper_constant(static_cast<int>(id) - static_cast<int>(SeriesId::f1) + 1);
        case SeriesId::F1: case SeriesId::F2: case SeriesId::F3: case SeriesId::F4:
            return 4 * hyper_constant(static_cast<int>(id) - static_cast<int>(SeriesId::F1) + 1);
        // t grows like the largest root of z^2 - alpha z - gamma
        case SeriesId::f5: return Rational(11091, 1000);  // (11 + sqrt 125)/2 = 11.0902
        case SeriesId::f6a: return 9;
        case SeriesId::f6b: return 9;
        case SeriesId::f6c: return 8;
        case SeriesId::F5: return Rational(4 * 11091, 1000);
        case SeriesId::F6a: return 36;
        case SeriesId::F6b: return 36;
        case SeriesId::F6c: return 32;
        // T grows like the largest root of z^2 + 2 alpha z + alpha^2 + 4 gamma
        case SeriesId::G5: return Rational(11181, 1000);  // sqrt 125 = 11.1803
        case SeriesId::G6a: return Rational(33971, 1000);  // 17 + sqrt 288 = 33.9706
        case SeriesId::G6b: return 16;
        case SeriesId::G6c: return 9;
        case SeriesId::H: return 16;
    }
    return 0;
}

}  // namespace hypermod
