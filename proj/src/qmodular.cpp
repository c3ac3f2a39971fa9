#include "hypermod/qmodular.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hypermod {

namespace {

// c *= (1 - q^j)^(+-1) in place
void times_factor(std::vector<Rational>& c, long j, bool divide) {
    const long N = static_cast<long>(c.size()) - 1;
    if (divide) {
        for (long i = j; i <= N; ++i) c[i] += c[i - j];
    } else {
        for (long i = N; i >= j; --i) c[i] -= c[i - j];
    }
}

Integer sigma(long k, long n) {
    Integer s = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) {
            Integer t;
            mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
            s += t;
        }
    return s;
}

QSeries make(long frac24, PowerSeries s) {
    QSeries q;
    q.frac24 = frac24;
    q.s = std::move(s);
    return q;
}

// Both series re-expressed over the lower leading exponent; nullopt if not a whole power apart.
std::optional<std::pair<QSeries, QSeries>> align(const QSeries& a, const QSeries& b) {
    if ((a.frac24 - b.frac24) % 24 != 0) return std::nullopt;
    auto lift = [](const QSeries& x, long to) {
        long k = (x.frac24 - to) / 24;
        PowerSeries r("q", x.order() + k);
        for (long i = 0; i <= x.order(); ++i) r[i + k] = x.s[i];
        return make(to, r);
    };
    long f = std::min(a.frac24, b.frac24);
    QSeries x = lift(a, f), y = lift(b, f);
    long n = std::min(x.order(), y.order());
    return std::make_pair(make(f, x.s.truncate(n)), make(f, y.s.truncate(n)));
}

QSeries qs_pow_rational(const QSeries& a, const Rational& e) {
    Rational f = e * a.frac24;
    if (!is_integer(f)) throw QSeriesError("fractional power leaves a non-24th leading exponent");
    Rational c0 = a.s[0];
    if (c0 != 1) throw QSeriesError("power needs leading coefficient 1");
    return make(f.get_num().get_si(), ps_pow_rational(a.s, e));
}

QSeries constant_q(long N, const Rational& c) { return make(0, PowerSeries::constant("q", N, c)); }

QSeries scale(QSeries a, const Rational& c) {
    a.s *= c;
    return a;
}

// prod poly_i(hs)^e_i; monomial parts of the polynomials become powers of hs
QSeries rational_in(const std::vector<std::pair<std::vector<long>, long>>& factors, const QSeries& hs, long N) {
    QSeries r = constant_q(N, 1);
    for (const auto& [poly, e] : factors) {
        size_t v = 0;
        while (v < poly.size() && poly[v] == 0) ++v;
        if (v == poly.size()) throw QSeriesError("zero polynomial");
        if (v > 0) r = r * qs_pow(hs, static_cast<long>(v) * e);
        RatPoly rest;
        for (size_t i = v; i < poly.size(); ++i) rest.emplace_back(poly[i]);
        if (rest.size() == 1 && rest[0] == 1) continue;
        QSeries c = compose_h(PowerSeries::from_poly("x", N, rest), hs, N);
        r = r * make(0, ps_pow_int(c.s, e));
    }
    return r;
}

QSeries lincomb(const std::vector<std::pair<Rational, QSeries>>& terms) {
    QSeries r = scale(terms.front().second, terms.front().first);
    for (size_t i = 1; i < terms.size(); ++i) r = r + scale(terms[i].second, terms[i].first);
    return r;
}

QSubCheck check(const std::string& name, const QSeries& lhs, const QSeries& rhs) {
    QSubCheck c;
    c.name = name;
    auto al = align(lhs, rhs);
    if (!al) {
        c.note = "leading exponents differ by a fraction: " + std::to_string(lhs.frac24) + "/24 vs " +
                 std::to_string(rhs.frac24) + "/24";
        return c;
    }
    c.mismatch = compare_series(al->first.s, al->second.s, "lhs", "rhs");
    c.certified = !c.mismatch;
    if (c.mismatch) {
        long off = al->first.frac24 / 24;
        c.mismatch->power += off;  // report absolute powers of q
        if (lhs.frac24 + 24 * lhs.s.valuation() != rhs.frac24 + 24 * rhs.s.valuation())
            c.note = "leading powers of q differ";
    }
    return c;
}

struct Ctx {
    long N;
    const Catalog& cat;
    std::map<std::string, QSeries> memo;

    QSeries eta(const EtaSpec& s) { return eta_quotient(s, N); }
    QSeries P(long m) { return eisenstein(Eisenstein::P, m, N); }
    QSeries Q(long m) { return eisenstein(Eisenstein::Q, m, N); }
    QSeries h() { return get("h", [&] { return hauptmodul(12, N); }); }
    QSeries k() { return get("k", [&] { return hauptmodul(10, N); }); }
    QSeries z() { return get("z", [&] { return logderiv_z(h(), N); }); }
    QSeries get(const std::string& key, const std::function<QSeries()>& f) {
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        return memo[key] = f();
    }
    PowerSeries common(const std::string& group) {
        const TheoremGroup* g = cat.find_group(group);
        if (!g || g->entries.empty()) throw CatalogError("missing group " + group);
        return expand_entry(g->entries.front(), "x", N);
    }
    QSeries base(SeriesId id, const QSeries& arg) { return compose_h(base_series(id, N), arg, N); }
};

using Poly = std::vector<long>;
const Poly kH{0, 1}, kOnePlusH2{1, 0, 1}, kOneMinusHH2{1, -1, 1}, kOneMinus4H{1, -4, 1}, kOneMinusH2{1, 0, -1};

std::vector<std::pair<Poly, long>> discriminant_den() {
    return {{kOnePlusH2, -1}, {kOneMinusHH2, -1}, {kOneMinus4H, -1}, {kOneMinusH2, -1}};
}

std::vector<std::pair<Poly, long>> with(std::vector<std::pair<Poly, long>> a, const std::vector<std::pair<Poly, long>>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

using Runner = std::function<std::vector<QSubCheck>(Ctx&, bool printed)>;

struct Registered {
    QIdentityInfo info;
    Runner run;
};

QSeries z_power(Ctx& c, long e) { return qs_pow(c.z(), e); }

const std::vector<Registered>& registry() {
    static const std::vector<Registered> reg = [] {
        std::vector<Registered> r;
        // levels 1-4 as Eisenstein roots of eta quotients
        r.push_back({{"L72.1", "Z1 = Q^(1/2) = F1(eta^24 / Z1^6)", 40, false}, [](Ctx& c, bool) {
                         QSeries q = c.Q(1);
                         QSeries z1 = qs_pow_rational(q, Rational(1, 2));
                         QSeries arg = c.eta({{1, 24}}) * qs_pow(q, -3);
                         return std::vector<QSubCheck>{check("Z1^2 = Q", z1 * z1, q), check("Z1 = F1(arg)", z1, c.base(SeriesId::F1, arg))};
                     }});
        r.push_back({{"L72.2", "Z2 = 2P(q^2) - P(q) = F2((eta^2(t)eta^2(2t)/Z2)^4)", 40, false}, [](Ctx& c, bool) {
                         QSeries z2 = lincomb({{2, c.P(2)}, {-1, c.P(1)}});
                         QSeries arg = c.eta({{1, 8}, {2, 8}}) * qs_pow(z2, -4);
                         return std::vector<QSubCheck>{check("Z2 = F2(arg)", z2, c.base(SeriesId::F2, arg))};
                     }});
        r.push_back({{"L72.3", "Z3 = (3P(q^3) - P(q))/2 = F3((eta^2(t)eta^2(3t)/Z3)^3)", 40, false}, [](Ctx& c, bool) {
                         QSeries z3 = lincomb({{Rational(3, 2), c.P(3)}, {Rational(-1, 2), c.P(1)}});
                         QSeries arg = c.eta({{1, 6}, {3, 6}}) * qs_pow(z3, -3);
                         return std::vector<QSubCheck>{check("Z3 = F3(arg)", z3, c.base(SeriesId::F3, arg))};
                     }});
        r.push_back({{"L72.4", "Z4 = (4P(q^4) - P(q))/3 = F4((eta^4(t)eta^4(4t)/(eta^4(2t)Z4))^2)", 40, false}, [](Ctx& c, bool) {
                         QSeries z4 = lincomb({{Rational(4, 3), c.P(4)}, {Rational(-1, 3), c.P(1)}});
                         QSeries arg = c.eta({{1, 8}, {4, 8}, {2, -8}}) * qs_pow(z4, -2);
                         return std::vector<QSubCheck>{check("Z4 = F4(arg)", z4, c.base(SeriesId::F4, arg))};
                     }});
        // level-6 f-functions as eta quotients
        r.push_back({{"L73.a", "level-6 eta quotient = f6a(eta quotient)", 40, false}, [](Ctx& c, bool) {
                         return std::vector<QSubCheck>{check("f6a", c.eta({{1, 6}, {6, 1}, {2, -3}, {3, -2}}),
                                                             c.base(SeriesId::f6a, c.eta({{2, 1}, {6, 5}, {1, -5}, {3, -1}})))};
                     }});
        r.push_back({{"L73.b", "level-6 eta quotient = f6b(eta quotient)", 40, false}, [](Ctx& c, bool) {
                         return std::vector<QSubCheck>{check("f6b", c.eta({{2, 6}, {3, 1}, {1, -3}, {6, -2}}),
                                                             c.base(SeriesId::f6b, c.eta({{1, 4}, {6, 8}, {2, -8}, {3, -4}})))};
                     }});
        r.push_back({{"L73.c", "level-6 eta quotient = f6c(eta quotient); denominator eta^3(6t)", 40, true}, [](Ctx& c, bool printed) {
                         // as displayed the denominator repeats eta(3t)
                         EtaSpec lhs = printed ? EtaSpec{{2, 1}, {3, 6}, {1, -2}, {3, -3}} : EtaSpec{{2, 1}, {3, 6}, {1, -2}, {6, -3}};
                         return std::vector<QSubCheck>{check("f6c", c.eta(lhs), c.base(SeriesId::f6c, c.eta({{1, 3}, {6, 9}, {2, -3}, {3, -9}})))};
                     }});
        // h-parameterizations of level-12 eta products
        r.push_back({{"H7.a", "eta^6(t)eta^6(3t) = z^3 h(1+h^2)(1-4h+h^2)/((1-h^2)(1-h+h^2)^2)", 40, true}, [](Ctx& c, bool printed) {
                         Poly mid = printed ? kOneMinusHH2 : kOneMinus4H;
                         QSeries rhs = z_power(c, 3) * rational_in({{kH, 1}, {kOnePlusH2, 1}, {mid, 1}, {kOneMinusH2, -1}, {kOneMinusHH2, -2}}, c.h(), c.N);
                         return std::vector<QSubCheck>{check("H7.a", c.eta({{1, 6}, {3, 6}}), rhs)};
                     }});
        r.push_back({{"H7.b", "(3P(q^3)-P(q))/2 = z (1+4h-6h^2+4h^3+h^4)^2 / D(h)", 40, false}, [](Ctx& c, bool) {
                         QSeries lhs = lincomb({{Rational(3, 2), c.P(3)}, {Rational(-1, 2), c.P(1)}});
                         QSeries rhs = c.z() * rational_in(with({{{1, 4, -6, 4, 1}, 2}}, discriminant_den()), c.h(), c.N);
                         return std::vector<QSubCheck>{check("H7.b", lhs, rhs)};
                     }});
        r.push_back({{"H7.c", "eta^6(2t)eta^6(6t) = z^3 h^2(1-h^2)/((1+h^2)(1-h+h^2)(1-4h+h^2))", 40, false}, [](Ctx& c, bool) {
                         QSeries rhs = z_power(c, 3) * rational_in({{kH, 2}, {kOneMinusH2, 1}, {kOnePlusH2, -1}, {kOneMinusHH2, -1}, {kOneMinus4H, -1}}, c.h(), c.N);
                         return std::vector<QSubCheck>{check("H7.c", c.eta({{2, 6}, {6, 6}}), rhs)};
                     }});
        r.push_back({{"H7.d", "(3P(q^6)-P(q^2))/2 = z (1-2h+6h^2-2h^3+h^4)^2 / D(h)", 40, true}, [](Ctx& c, bool printed) {
                         Poly num = printed ? Poly{1, -2, 6, -1, 1} : Poly{1, -2, 6, -2, 1};
                         QSeries lhs = lincomb({{Rational(3, 2), c.P(6)}, {Rational(-1, 2), c.P(2)}});
                         QSeries rhs = c.z() * rational_in(with({{num, 2}}, discriminant_den()), c.h(), c.N);
                         return std::vector<QSubCheck>{check("H7.d", lhs, rhs)};
                     }});
        r.push_back({{"H7.e", "eta^6(4t)eta^6(12t) = z^3 h^4(1-h+h^2)/((1+h^2)^2(1-h^2)(1-4h+h^2)^2)", 40, false}, [](Ctx& c, bool) {
                         QSeries rhs = z_power(c, 3) * rational_in({{kH, 4}, {kOneMinusHH2, 1}, {kOnePlusH2, -2}, {kOneMinusH2, -1}, {kOneMinus4H, -2}}, c.h(), c.N);
                         return std::vector<QSubCheck>{check("H7.e", c.eta({{4, 6}, {12, 6}}), rhs)};
                     }});
        r.push_back({{"H7.f", "(3P(q^12)-P(q^4))/2 = z (1-2h-2h^3+h^4)^2 / D(h)", 40, false}, [](Ctx& c, bool) {
                         QSeries lhs = lincomb({{Rational(3, 2), c.P(12)}, {Rational(-1, 2), c.P(4)}});
                         QSeries rhs = c.z() * rational_in(with({{{1, -2, 0, -2, 1}, 2}}, discriminant_den()), c.h(), c.N);
                         return std::vector<QSubCheck>{check("H7.f", lhs, rhs)};
                     }});
        // tau -> tau + 1/2
        r.push_back({{"M1", "eta^6(t)eta^6(3t) at t+1/2 = -eta^18(2t)eta^18(6t)/(eta^6(t)eta^6(3t)eta^6(4t)eta^6(12t))", 40, true},
                     [](Ctx& c, bool printed) {
                         QSeries lhs = make(0, minus_q(c.eta({{1, 6}, {3, 6}}).integral()));
                         EtaSpec rhs = printed ? EtaSpec{{2, 36}, {1, -6}, {3, -6}, {4, -6}, {12, -6}}
                                               : EtaSpec{{2, 18}, {6, 18}, {1, -6}, {3, -6}, {4, -6}, {12, -6}};
                         return std::vector<QSubCheck>{check("M1", lhs, scale(c.eta(rhs), -1))};
                     }});
        r.push_back({{"M2", "P(-q) = -P(q) + 6P(q^2) - 4P(q^4)", 200, false}, [](Ctx& c, bool) {
                         QSeries lhs = make(0, minus_q(c.P(1).s));
                         return std::vector<QSubCheck>{check("M2", lhs, lincomb({{-1, c.P(1)}, {6, c.P(2)}, {-4, c.P(4)}}))};
                     }});
        r.push_back({{"M2b", "(3P(-q^3)-P(-q))/2 in terms of P(q^k)", 200, false}, [](Ctx& c, bool) {
                         QSeries z3 = lincomb({{Rational(3, 2), c.P(3)}, {Rational(-1, 2), c.P(1)}});
                         QSeries lhs = make(0, minus_q(z3.s));
                         QSeries rhs = lincomb({{-1, z3}, {3, lincomb({{3, c.P(6)}, {-1, c.P(2)}})}, {-2, lincomb({{3, c.P(12)}, {-1, c.P(4)}})}});
                         return std::vector<QSubCheck>{check("M2b", lhs, rhs)};
                     }});
        // T1 and T2 series as functions of h
        r.push_back({{"C74", "p = h/(1+h^2), y and Y = y^2 as eta quotients", 40, false}, [](Ctx& c, bool) {
                         const long N = c.N;
                         PowerSeries p_of_h = PowerSeries::monomial("x", N, 1) * ps_inverse(PowerSeries::from_poly("x", N, {1, 0, 1}));
                         QSeries p_eta = c.eta({{1, 1}, {12, 3}, {3, -3}, {4, -1}});
                         QSeries y = c.eta({{2, 1}, {3, 6}, {1, -2}, {6, -3}});
                         QSeries Y = c.eta({{2, 2}, {3, 12}, {1, -4}, {6, -6}});
                         QSeries t1 = compose_h(c.common("T1"), p_eta, N), t2 = compose_h(c.common("T2"), p_eta, N);
                         // z / ((1-p)(1-4p) sqrt(1-4p^2)) written as a series in p
                         PowerSeries w = ps_inverse(PowerSeries::from_poly("x", N, {1, -5, 4})) *
                                         ps_pow_rational(PowerSeries::from_poly("x", N, {1, 0, -4}), Rational(-1, 2));
                         return std::vector<QSubCheck>{
                             check("p = h/(1+h^2)", p_eta, compose_h(p_of_h, c.h(), N)),
                             check("y = common(T2)(p)", y, t2),
                             check("Y = common(T1)(p)", Y, t1),
                             check("Y = y^2", Y, y * y),
                             check("Y = z (1+h^2)^3/((1-h^2)(1-h+h^2)(1-4h+h^2))", Y,
                                   c.z() * rational_in({{kOnePlusH2, 3}, {kOneMinusH2, -1}, {kOneMinusHH2, -1}, {kOneMinus4H, -1}}, c.h(), N)),
                             check("Y = z/((1-p)(1-4p)sqrt(1-4p^2))", Y, c.z() * compose_h(w, p_eta, N))};
                     }});
        r.push_back({{"PK2", "p = k/(1-k^2) = eta(t)eta^5(10t)/(eta(2t)eta^5(5t))", 40, false}, [](Ctx& c, bool) {
                         PowerSeries p_of_k = PowerSeries::monomial("x", c.N, 1) * ps_inverse(PowerSeries::from_poly("x", c.N, {1, 0, -1}));
                         return std::vector<QSubCheck>{check("PK2", c.eta({{1, 1}, {10, 5}, {2, -1}, {5, -5}}), compose_h(p_of_k, c.k(), c.N))};
                     }});
        r.push_back({{"PK3", "(p(1+p)^5(1-4p)^5)^(-1/4) eta^2(t)eta^2(2t) = eta(2t)eta^10(5t)/(eta^2(t)eta^5(10t))", 40, false},
                     [](Ctx& c, bool) {
                         QSeries p = c.eta({{1, 1}, {10, 5}, {2, -1}, {5, -5}});
                         PowerSeries v = ps_pow_int(PowerSeries::from_poly("x", c.N, {1, 1}), 5) *
                                         ps_pow_int(PowerSeries::from_poly("x", c.N, {1, -4}), 5);
                         QSeries inner = p * compose_h(v, p, c.N);
                         QSeries lhs = qs_pow_rational(inner, Rational(-1, 4)) * c.eta({{1, 2}, {2, 2}});
                         return std::vector<QSubCheck>{check("PK3", lhs, c.eta({{2, 1}, {5, 10}, {1, -2}, {10, -5}}))};
                     }});
        r.push_back({{"T75", "eta(2t)eta^10(5t)/(eta^2(t)eta^5(10t)) = sum b(n) p^n at the level-10 p", 30, false}, [](Ctx& c, bool) {
                         QSeries p = c.eta({{1, 1}, {10, 5}, {2, -1}, {5, -5}});
                         return std::vector<QSubCheck>{check("T75", c.eta({{2, 1}, {5, 10}, {1, -2}, {10, -5}}), compose_h(c.common("T3"), p, c.N))};
                     }});
        return r;
    }();
    return reg;
}

}  // namespace

PowerSeries QSeries::integral() const {
    if (frac24 < 0 || frac24 % 24 != 0) throw QSeriesError("q-series has a fractional or negative leading exponent");
    long k = frac24 / 24;
    PowerSeries r("q", order());
    for (long i = 0; i + k <= order(); ++i) r[i + k] = s[i];
    return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) { return make(a.frac24 + b.frac24, a.s * b.s); }

QSeries operator+(const QSeries& a, const QSeries& b) {
    auto al = align(a, b);
    if (!al) throw QSeriesError("sum of q-series with incompatible leading exponents");
    return make(al->first.frac24, al->first.s + al->second.s);
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + scale(b, -1); }

QSeries qs_pow(const QSeries& a, long e) { return make(a.frac24 * e, ps_pow_int(a.s, e)); }

QSeries eta_quotient(const EtaSpec& spec, long N) {
    if (N < 0) throw QSeriesError("negative order");
    std::vector<Rational> c(static_cast<size_t>(N + 1), Rational(0));
    c[0] = 1;
    long f = 0;
    for (const auto& [m, e] : spec) {
        if (m <= 0) throw QSeriesError("eta multiplier must be positive");
        f += m * e;
        for (long j = 1; m * j <= N; ++j)
            for (long t = 0; t < (e < 0 ? -e : e); ++t) times_factor(c, m * j, e < 0);
    }
    return make(f, PowerSeries("q", std::move(c)));
}

QSeries eisenstein(Eisenstein kind, long m, long N) {
    if (m <= 0) throw QSeriesError("multiplier must be positive");
    PowerSeries s = PowerSeries::constant("q", N, 1);
    for (long j = 1; j * m <= N; ++j)
        s[j * m] = kind == Eisenstein::P ? Rational(-24 * sigma(1, j)) : Rational(240 * sigma(3, j));
    return make(0, s);
}

QSeries hauptmodul(int level, long N) {
    std::vector<long> num, den;
    long mod;
    if (level == 12) {
        mod = 12, num = {1, 11}, den = {5, 7};
    } else if (level == 10) {
        mod = 10, num = {1, 9, 2, 8}, den = {3, 7, 4, 6};
    } else {
        throw QSeriesError("hauptmodul level must be 12 or 10");
    }
    std::vector<Rational> c(static_cast<size_t>(N + 1), Rational(0));
    c[0] = 1;
    for (long j = 1; j <= N; ++j) {
        long r = j % mod;
        if (std::find(num.begin(), num.end(), r) != num.end()) times_factor(c, j, false);
        if (std::find(den.begin(), den.end(), r) != den.end()) times_factor(c, j, true);
    }
    return make(24, PowerSeries("q", std::move(c)));
}

QSeries logderiv_z(const QSeries& hs, long N) {
    if (hs.frac24 != 24 || hs.s[0] != 1) throw QSeriesError("logderiv_z needs a series q(1 + ...)");
    PowerSeries u = hs.s.truncate(std::min(N, hs.order()));
    PowerSeries th = u;
    for (long n = 0; n <= th.order(); ++n) th[n] *= Rational(n);
    PowerSeries z = th / u;
    z[0] += 1;
    return make(0, z);
}

QSeries compose_h(const PowerSeries& outer, const QSeries& hs, long N) {
    if (hs.frac24 != 24 || hs.s[0] == 0) throw QSeriesError("compose_h needs an inner series q(c + ...)");
    N = std::min(N, hs.order());
    if (outer.order() < N) throw QSeriesError("outer series shorter than the q-order");
    return make(0, ps_compose(outer.truncate(N).with_var("x"), hs.integral().truncate(N)));
}

PowerSeries minus_q(const PowerSeries& f) {
    PowerSeries r = f;
    for (long i = 1; i <= r.order(); i += 2) r[i] = -r[i];
    return r;
}

const std::vector<QIdentityInfo>& q_identities() {
    static const std::vector<QIdentityInfo> infos = [] {
        std::vector<QIdentityInfo> v;
        for (const auto& r : registry()) v.push_back(r.info);
        return v;
    }();
    return infos;
}

QReport verify_q_identity(const std::string& id, long N, const Catalog& cat) {
    for (const auto& r : registry()) {
        if (r.info.id != id) continue;
        QReport rep;
        rep.id = id;
        rep.order = N;
        Ctx ctx{N, cat, {}};
        rep.checks = r.run(ctx, false);
        rep.certified = !rep.checks.empty();
        for (const auto& c : rep.checks) rep.certified = rep.certified && c.certified;
        if (r.info.has_printed) {
            auto pc = r.run(ctx, true);
            QSubCheck s = pc.front();
            s.name = "as printed";
            for (const auto& c : pc)
                if (!c.certified) {
                    s = c;
                    s.name = "as printed";
                }
            rep.as_printed = s;
        }
        return rep;
    }
    throw QSeriesError("unknown q-identity " + id);
}

Json to_json(const QSeries& q) {
    Json j = to_json(q.s);
    j["frac24"] = q.frac24;
    return j;
}

namespace {

Json sub_json(const QSubCheck& c) {
    Json j = {{"name", c.name}, {"status", c.certified ? "certified" : "failed"}};
    if (c.mismatch)
        j["first_mismatch"] = {{"power", c.mismatch->power}, {"lhs", to_string(c.mismatch->ca)}, {"rhs", to_string(c.mismatch->cb)}};
    else
        j["first_mismatch"] = nullptr;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

}  // namespace

Json to_json(const QReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(sub_json(c));
    Json j = {{"id", r.id}, {"order", r.order}, {"status", r.certified ? "certified" : "failed"}, {"checks", checks}};
    if (r.as_printed) j["as_printed"] = sub_json(*r.as_printed);
    return j;
}

}  // namespace hypermod
