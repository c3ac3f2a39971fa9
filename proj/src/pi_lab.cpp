#include "hypermod/pi_lab.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdio>
#include <optional>

#include "hypermod/verifier.hpp"

namespace hypermod {

namespace {

constexpr long kTermCap = 200000;

Rational abs_upper(const Ball& b) {
    Rational lo = abs(b.lower()), hi = abs(b.upper());
    return lo > hi ? lo : hi;
}

Ball inflate(const Ball& b, const Rational& t) {
    return Ball(b.mid(), dy_add(b.rad(), dy_from_rational(t, 64, Round::up)));
}

int hyper_level(SeriesId id) {
    switch (id) {
        case SeriesId::F1: return 1;
        case SeriesId::F2: return 2;
        case SeriesId::F3: return 3;
        case SeriesId::F4: return 4;
        default: return 0;
    }
}

QuadFieldElem to_field(const QuadFieldElem& v, long d1, long d2) {
    if (v.d1() == d1 && v.d2() == d2) return v;
    if (v.is_rational()) return QuadFieldElem::rational(d1, d2, v[0]);
    return v.embed(d1, d2);
}

// Boundary point x0 = -1/64 of the level-4 series. The terms are (-1)^k a_k with
// a_k = (k + lambda) c_k, c_k = ((1/2)_k / k!)^3. Both c_k and (k+1) c_k are Hausdorff
// moment sequences of probability measures on [0,1], so a_k are the moments of a signed
// measure of total variation at most 1 + |lambda - 1|.
Ball sum_boundary(const PiSeriesCase& c, long digits, int level) {
    if (level != 4 || !c.point.is_rational() || !c.lambda.is_rational())
        throw PiError(c.id + ": acceleration is only supported for the level-4 boundary");
    Rational x = c.point[0];
    if (x * 4 * hyper_constant(level) != -1) throw PiError(c.id + ": boundary point is not -1/(4C)");
    Rational lam = c.lambda[0];
    Rational tv = 1 + abs(lam - 1);
    Rational target = ten_pow(-digits) / 4;

    long n = 1;
    Integer dprev = 1, d = 3;  // T_n(3)
    while (2 * tv / Rational(d) >= target) {
        Integer next = 6 * d - dprev;
        dprev = d;
        d = next;
        if (++n > kTermCap) throw PiError(c.id + ": precision target unreachable");
    }

    Rational mx = -x, xp = 1, b = -1, cc = Rational(-d), s = 0;
    for (long k = 0; k < n; ++k) {
        Rational a = (lam + k) * series_coeff(c.base, k) * xp;
        cc = b - cc;
        s += cc * a;
        b = b * Rational((k + n) * (k - n)) / ((Rational(k) + Rational(1, 2)) * (k + 1));
        xp *= mx;
    }
    long prec = digits_to_bits(digits) + 8;
    return inflate(Ball::from_rational(s / Rational(d), prec), 2 * tv / Rational(d));
}

// sum_{k<K} (-1)^k / ((2k+1) m^(2k+1)) and the bound on the rest
std::pair<Rational, Rational> atan_inv(long m, const Rational& tol) {
    Rational sum = 0;
    Integer mp = m, m2 = Integer(m) * m;
    for (long k = 0;; ++k) {
        Rational t(Integer(1), (2 * k + 1) * mp);
        if (t < tol) return {sum, t};
        sum += (k % 2 == 0) ? t : Rational(-t);
        mp *= m2;
    }
}

Ball pi_from(const std::vector<std::pair<long, long>>& terms, long digits) {
    if (digits < 1) throw PiError("digits must be positive");
    Rational tol = ten_pow(-digits) / 200;
    Rational v = 0, err = 0;
    for (auto [w, m] : terms) {
        auto [s, e] = atan_inv(m, tol);
        v += w * s;
        err += abs(Rational(w)) * e;
    }
    long prec = digits_to_bits(digits) + 8;
    return inflate(Ball::from_rational(v, prec), err);
}

RatPoly poly_rem(RatPoly a, const RatPoly& b) {
    poly_trim(a);
    while (!a.empty() && a.size() >= b.size()) {
        Rational q = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

long sign_changes(const std::vector<RatPoly>& seq, const Rational& x) {
    long changes = 0;
    int last = 0;
    for (const auto& p : seq) {
        int s = sgn(poly_eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

Ball poly_eval_ball(const RatPoly& p, const Ball& x, long prec) {
    Ball r = Ball::exact(0);
    for (size_t i = p.size(); i-- > 0;) r = add(mul(r, x, prec), Ball::from_rational(p[i], prec), prec);
    return r;
}

// decimal string -> value and number of fractional digits
std::pair<Rational, long> parse_decimal(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return {parse_rational(s), 0};
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    long k = static_cast<long>(s.size() - dot - 1);
    return {Rational(Integer(digits, 10)) * ten_pow(-k), k};
}

const TheoremGroup* group_of(const Catalog& cat, const std::string& entry) {
    for (const auto& g : cat.groups)
        for (const auto& e : g.entries)
            if (e.id == entry) return &g;
    return nullptr;
}

bool claim_matches(const Claim& cl, const QuadFieldElem& v) {
    if (cl.is_field) return cl.f == v;
    return v.is_rational() && v[0] == cl.q;
}

std::string claim_string(const Claim& cl) { return cl.is_field ? cl.f.to_string() : to_string(cl.q); }

struct EquivContext {
    const Catalog& cat;
    PiReport& rep;
    long digits;
    long prec;
};

void exact(PiReport& r, std::string name, bool pass, std::string detail = "") {
    r.exact_checks.push_back({std::move(name), pass, std::move(detail)});
}

void ball(PiReport& r, std::string name, const Rational& width, bool pass, std::string detail = "") {
    r.ball_checks.push_back({std::move(name), width, pass, std::move(detail)});
}

// |arg| * growth < 1, or the point sits exactly on the radius of a boundary-flagged series
void radius_check(EquivContext& cx, const IdentityEntry& e, const Ball& arg, std::optional<QuadFieldElem> exact_arg) {
    Rational g = growth_bound(e.base);
    std::string name = "argument " + e.id + " inside radius";
    if (exact_arg && exact_arg->is_rational() && abs((*exact_arg)[0]) * g == 1) {
        bool boundary = false;
        for (const auto& pc : cx.cat.pi_series)
            if (pc.boundary && pc.point.is_rational() && pc.point[0] == (*exact_arg)[0] && pc.base == e.base)
                boundary = true;
        exact(cx.rep, "argument " + e.id + " on radius", boundary,
              boundary ? "handled by the accelerated boundary series" : "on the radius without a boundary series");
        return;
    }
    Rational up = abs_upper(arg) * g;
    ball(cx.rep, name, arg.width(), up < 1, "|arg|*growth <= " + sci(up));
}

void linked_pair(EquivContext& cx, const QuadFieldElem& p, const EquivalencePair& pr, const IdentityEntry& a,
                 const IdentityEntry& b, const PiSeriesCase& ca, const PiSeriesCase& cb) {
    PiReport& r = cx.rep;
    const long d1 = p.d1(), d2 = p.d2();
    std::string tag = a.id + "->" + b.id;

    exact(r, "argument " + a.id + " = point of " + ca.id, eval_argument(a.argument, p) == to_field(ca.point, d1, d2));
    exact(r, "argument " + b.id + " = point of " + cb.id, eval_argument(b.argument, p) == to_field(cb.point, d1, d2));
    if (pr.lambda)
        exact(r, tag + " lambda = lambda of " + ca.id,
              to_field(ca.lambda, d1, d2) == QuadFieldElem::rational(d1, d2, *pr.lambda));

    QuadFieldElem lx = argument_logderiv(a.argument, p), ly = argument_logderiv(b.argument, p);
    QuadFieldElem R, LR;
    try {
        R = prefactor_squared(b.prefactor, p) / prefactor_squared(a.prefactor, p);
        LR = prefactor_sq_logderiv(b.prefactor, p) - prefactor_sq_logderiv(a.prefactor, p);
    } catch (const std::exception& ex) {
        exact(r, tag + " constants", false, ex.what());
        return;
    }
    QuadFieldElem lam = to_field(ca.lambda, d1, d2);
    QuadFieldElem ratio = ly / lx;
    QuadFieldElem A2 = R * ratio * ratio;
    QuadFieldElem AB = R * ratio * (LR / (lx * Rational(2)) + lam);
    QuadFieldElem mu = AB / A2;
    exact(r, tag + " translated lambda = lambda of " + cb.id, mu == to_field(cb.lambda, d1, d2), mu.to_string());
    QuadFieldElem ra = ca.rhs * ca.rhs, rb = cb.rhs * cb.rhs;
    QuadFieldElem want = to_field(ra, d1, d2) / to_field(rb, d1, d2);
    exact(r, tag + " constant squared = (rhs ratio)^2", A2 == want, A2.to_string());

    if (pr.lambda) {
        const TheoremGroup* g = group_of(cx.cat, a.id);
        CheckReport t = verify_translate_formal(a, b, *pr.lambda, g ? g->variable : "p", 40);
        exact(r, tag + " formal translation to order 40", t.certified, t.note);
    }

    // Ball side: sign of the constant and the numeric relation between the two sums.
    long dd = std::min({cx.digits, ca.digits, cb.digits});
    long prec = digits_to_bits(dd) + 32;
    try {
        Ball pb = qf_to_ball(p, prec);
        Ball A = mul(qf_to_ball(ratio, prec),
                     div(eval_prefactor(b.prefactor, pb, prec), eval_prefactor(a.prefactor, pb, prec), prec), prec);
        Ball want_b = div(qf_to_ball(ca.rhs, prec), qf_to_ball(cb.rhs, prec), prec);
        ball(r, tag + " constant = rhs ratio", A.width(), A.overlaps(want_b) && A.excludes_zero());
        Ball sa = sum_series_at(ca, dd), sb = sum_series_at(cb, dd);
        Ball rhs = mul(A, sb, prec);
        Rational w = sa.width() + rhs.width();
        ball(r, tag + " " + ca.id + " sum = constant * " + cb.id + " sum (" + std::to_string(dd) + " digits)", w,
             sa.overlaps(rhs) && w < 2 * ten_pow(-dd));
    } catch (const std::exception& ex) {
        ball(r, tag + " numeric relation", 0, false, ex.what());
    }
}

void claims_check(EquivContext& cx, const EquivalenceCase& c, const QuadFieldElem& p) {
    auto entry = [&](const std::string& id) -> const IdentityEntry& {
        const IdentityEntry* e = cx.cat.find_entry(id);
        if (!e) throw PiError("unknown entry " + id);
        return *e;
    };
    for (const auto& [name, cl] : c.claims) {
        std::optional<QuadFieldElem> v;
        try {
            if (name.rfind("arg:", 0) == 0) {
                v = eval_argument(entry(name.substr(4)).argument, p);
            } else if (!c.pairs.empty()) {
                const IdentityEntry& a = entry(c.pairs[0].a);
                const IdentityEntry& b = entry(c.pairs[0].b);
                QuadFieldElem x = eval_argument(a.argument, p), y = eval_argument(b.argument, p);
                QuadFieldElem lx = argument_logderiv(a.argument, p), ly = argument_logderiv(b.argument, p);
                auto R = [&] { return prefactor_squared(b.prefactor, p) / prefactor_squared(a.prefactor, p); };
                if (name == "x") v = x;
                else if (name == "y") v = y;
                else if (name == "r_squared") v = R();
                else if (name == "dydx_squared") {
                    QuadFieldElem d = y * ly / (x * lx);
                    v = d * d;
                } else if (name == "drdx_squared") {
                    QuadFieldElem LR = prefactor_sq_logderiv(b.prefactor, p) - prefactor_sq_logderiv(a.prefactor, p);
                    QuadFieldElem den = x * lx;
                    v = R() * LR * LR / (den * den * Rational(4));
                } else if (name == "second_pair_y" && c.pairs.size() > 1) {
                    v = eval_argument(entry(c.pairs[1].b).argument, p);
                }
            }
        } catch (const std::exception& ex) {
            exact(cx.rep, "claim " + name, false, ex.what());
            continue;
        }
        if (!v) {
            exact(cx.rep, "claim " + name, false, "no rule for this claim");
            continue;
        }
        exact(cx.rep, "claim " + name, claim_matches(cl, *v), claim_string(cl) + " vs " + v->to_string());
    }
}

void decimal_check(PiReport& r, const std::string& dec, const Rational& lo, const Rational& hi) {
    if (dec.empty()) return;
    auto [d, k] = parse_decimal(dec);
    Rational half = ten_pow(-k) / 2;
    bool pass = lo >= d - half && hi <= d + half;
    r.ball_checks.push_back({"p matches " + dec, hi - lo, pass, ""});
}

}  // namespace

std::string sci(const Rational& q) {
    mpf_class f(q, 128);
    char buf[64];
    gmp_snprintf(buf, sizeof buf, "%.2Fe", f.get_mpf_t());
    return buf;
}

bool PiReport::certified() const {
    for (const auto& c : exact_checks)
        if (!c.pass) return false;
    for (const auto& c : ball_checks)
        if (!c.pass) return false;
    return !exact_checks.empty() || !ball_checks.empty();
}

Ball sum_series_at(const PiSeriesCase& c, long digits) {
    if (digits < 1) throw PiError("digits must be positive");
    int level = hyper_level(c.base);
    if (level == 0) throw PiError(c.id + ": unsupported base series " + to_string(c.base));
    if (c.boundary) return sum_boundary(c, digits, level);

    Rational four_c = 4 * hyper_constant(level);
    // a(n+1)/a(n) = 4C (n+s)(n+1-s)(n+1/2)/(n+1)^3 <= 4C
    Rational xa = abs_upper(qf_to_ball(c.point, 64));
    Rational la = abs_upper(qf_to_ball(c.lambda, 64));
    if (xa * four_c >= 1) throw PiError(c.id + ": point outside the convergence disc");
    Rational target = ten_pow(-digits) / 4;

    QuadFieldElem sum(c.point.d1(), c.point.d2()), xp = QuadFieldElem::rational(c.point.d1(), c.point.d2(), 1);
    Rational tail = -1;
    for (long n = 0; n < kTermCap; ++n) {
        QuadFieldElem t = (c.lambda + Rational(n)) * xp * series_coeff(c.base, n);
        if (n > la + 1) {
            Rational rho = four_c * xa * (n + 1 + la) / (n - la);
            if (rho < 1) {
                Rational bound = abs_upper(qf_to_ball(t, 64)) / (1 - rho);
                if (bound < target) {
                    tail = bound;
                    break;
                }
            }
        }
        sum += t;
        xp *= c.point;
    }
    if (tail < 0) throw PiError(c.id + ": precision target unreachable");
    Ball b = inflate(qf_to_ball(sum, digits_to_bits(digits) + 8), tail);
    if (b.width() >= ten_pow(-digits)) throw PiError(c.id + ": precision target unreachable");
    return b;
}

Ball pi_reference(long digits) { return pi_from({{16, 5}, {-4, 239}}, digits); }

Ball pi_reference_gauss(long digits) { return pi_from({{48, 18}, {32, 57}, {-20, 239}}, digits); }

long sturm_count(const RatPoly& p0, const Rational& a, const Rational& b) {
    RatPoly p = p0;
    poly_trim(p);
    if (p.size() < 2) return 0;
    std::vector<RatPoly> seq{p, poly_derivative(p)};
    while (true) {
        RatPoly r = poly_rem(seq[seq.size() - 2], seq.back());
        if (r.empty()) break;
        for (auto& x : r) x = -x;
        seq.push_back(std::move(r));
    }
    return sign_changes(seq, a) - sign_changes(seq, b);
}

std::pair<Rational, Rational> refine_root(const RatPoly& p, Rational lo, Rational hi, const Rational& width) {
    int slo = sgn(poly_eval(p, lo));
    if (slo == 0) return {lo, lo};
    if (sgn(poly_eval(p, hi)) == slo) throw PiError("no sign change on the interval");
    while (hi - lo >= width) {
        Rational mid = (lo + hi) / 2;
        int s = sgn(poly_eval(p, mid));
        if (s == 0) return {mid, mid};
        (s == slo ? lo : hi) = mid;
    }
    return {lo, hi};
}

PiReport verify_pi_formula(const PiSeriesCase& c, long digits) {
    PiReport r;
    r.id = c.id;
    r.digits = digits;
    try {
        long prec = digits_to_bits(digits) + 16;
        int level = hyper_level(c.base);
        if (level == 0) throw PiError(c.id + ": unsupported base series");
        Rational four_c = 4 * hyper_constant(level);
        if (c.boundary) {
            exact(r, "point on the radius", c.point.is_rational() && c.point[0] * four_c == -1);
        } else {
            Ball xb = qf_to_ball(c.point, 64);
            Rational up = abs_upper(xb) * four_c;
            ball(r, "term ratio bound below 1", xb.width(), up < 1, sci(up));
        }
        Ball lhs = sum_series_at(c, digits);
        Ball rhs = div(qf_to_ball(c.rhs, prec), pi_reference(digits + 5), prec);
        Rational eps = ten_pow(-digits);
        ball(r, "series sum", lhs.width(), lhs.width() < eps, lhs.to_string(std::min<long>(digits, 30)));
        ball(r, "constant / pi", rhs.width(), rhs.width() < eps, rhs.to_string(std::min<long>(digits, 30)));
        Rational w = lhs.width() + rhs.width();
        ball(r, "sum = constant / pi", w, lhs.overlaps(rhs) && w < 2 * eps);
    } catch (const std::exception& ex) {
        exact(r, "evaluation", false, ex.what());
    }
    return r;
}

PiReport verify_equivalence_case(const EquivalenceCase& c, long digits, const Catalog& cat) {
    PiReport r;
    r.id = c.id;
    r.digits = digits;
    EquivContext cx{cat, r, digits, digits_to_bits(digits) + 32};
    const EquivalencePoint& pt = c.point;

    std::vector<std::pair<const IdentityEntry*, const IdentityEntry*>> pairs;
    for (const auto& pr : c.pairs) {
        const IdentityEntry *a = cat.find_entry(pr.a), *b = cat.find_entry(pr.b);
        if (!a || !b) {
            exact(r, "pair " + pr.a + "/" + pr.b, false, "unknown entry");
            return r;
        }
        pairs.emplace_back(a, b);
    }
    auto each_entry = [&](auto&& fn) {
        std::vector<std::string> seen;
        for (auto [a, b] : pairs)
            for (const IdentityEntry* e : {a, b}) {
                if (std::find(seen.begin(), seen.end(), e->id) != seen.end()) continue;
                seen.push_back(e->id);
                fn(*e);
            }
    };

    try {
        switch (pt.kind) {
            case EquivalencePoint::Kind::field: {
                const QuadFieldElem& p = pt.value;
                each_entry([&](const IdentityEntry& e) {
                    QuadFieldElem v = eval_argument(e.argument, p);
                    exact(r, "argument " + e.id + " evaluated in the field", true, v.to_string());
                    radius_check(cx, e, qf_to_ball(v, cx.prec), v);
                });
                claims_check(cx, c, p);
                if (!c.pi_links.empty() && c.pi_links.size() == c.pairs.size() + 1) {
                    for (size_t i = 0; i < c.pairs.size(); ++i) {
                        const PiSeriesCase *ca = cat.find_pi(c.pi_links[i]), *cb = cat.find_pi(c.pi_links[i + 1]);
                        if (!ca || !cb) {
                            exact(r, "linked series", false, "unknown series case");
                            continue;
                        }
                        linked_pair(cx, p, c.pairs[i], *pairs[i].first, *pairs[i].second, *ca, *cb);
                    }
                } else {
                    r.notes.push_back("constants of the paired series are not part of the catalog; only the point and the arguments are certified");
                }
                break;
            }
            case EquivalencePoint::Kind::root: {
                RatPoly P = to_ratpoly(pt.poly);
                exact(r, "one root in the interval", sturm_count(P, pt.lo, pt.hi) == 1);
                exact(r, "no smaller positive root", sturm_count(P, 0, pt.lo) == 0);
                auto [lo, hi] = refine_root(P, pt.lo, pt.hi, ten_pow(-digits));
                Ball pb = inflate(Ball::from_rational((lo + hi) / 2, cx.prec), (hi - lo) / 2);
                Ball val = poly_eval_ball(P, pb, cx.prec);
                ball(r, "p satisfies its polynomial", val.width(), val.contains(Rational(0)));
                decimal_check(r, pt.decimal, lo, hi);
                r.notes.push_back("p = " + pb.to_string(std::min<long>(digits, 30)));
                each_entry([&](const IdentityEntry& e) {
                    radius_check(cx, e, eval_argument(e.argument, pb, cx.prec), std::nullopt);
                });
                r.notes.push_back("constants of the paired series are not part of the catalog; only the point and the arguments are certified");
                break;
            }
            case EquivalencePoint::Kind::nested: {
                Ball rad = qf_to_ball(pt.radicand, cx.prec);
                Ball pb = add(qf_to_ball(pt.base, cx.prec),
                              mul(Ball::from_rational(pt.coef, cx.prec), sqrt(rad, cx.prec), cx.prec), cx.prec);
                ball(r, "radicand positive", rad.width(), rad.is_positive());
                decimal_check(r, pt.decimal, pb.lower(), pb.upper());
                r.notes.push_back("p = " + pb.to_string(std::min<long>(digits, 30)));
                each_entry([&](const IdentityEntry& e) {
                    radius_check(cx, e, eval_argument(e.argument, pb, cx.prec), std::nullopt);
                });
                r.notes.push_back("p is a nested radical outside the quadratic fields used here; checks are ball-only");
                break;
            }
        }
    } catch (const std::exception& ex) {
        exact(r, "evaluation", false, ex.what());
    }
    return r;
}

Json to_json(const PiReport& r) {
    Json ex = Json::array(), bc = Json::array();
    for (const auto& c : r.exact_checks) {
        Json j{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        ex.push_back(j);
    }
    for (const auto& c : r.ball_checks) {
        Json j{{"name", c.name}, {"width", sci(c.width)}, {"status", c.pass ? "pass" : "fail"}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        bc.push_back(j);
    }
    Json j{{"case", r.id}, {"digits", r.digits}, {"status", r.certified() ? "certified" : "failed"}, {"exact_checks", ex}, {"ball_checks", bc}};
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

}  // namespace hypermod
