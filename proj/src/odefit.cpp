#include "hypermod/odefit.hpp"

#include <algorithm>
#include <sstream>

#include "hypermod/verifier.hpp"

namespace hypermod {

namespace {

void trim(IntPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// falling factorial m (m-1) ... (m-i+1)
Integer falling(long m, long i) {
    Integer r = 1;
    for (long l = 0; l < i; ++l) r *= m - l;
    return r;
}

using Row = std::vector<Integer>;

void make_primitive(Row& r) {
    Integer g = 0;
    for (const auto& x : r) g = gcd(g, x);
    if (g > 1)
        for (auto& x : r) x /= g;
}

// Nullspace of an integer matrix via fraction-free elimination; one vector per free column.
std::vector<std::vector<Rational>> nullspace(std::vector<Row> m, size_t cols) {
    std::vector<long> pivot_col;
    size_t row = 0;
    for (size_t c = 0; c < cols && row < m.size(); ++c) {
        size_t p = row;
        while (p < m.size() && sgn(m[p][c]) == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || sgn(m[i][c]) == 0) continue;
            Integer a = m[row][c], b = m[i][c];
            for (size_t k = 0; k < cols; ++k) m[i][k] = m[i][k] * a - m[row][k] * b;
            make_primitive(m[i]);
        }
        pivot_col.push_back(static_cast<long>(c));
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (long c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i) {
            size_t pc = static_cast<size_t>(pivot_col[i]);
            v[pc] = -Rational(m[i][f]) / Rational(m[i][pc]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearODE from_vector(const std::vector<Rational>& v, long r, long d) {
    Integer l = 1;
    for (const auto& x : v) l = lcm(l, x.get_den());
    LinearODE ode;
    for (long i = 0; i <= r; ++i) {
        IntPoly p;
        for (long j = 0; j <= d; ++j) {
            Rational x = v[static_cast<size_t>(i * (d + 1) + j)] * Rational(l);
            p.push_back(x.get_num());
        }
        trim(p);
        ode.polys.push_back(std::move(p));
    }
    return normalize(std::move(ode));
}

// flattened, for the deterministic tie-break
std::vector<Integer> flat(const LinearODE& o) {
    std::vector<Integer> f;
    for (const auto& p : o.polys) {
        f.push_back(Integer(static_cast<long>(p.size())));
        f.insert(f.end(), p.begin(), p.end());
    }
    return f;
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

void poly_add_to(RatPoly& acc, const RatPoly& b) {
    if (acc.size() < b.size()) acc.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) acc[i] += b[i];
}

// p(n + s)
RatPoly taylor_shift(const RatPoly& p, long s) {
    RatPoly r;
    RatPoly lin{Rational(s), Rational(1)};
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        r = poly_mul(r, lin);
        if (r.empty()) r.push_back(0);
        r[0] += *it;
    }
    poly_trim(r);
    return r;
}

std::string poly_string(const RatPoly& p, const std::string& var) {
    std::ostringstream os;
    bool first = true;
    for (long k = static_cast<long>(p.size()) - 1; k >= 0; --k) {
        const Rational& c = p[static_cast<size_t>(k)];
        if (sgn(c) == 0) continue;
        Rational a = abs(c);
        if (first) os << (sgn(c) < 0 ? "-" : "");
        else os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        bool unit = a == 1 && k > 0;
        if (!unit) os << a.get_str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return first ? "0" : os.str();
}

std::string shift_string(long k) {
    if (k == 0) return "t(n)";
    return "t(n" + std::string(k > 0 ? "+" : "-") + std::to_string(k > 0 ? k : -k) + ")";
}

}  // namespace

long LinearODE::degree() const {
    long d = -1;
    for (const auto& p : polys) d = std::max(d, static_cast<long>(p.size()) - 1);
    return d;
}

LinearODE normalize(LinearODE ode) {
    for (auto& p : ode.polys) trim(p);
    while (!ode.polys.empty() && ode.polys.back().empty()) ode.polys.pop_back();
    if (ode.polys.empty()) throw FitError("zero operator");
    Integer g = 0;
    for (const auto& p : ode.polys)
        for (const auto& c : p) g = gcd(g, c);
    const IntPoly& top = ode.polys.back();
    Integer lead = *std::find_if(top.begin(), top.end(), [](const Integer& c) { return sgn(c) != 0; });
    if (sgn(lead) < 0) g = -g;
    for (auto& p : ode.polys)
        for (auto& c : p) c /= g;
    return ode;
}

std::optional<LinearODE> fit_linear_ode(const PowerSeries& s, long max_order, long max_degree) {
    const long N = s.order();
    if (max_order < 0 || max_degree < 0) throw FitError("bounds must be nonnegative");
    if (N < (max_order + 1) * (max_degree + 1) + max_order + kFitSurplus)
        throw FitError("series too short: need order >= " +
                       std::to_string((max_order + 1) * (max_degree + 1) + max_order + kFitSurplus));
    for (long r = 0; r <= max_order; ++r) {
        // derivatives y^(i)[m] = (m+i)!/m! y[m+i], known for m <= N - i
        std::vector<std::vector<Rational>> der(r + 1);
        for (long i = 0; i <= r; ++i)
            for (long m = 0; m + i <= N; ++m) der[i].push_back(Rational(falling(m + i, i)) * s[m + i]);
        for (long d = 0; d <= max_degree; ++d) {
            const size_t cols = static_cast<size_t>((r + 1) * (d + 1));
            std::vector<Row> rows;
            for (long n = 0; n <= N - r; ++n) {
                std::vector<Rational> q(cols, Rational(0));
                Integer l = 1;
                for (long i = 0; i <= r; ++i)
                    for (long j = 0; j <= d && j <= n; ++j) {
                        Rational v = der[i][static_cast<size_t>(n - j)];
                        q[static_cast<size_t>(i * (d + 1) + j)] = v;
                        l = lcm(l, v.get_den());
                    }
                Row row(cols);
                for (size_t k = 0; k < cols; ++k) row[k] = Rational(q[k] * Rational(l)).get_num();
                make_primitive(row);
                rows.push_back(std::move(row));
            }
            auto basis = nullspace(std::move(rows), cols);
            if (basis.empty()) continue;
            std::optional<LinearODE> best;
            for (const auto& v : basis) {
                LinearODE o = from_vector(v, r, d);
                if (!best || flat(o) < flat(*best)) best = o;
            }
            return best;
        }
    }
    return std::nullopt;
}

PowerSeries ode_residual(const LinearODE& ode, const PowerSeries& s, long N) {
    N = std::min(N, s.order());
    const long r = ode.order();
    PowerSeries out(s.var(), std::max(0L, N - r));
    if (N < r) return out;
    PowerSeries d = s.truncate(N);
    for (long i = 0; i <= r; ++i) {
        const IntPoly& p = ode.polys[static_cast<size_t>(i)];
        for (long n = 0; n <= N - r; ++n)
            for (long j = 0; j < static_cast<long>(p.size()) && j <= n; ++j)
                if (sgn(p[j]) != 0) out[n] += Rational(p[j]) * d[n - j];
        if (i < r) d = ps_derivative(d);
    }
    return out;
}

Recurrence ode_to_recurrence(const LinearODE& ode) {
    long lo = 0, hi = 0;
    bool any = false;
    for (long i = 0; i <= ode.order(); ++i)
        for (long j = 0; j < static_cast<long>(ode.polys[i].size()); ++j)
            if (sgn(ode.polys[i][j]) != 0) {
                lo = any ? std::min(lo, i - j) : i - j;
                hi = any ? std::max(hi, i - j) : i - j;
                any = true;
            }
    if (!any) throw FitError("zero operator");
    std::vector<RatPoly> polys(static_cast<size_t>(hi - lo + 1));
    for (long i = 0; i <= ode.order(); ++i)
        for (long j = 0; j < static_cast<long>(ode.polys[i].size()); ++j) {
            const Integer& c = ode.polys[i][j];
            if (sgn(c) == 0) continue;
            long k = i - j;
            // coefficient of p^n in p^j y^(i) is (n+k)(n+k-1)...(n+k-i+1) t(n+k)
            RatPoly f{Rational(c)};
            for (long l = 0; l < i; ++l) f = poly_mul(f, RatPoly{Rational(k - l), Rational(1)});
            poly_add_to(polys[static_cast<size_t>(k - lo)], f);
        }
    for (auto& p : polys) poly_trim(p);
    while (polys.size() > 1 && polys.back().empty()) {
        polys.pop_back();
        --hi;
    }
    while (polys.size() > 1 && polys.front().empty()) {
        polys.erase(polys.begin());
        ++lo;
    }
    Recurrence rec;
    long s = 1 - hi;
    rec.lo = lo + s;
    rec.hi = 1;
    Rational lead = 1;
    for (auto& p : polys) rec.polys.push_back(taylor_shift(p, s));
    if (!rec.polys.back().empty()) lead = rec.polys.back().back();
    for (auto& p : rec.polys)
        for (auto& c : p) c /= lead;
    return rec;
}

std::vector<Rational> recurrence_generate(const Recurrence& rec, const std::vector<Rational>& initial, long count) {
    std::vector<Rational> t(initial.begin(), initial.begin() + std::min<long>(count, initial.size()));
    for (long m = static_cast<long>(t.size()); m < count; ++m) {
        long n = m - rec.hi;
        Rational den = poly_eval(rec.at(rec.hi), Rational(n));
        if (sgn(den) == 0) throw FitError("leading coefficient vanishes at n=" + std::to_string(n) + "; more initial values needed");
        Rational acc = 0;
        for (long k = rec.lo; k < rec.hi; ++k)
            if (n + k >= 0) acc += poly_eval(rec.at(k), Rational(n)) * t[static_cast<size_t>(n + k)];
        t.push_back(-acc / den);
    }
    return t;
}

std::optional<OdeCertificate> common_ode_certificate(const TheoremGroup& g, long r, long d, long N, int jobs) {
    if (g.entries.empty()) return std::nullopt;
    std::vector<PowerSeries> ex = expand_group(g, N, jobs);
    auto ode = fit_linear_ode(ex.front(), r, d);
    if (!ode) return std::nullopt;
    OdeCertificate cert;
    cert.ode = *ode;
    cert.order = N;
    for (size_t i = 0; i < ex.size(); ++i)
        if (!ode_residual(*ode, ex[i], N).is_zero()) cert.failing.push_back(g.entries[i].id);
    // same operator and same leading coefficients (through the order) pin the same solution
    bool same = true;
    for (const auto& e : ex) same = same && first_difference(e.truncate(cert.ode.order()), ex.front().truncate(cert.ode.order())) < 0;
    cert.certified = same && cert.failing.empty();
    return cert;
}

std::string to_string(const LinearODE& ode, const std::string& var) {
    std::ostringstream os;
    bool first = true;
    for (long i = ode.order(); i >= 0; --i) {
        const IntPoly& p = ode.polys[static_cast<size_t>(i)];
        if (p.empty()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << poly_string(to_ratpoly(p), var) << ")*" << (i == 0 ? "y" : "D^" + std::to_string(i) + "y");
    }
    os << " = 0";
    return os.str();
}

std::string to_string(const Recurrence& rec) {
    std::ostringstream os;
    os << "(" << poly_string(rec.at(rec.hi), "n") << ")*" << shift_string(rec.hi) << " =";
    bool first = true;
    for (long k = rec.hi - 1; k >= rec.lo; --k) {
        RatPoly neg = rec.at(k);
        for (auto& c : neg) c = -c;
        os << (first ? " " : " + ") << "(" << poly_string(neg, "n") << ")*" << shift_string(k);
        first = false;
    }
    if (first) os << " 0";
    return os.str();
}

Json to_json(const LinearODE& ode) {
    Json polys = Json::array();
    for (const auto& p : ode.polys) {
        Json a = Json::array();
        for (const auto& c : p) a.push_back(c.get_str());
        polys.push_back(a);
    }
    return {{"order", ode.order()}, {"polys", polys}};
}

LinearODE ode_from_json(const Json& j) {
    LinearODE ode;
    for (const auto& p : j.at("polys")) {
        IntPoly q;
        for (const auto& c : p) q.emplace_back(c.is_string() ? c.get<std::string>() : std::to_string(c.get<long>()));
        ode.polys.push_back(std::move(q));
    }
    if (static_cast<long>(ode.polys.size()) - 1 != j.at("order").get<long>())
        throw std::invalid_argument("ODE order does not match its polynomial list");
    return ode;
}

Json to_json(const Recurrence& rec) {
    Json polys = Json::array();
    for (const auto& p : rec.polys) {
        Json a = Json::array();
        for (const auto& c : p) a.push_back(to_string(c));
        polys.push_back(a);
    }
    return {{"lo", rec.lo}, {"hi", rec.hi}, {"n-polys", polys}, {"text", to_string(rec)}};
}

}  // namespace hypermod
