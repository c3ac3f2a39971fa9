#include "hypermod/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>

namespace hypermod {

namespace {

const long kHeadTerms = 6;

// Runs task(i) for i in [0, n) on up to `jobs` threads; rethrows the first error.
void parallel_for(long n, int jobs, const std::function<void(long)>& task) {
    if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    jobs = static_cast<int>(std::min<long>(jobs, n));
    if (jobs <= 1) {
        for (long i = 0; i < n; ++i) task(i);
        return;
    }
    std::atomic<long> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (long i = next++; i < n; i = next++) {
                try {
                    task(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

std::vector<Rational> head_of(const PowerSeries& s) {
    long k = std::min(kHeadTerms, s.order() + 1);
    return {s.coeffs().begin(), s.coeffs().begin() + k};
}

// series with coefficients n * a(n)
PowerSeries theta(const PowerSeries& a) {
    PowerSeries r = a;
    for (long n = 0; n <= r.order(); ++n) r[n] *= Rational(n);
    return r;
}

CheckReport two_sided(const std::string& name, const PowerSeries& lhs, const PowerSeries& rhs) {
    CheckReport r;
    r.name = name;
    r.order = std::min(lhs.order(), rhs.order());
    r.first_mismatch = compare_series(lhs, rhs, "lhs", "rhs");
    r.certified = !r.first_mismatch;
    r.head = head_of(lhs);
    return r;
}

PowerSeries poly_series(const std::string& var, long N, std::initializer_list<long> c) {
    RatPoly p;
    for (long v : c) p.emplace_back(v);
    return PowerSeries::from_poly(var, N, p);
}

}  // namespace

std::optional<Mismatch> compare_series(const PowerSeries& x, const PowerSeries& y, const std::string& a,
                                       const std::string& b) {
    long k = first_difference(x, y);
    if (k < 0) return std::nullopt;
    return Mismatch{a, b, k, x[k], y[k]};
}

PowerSeries expand_entry(const IdentityEntry& e, const std::string& var, long N, bool printed) {
    const RationalArgument& arg = printed && e.printed_argument ? *e.printed_argument : e.argument;
    PowerSeries x = argument_series(arg, var, N);
    long m = std::max(1L, arg.monomial_power());
    PowerSeries base = base_series(e.base, N / m, "x");
    PowerSeries inner = ps_compose(base, x);
    if (e.prefactor.factors.empty()) return inner;
    return prefactor_series(e.prefactor, var, N) * inner;
}

std::vector<PowerSeries> expand_group(const TheoremGroup& g, long N, int jobs) {
    std::vector<PowerSeries> ex(g.entries.size());
    parallel_for(static_cast<long>(ex.size()), jobs, [&](long i) { ex[i] = expand_entry(g.entries[i], g.variable, N); });
    return ex;
}

GroupReport verify_group(const TheoremGroup& g, long N, int jobs) {
    GroupReport rep;
    rep.group = g.id;
    rep.order = N;
    const long k = static_cast<long>(g.entries.size());
    std::vector<PowerSeries> ex(k);
    std::vector<long> printed_idx;
    for (long i = 0; i < k; ++i)
        if (g.entries[i].printed_argument) printed_idx.push_back(i);
    std::vector<PowerSeries> ex_printed(printed_idx.size());
    parallel_for(k + static_cast<long>(printed_idx.size()), jobs, [&](long i) {
        if (i < k) ex[i] = expand_entry(g.entries[i], g.variable, N);
        else {
            long j = i - k;
            ex_printed[j] = expand_entry(g.entries[printed_idx[j]], g.variable, N, true);
        }
    });

    // each chain (or the whole group) must share one series; compare to its first member
    std::vector<std::vector<long>> classes;
    if (g.chains.empty()) {
        classes.emplace_back();
        for (long i = 0; i < k; ++i) classes.back().push_back(i);
    } else {
        for (const auto& ch : g.chains) {
            classes.emplace_back();
            for (const auto& id : ch)
                for (long i = 0; i < k; ++i)
                    if (g.entries[i].id == id) classes.back().push_back(i);
        }
    }
    for (const auto& cls : classes) {
        long n = static_cast<long>(cls.size());
        rep.pairwise_count += n * (n - 1) / 2;
        for (long i = 1; i < n && !rep.first_mismatch; ++i) {
            auto mm = compare_series(ex[cls[0]], ex[cls[i]], g.entries[cls[0]].id, g.entries[cls[i]].id);
            if (mm) rep.first_mismatch = mm;
        }
    }
    rep.certified = !rep.first_mismatch;
    if (k > 0) rep.head = head_of(ex[classes.front().front()]);
    for (const auto& cls : classes) {
        if (cls.empty()) continue;
        for (size_t i = 0; i < g.expected_head.size(); ++i) {
            const PowerSeries& s = ex[cls.front()];
            if (static_cast<long>(i) > s.order()) break;
            if (s[static_cast<long>(i)] != g.expected_head[i]) {
                rep.certified = false;
                rep.note = "head differs from the expected leading coefficients at power " + std::to_string(i);
                break;
            }
        }
    }
    for (size_t j = 0; j < printed_idx.size(); ++j) {
        long i = printed_idx[j];
        long d = first_difference(ex[i], ex_printed[j]);
        rep.printed.push_back({g.entries[i].id, d < 0, d});
    }
    return rep;
}

GroupReport verify_substitution_case(const Catalog& cat, const std::string& id, long N, int jobs) {
    const TheoremGroup* g = cat.find_group(id);
    if (!g) throw CatalogError("unknown group " + id);
    return verify_group(*g, N, jobs);
}

CheckReport verify_clausen(int level, long N) {
    auto f = static_cast<SeriesId>(static_cast<int>(SeriesId::f1) + level - 1);
    auto F = static_cast<SeriesId>(static_cast<int>(SeriesId::F1) + level - 1);
    hyper_constant(level);  // validates the level
    PowerSeries fs = base_series(f, N);
    PowerSeries arg = poly_series("x", N, {0, 1, -hyper_constant(level)});
    PowerSeries rhs = ps_compose(base_series(F, N), arg);
    return two_sided("clausen level " + std::to_string(level), fs * fs, rhs);
}

CheckReport verify_zs(const ZagierParams& p, long N) {
    check_params(p);
    SeriesId ids[3] = {};
    for (SeriesId cand : {SeriesId::f5, SeriesId::f6a, SeriesId::f6b, SeriesId::f6c})
        if (family_params(cand) == p) {
            ids[0] = cand;
            ids[1] = static_cast<SeriesId>(static_cast<int>(cand) + 1);
            ids[2] = static_cast<SeriesId>(static_cast<int>(cand) + 2);
        }
    const long a = p.alpha, g = p.gamma;
    PowerSeries f = base_series(ids[0], N);
    PowerSeries f2 = f * f;
    PowerSeries w = poly_series("x", N, {1, -a, -g});      // 1 - a x - g x^2
    PowerSeries v = poly_series("x", N, {1, 0, g});        // 1 + g x^2
    PowerSeries xs = PowerSeries::monomial("x", N, 1);
    PowerSeries rhs1 = ps_inverse(v) * ps_compose(base_series(ids[1], N), xs * w / (v * v));
    PowerSeries rhs2 = ps_inverse(w) * ps_compose(base_series(ids[2], N), xs / w);
    std::string tag = "(" + std::to_string(p.alpha) + "," + std::to_string(p.beta) + "," + std::to_string(p.gamma) + ")";
    CheckReport r1 = two_sided("zs " + tag + " F-form", f2, rhs1);
    CheckReport r2 = two_sided("zs " + tag + " G-form", f2, rhs2);
    CheckReport r = r1;
    r.name = "zs " + tag;
    r.certified = r1.certified && r2.certified;
    if (!r1.first_mismatch && r2.first_mismatch) {
        r.first_mismatch = r2.first_mismatch;
        r.note = "G-form";
    } else if (r1.first_mismatch) {
        r.note = "F-form";
    }
    return r;
}

PowerSeries theta_log(const PowerSeries& y) {
    long m = y.valuation();
    if (m < 1 || m > y.order()) throw SeriesError("theta_log needs a series vanishing to finite order >= 1");
    std::vector<Rational> u(y.coeffs().begin() + m, y.coeffs().end());
    PowerSeries us(y.var(), std::move(u));
    PowerSeries r = theta(us) / us;
    r[0] += Rational(m);
    return r;
}

CheckReport verify_translate_formal(const IdentityEntry& a, const IdentityEntry& b, const Rational& lambda,
                                    const std::string& var, long N) {
    // work at a higher order so valuation shifts do not eat into N
    long ma = std::max(1L, a.argument.monomial_power()), mb = std::max(1L, b.argument.monomial_power());
    long W = N + std::max(ma, mb);
    PowerSeries x = argument_series(a.argument, var, W), y = argument_series(b.argument, var, W);
    PowerSeries r = prefactor_series(b.prefactor, var, W) / prefactor_series(a.prefactor, var, W);
    PowerSeries lx = theta_log(x).truncate(N), ly = theta_log(y).truncate(N);
    PowerSeries k1 = r.truncate(N) * ly / lx;             // (x r / y) dy/dx
    PowerSeries k2 = theta(r).truncate(N) / lx;            // x dr/dx
    PowerSeries A = base_series(a.base, N / ma, "x"), B = base_series(b.base, N / mb, "x");
    PowerSeries xa = x.truncate(N), yb = y.truncate(N);
    PowerSeries tA = ps_compose(theta(A), xa), fA = ps_compose(A, xa);
    PowerSeries tB = ps_compose(theta(B), yb), fB = ps_compose(B, yb);
    auto sides = [&](const Rational& lam) {
        PowerSeries lhs = tA + fA * lam;
        PowerSeries rhs = k1 * tB + (k2 + r.truncate(N) * lam) * fB;
        return std::make_pair(lhs, rhs);
    };
    auto [l0, r0] = sides(0);
    auto [l1, r1] = sides(1);
    auto [ll, rl] = sides(lambda);
    CheckReport rep = two_sided("translate " + a.id + " -> " + b.id + " lambda=" + to_string(lambda), ll, rl);
    // both sides are affine in lambda, so lambda = 0 and 1 determine every value
    PowerSeries d0 = l0 - r0, d1 = l1 - r1, dl = ll - rl;
    if (dl != d0 + (d1 - d0) * lambda) {
        rep.certified = false;
        rep.note = "lambda-linearity violated";
    } else if (rep.certified && (!d0.is_zero() || !d1.is_zero())) {
        rep.certified = false;
        rep.note = "identity fails at lambda 0 or 1";
    }
    return rep;
}

namespace {

Json mismatch_json(const std::optional<Mismatch>& m) {
    if (!m) return nullptr;
    return {{"a", m->a}, {"b", m->b}, {"power", m->power}, {"coeff_a", to_string(m->ca)},
            {"coeff_b", to_string(m->cb)}};
}

Json head_json(const std::vector<Rational>& h) {
    Json a = Json::array();
    for (const auto& c : h) a.push_back(to_string(c));
    return a;
}

}  // namespace

Json to_json(const GroupReport& r) {
    Json j = {{"group", r.group}, {"order", r.order}, {"status", r.certified ? "certified" : "failed"},
              {"pairwise_count", r.pairwise_count}, {"first_mismatch", mismatch_json(r.first_mismatch)},
              {"head", head_json(r.head)}};
    if (!r.printed.empty()) {
        Json p = Json::array();
        for (const auto& v : r.printed)
            p.push_back({{"entry", v.entry}, {"as_printed_matches", v.matches}, {"first_difference", v.first_difference}});
        j["printed_variants"] = p;
    }
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

Json to_json(const CheckReport& r) {
    Json j = {{"name", r.name}, {"order", r.order}, {"status", r.certified ? "certified" : "failed"},
              {"first_mismatch", mismatch_json(r.first_mismatch)}, {"head", head_json(r.head)}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

}  // namespace hypermod
