#include <doctest.h>

#include "hypermod/pi_lab.hpp"

using namespace hypermod;

TEST_CASE("pi reference encloses pi") {
    Ball p = pi_reference(10);
    CHECK(p.lower() > Rational(31415926534L, 10000000000L));
    CHECK(p.upper() < Rational(31415926537L, 10000000000L));
    CHECK(p.width() < ten_pow(-10));
}

TEST_CASE("pi reference widths shrink") {
    Rational last = 1;
    for (long d = 5; d <= 60; d += 5) {
        Rational w = pi_reference(d).width();
        CHECK(w < last);
        last = w;
    }
}

TEST_CASE("two arctangent decompositions agree at 100 digits") {
    Ball a = pi_reference(100), b = pi_reference_gauss(100);
    CHECK(a.overlaps(b));
    CHECK(a.width() + b.width() < 2 * ten_pow(-100));
}

TEST_CASE("the 1/pi series at their digit targets") {
    for (const auto& c : default_catalog().pi_series) {
        PiReport r = verify_pi_formula(c, c.digits);
        INFO(c.id);
        CHECK(r.certified());
    }
}

TEST_CASE("ten more digits keep certification") {
    const PiSeriesCase* c = default_catalog().find_pi("EQ9.6");
    CHECK(verify_pi_formula(*c, 60).certified());
}

TEST_CASE("boundary series by acceleration") {
    const PiSeriesCase* c = default_catalog().find_pi("EQ9.3");
    Ball s = sum_series_at(*c, 20);
    Ball want = div(Ball::exact(1), mul(Ball::exact(2), pi_reference(30), 120), 120);
    CHECK(s.overlaps(want));
    CHECK(s.width() < ten_pow(-20));
}

TEST_CASE("first term of the level-1 series is lambda") {
    PiSeriesCase c = *default_catalog().find_pi("EQ9.1");
    c.point = QuadFieldElem::rational(c.point.d1(), c.point.d2(), 0);
    CHECK(sum_series_at(c, 30).contains(Rational(3, 28)));
}

TEST_CASE("a wrong constant is not certified") {
    PiSeriesCase c = *default_catalog().find_pi("EQ1.1");
    c.rhs = QuadFieldElem::rational(c.rhs.d1(), c.rhs.d2(), Rational(9, 21));
    CHECK_FALSE(verify_pi_formula(c, 30).certified());
    c = *default_catalog().find_pi("EQ1.1");
    c.lambda = QuadFieldElem::rational(c.lambda.d1(), c.lambda.d2(), Rational(5, 43));
    CHECK_FALSE(verify_pi_formula(c, 30).certified());
}

TEST_CASE("points outside the disc are refused") {
    PiSeriesCase c = *default_catalog().find_pi("EQ1.1");
    c.point = QuadFieldElem::rational(c.point.d1(), c.point.d2(), Rational(1, 32));
    CHECK_THROWS_AS(sum_series_at(c, 10), PiError);
    CHECK_FALSE(verify_pi_formula(c, 10).certified());
}

TEST_CASE("THM9.1 exact replay") {
    PiReport r = verify_equivalence_case(*default_catalog().find_equivalence("THM9.1"), 30);
    CHECK(r.certified());
    long claims = 0;
    for (const auto& c : r.exact_checks)
        if (c.name.rfind("claim ", 0) == 0) ++claims;
    CHECK(claims == 6);
}

TEST_CASE("a wrong claim is caught") {
    EquivalenceCase c = *default_catalog().find_equivalence("THM9.1");
    c.claims["r_squared"].q = Rational(405, 391);
    CHECK_FALSE(verify_equivalence_case(c, 20).certified());
}

TEST_CASE("remaining equivalence cases") {
    for (const char* id : {"THM9.3", "THM9.4", "THM9.4b", "THM9.5", "THM9.6", "THM9.7"}) {
        INFO(id);
        CHECK(verify_equivalence_case(*default_catalog().find_equivalence(id), 30).certified());
    }
}

TEST_CASE("root refinement matches the decimal hint") {
    const EquivalenceCase* c = default_catalog().find_equivalence("THM9.6");
    RatPoly P = to_ratpoly(c->point.poly);
    auto [lo, hi] = refine_root(P, c->point.lo, c->point.hi, ten_pow(-15));
    CHECK(lo > Rational(2455225, 10000000000L));
    CHECK(hi < Rational(2455235, 10000000000L));
}

TEST_CASE("Sturm counts") {
    RatPoly p{-2, 0, 1};  // x^2 - 2
    CHECK(sturm_count(p, 0, 2) == 1);
    CHECK(sturm_count(p, -2, 2) == 2);
    CHECK(sturm_count(p, 2, 3) == 0);
    auto [lo, hi] = refine_root(p, 1, 2, ten_pow(-20));
    CHECK(lo * lo < 2);
    CHECK(hi * hi > 2);
}

TEST_CASE("report JSON shape") {
    Json j = to_json(verify_pi_formula(*default_catalog().find_pi("EQ9.2"), 20));
    CHECK(j.at("case") == "EQ9.2");
    CHECK(j.at("digits") == 20);
    CHECK(j.at("ball_checks").size() >= 3);
    CHECK(j.at("ball_checks")[0].contains("width"));
    CHECK(j.contains("exact_checks"));
}

TEST_CASE("boundary weights are completely monotone") {
    // c_k = C(2k,k)^3 / 64^k and (k+1) c_k: every (-1)^j Delta^j is nonnegative
    const long K = 60;
    std::vector<Rational> c(K + 1), d(K + 1);
    for (long k = 0; k <= K; ++k) {
        Integer b = binomial(2 * k, k);
        c[k] = Rational(b * b * b) / Rational(Integer(1) << (6 * k));
        d[k] = c[k] * (k + 1);
    }
    for (auto seq : {c, d})
        for (long j = 0; j <= 30; ++j) {
            for (long k = 0; k + j <= K; ++k) CHECK(sgn(seq[k]) >= 0);
            for (long k = 0; k + 1 < static_cast<long>(seq.size()); ++k) seq[k] = seq[k] - seq[k + 1];
            seq.pop_back();
        }
}
