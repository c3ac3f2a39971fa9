#include <doctest.h>

#include <fstream>

#include "hypermod/odefit.hpp"
#include "hypermod/suite.hpp"
#include "hypermod/verifier.hpp"

using namespace hypermod;

namespace {

Json golden(const std::string& name) {
    std::ifstream f(std::string(HYPERMOD_GOLDEN_DIR) + "/" + name);
    REQUIRE(f.good());
    return Json::parse(f);
}

}  // namespace

TEST_CASE("geometric series has a first-order operator") {
    PowerSeries s("p", std::vector<Rational>(30, Rational(1)));
    auto ode = fit_linear_ode(s, 2, 3);
    REQUIRE(ode.has_value());
    CHECK(ode->order() == 1);
    CHECK(ode->degree() == 1);
    CHECK(ode_residual(*ode, s, 29).is_zero());
}

TEST_CASE("short series are refused") {
    PowerSeries s("p", std::vector<Rational>(10, Rational(1)));
    CHECK_THROWS_AS(fit_linear_ode(s, 3, 5), FitError);
}

TEST_CASE("normalization fixes content and sign") {
    LinearODE a{{IntPoly{Integer(4)}, IntPoly{Integer(0), Integer(-6)}}};
    LinearODE n = normalize(a);
    CHECK(n.polys[0] == IntPoly{Integer(-2)});
    CHECK(n.polys[1] == IntPoly{Integer(0), Integer(3)});
}

TEST_CASE("T2.01 from 50 coefficients gives the reference operator") {
    const Catalog& cat = default_catalog();
    PowerSeries s = expand_entry(*cat.find_entry("T2.01"), "p", 50);
    auto ode = fit_linear_ode(s, 3, 9);
    REQUIRE(ode.has_value());
    CHECK(*ode == reference_t2_ode());
}

TEST_CASE("T2 recurrence has no t(n-1) term and regenerates the series") {
    Recurrence rec = ode_to_recurrence(reference_t2_ode());
    Recurrence want = expected_t2_recurrence();
    CHECK(rec.lo == want.lo);
    CHECK(rec.hi == want.hi);
    RatPoly gap = rec.at(-1);
    poly_trim(gap);
    CHECK(gap.empty());
    CHECK(to_string(rec).find("(0)*t(n-1)") != std::string::npos);

    const TheoremGroup* g = default_catalog().find_group("T2");
    PowerSeries s = expand_entry(g->entries.front(), g->variable, 60);
    std::vector<Rational> gen = recurrence_generate(rec, {s[0]}, 61);
    for (long n = 0; n <= 60; ++n) CHECK(gen[n] == s[n]);
}

TEST_CASE("golden operators for T1 and T3") {
    for (const char* name : {"t1_ode.json", "t3_ode.json"}) {
        Json j = golden(name);
        LinearODE want = ode_from_json(j);
        const TheoremGroup* g = default_catalog().find_group(j.at("group").get<std::string>());
        auto cert = common_ode_certificate(*g, want.order(), want.degree(), j.at("terms").get<long>());
        REQUIRE(cert.has_value());
        CHECK(cert->certified);
        CHECK(cert->failing.empty());
        CHECK(cert->ode == want);
    }
}

TEST_CASE("JSON round trip") {
    LinearODE o = reference_t2_ode();
    CHECK(ode_from_json(to_json(o)) == o);
}
