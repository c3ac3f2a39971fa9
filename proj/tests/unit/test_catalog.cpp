#include <doctest.h>

#include "hypermod/catalog.hpp"

using namespace hypermod;

TEST_CASE("shipped catalog validates") {
    const Catalog& cat = default_catalog();
    ValidationReport v = validate_catalog(cat);
    for (const auto& f : v.failures) INFO(f);
    CHECK(v.ok);
    CHECK(v.group_sizes.at("T1") == 42);
    CHECK(v.group_sizes.at("T2") == 23);
    CHECK(v.group_sizes.at("T3") == 13);
    CHECK(v.pairwise_total == 1192);
    for (int i = 1; i <= 7; ++i) CHECK(cat.find_group("EX8." + std::to_string(i)) != nullptr);
    CHECK(cat.pi_series.size() == 6);
    CHECK(cat.find_equivalence("THM9.1") != nullptr);
}

TEST_CASE("serialization round-trips") {
    const Catalog& cat = default_catalog();
    Json j = serialize_catalog(cat);
    Catalog again = load_catalog_text(j.dump());
    CHECK(serialize_catalog(again) == j);
    CHECK(again.groups.size() == cat.groups.size());
}

TEST_CASE("parse errors carry a position") {
    try {
        load_catalog_text("{\n  \"groups\": [\n  oops ]\n}");
        FAIL("no error");
    } catch (const CatalogError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("dangling references are rejected") {
    Json j = serialize_catalog(default_catalog());
    j["equivalences"][0]["pairs"][0]["a"] = "T1.99";
    CHECK_THROWS_AS(load_catalog_text(j.dump()), CatalogError);
}

TEST_CASE("entry prefactors and arguments at the origin") {
    for (const auto& g : default_catalog().groups)
        for (const auto& e : g.entries) {
            CHECK(prefactor_series(e.prefactor, g.variable, 4)[0] == 1);
            PowerSeries a = argument_series(e.argument, g.variable, 20);
            CHECK(a.valuation() == e.argument.monomial_power());
            CHECK(a.valuation() >= 1);
        }
}

TEST_CASE("argument values at an algebraic point") {
    const Catalog& cat = default_catalog();
    QuadFieldElem p0(2, 3, Rational(1, 4), Rational(3, 4), Rational(-3, 4), 0);
    CHECK(eval_argument(cat.find_entry("T1.02")->argument, p0) == QuadFieldElem::rational(2, 3, Rational(1, 8000)));
    CHECK(eval_argument(cat.find_entry("T1.11")->argument, p0) == QuadFieldElem::rational(2, 3, Rational(1, 614656)));
    Ball pb = qf_to_ball(p0, 128);
    Ball v = eval_argument(cat.find_entry("T1.02")->argument, pb, 128);
    CHECK(v.contains(Rational(1, 8000)));
}

TEST_CASE("catalog path override") {
    CHECK_THROWS_AS(load_catalog_file("/nonexistent/catalog.json"), CatalogError);
    CHECK_FALSE(default_catalog_path().empty());
}
