#include <doctest.h>

#include "hypermod/verifier.hpp"

using namespace hypermod;

namespace {

std::vector<long> head(const GroupReport& r, size_t n) {
    std::vector<long> out;
    for (size_t i = 0; i < n && i < r.head.size(); ++i) out.push_back(r.head[i].get_num().get_si());
    return out;
}

}  // namespace

TEST_CASE("T3 group agrees and has the expected head") {
    const TheoremGroup* g = default_catalog().find_group("T3");
    GroupReport r = verify_group(*g, 30, 2);
    CHECK(r.certified);
    CHECK(r.pairwise_count == 78);
    CHECK(head(r, 6) == std::vector<long>{1, 2, 6, 20, 70, 244});
}

TEST_CASE("T2 as displayed: entry 4 differs at p^6") {
    const TheoremGroup* g = default_catalog().find_group("T2");
    GroupReport r = verify_group(*g, 20, 2);
    CHECK(r.certified);
    CHECK(head(r, 6) == std::vector<long>{1, 2, 6, 16, 50, 156});
    bool seen = false;
    for (const auto& p : r.printed)
        if (p.entry == "T2.04") {
            seen = true;
            CHECK_FALSE(p.matches);
            CHECK(p.first_difference == 6);
        }
    CHECK(seen);
}

TEST_CASE("a tampered entry is caught") {
    TheoremGroup g = *default_catalog().find_group("T3");
    g.entries[5].argument.sign = -g.entries[5].argument.sign;
    GroupReport r = verify_group(g, 20, 1);
    CHECK_FALSE(r.certified);
    REQUIRE(r.first_mismatch.has_value());
    CHECK(r.first_mismatch->b == g.entries[5].id);
}

TEST_CASE("job count does not change the report") {
    const TheoremGroup* g = default_catalog().find_group("EX8.6");
    CHECK(to_json(verify_group(*g, 30, 1)) == to_json(verify_group(*g, 30, 4)));
}

TEST_CASE("Clausen and zs identities") {
    for (int level = 1; level <= 4; ++level) CHECK(verify_clausen(level, 30).certified);
    for (const auto& p : kZagierTriples) CHECK(verify_zs(p, 30).certified);
    CHECK_THROWS(verify_clausen(5, 10));
}

TEST_CASE("formal translation between T1 entries") {
    const Catalog& cat = default_catalog();
    const IdentityEntry* a = cat.find_entry("T1.02");
    const IdentityEntry* b = cat.find_entry("T1.11");
    CHECK(verify_translate_formal(*a, *b, Rational(3, 28), "p", 25).certified);
    IdentityEntry bad = *b;
    bad.argument.sign = -bad.argument.sign;
    CHECK_FALSE(verify_translate_formal(*a, bad, Rational(3, 28), "p", 25).certified);
}

TEST_CASE("compare_series and theta_log") {
    PowerSeries x("p", std::vector<Rational>{1, 2, 3}), y("p", std::vector<Rational>{1, 2, 4});
    auto m = compare_series(x, y, "x", "y");
    REQUIRE(m.has_value());
    CHECK(m->power == 2);
    CHECK_FALSE(compare_series(x, x, "x", "x").has_value());
    PowerSeries s("p", std::vector<Rational>{0, 0, 1, 1, 0, 0});  // p^2 + p^3
    PowerSeries t = theta_log(s);
    CHECK(t[0] == 2);
    CHECK(t[1] == 1);
}

TEST_CASE("report JSON shape") {
    const TheoremGroup* g = default_catalog().find_group("EX8.2");
    Json j = to_json(verify_group(*g, 20));
    CHECK(j.at("status") == "certified");
    CHECK(j.contains("pairwise_count"));
    CHECK(j.contains("head"));
}
