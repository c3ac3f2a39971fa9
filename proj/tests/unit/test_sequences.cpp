#include <doctest.h>

#include <thread>

#include "hypermod/sequences.hpp"

using namespace hypermod;

TEST_CASE("level-6a sums start 1, 5, 73") {
    ZagierParams p{-17, -6, -72};
    CHECK(zagier_T(p, 0) == 1);
    CHECK(zagier_T(p, 1) == 5);
    CHECK(zagier_T(p, 2) == 73);
}

TEST_CASE("level-5 T(1) is -5") { CHECK(zagier_T({11, 3, 1}, 1) == -5); }

TEST_CASE("F6c and G6c heads") {
    CHECK(series_coeff(SeriesId::F6c, 0) == 1);
    CHECK(series_coeff(SeriesId::F6c, 1) == 4);
    CHECK(series_coeff(SeriesId::F6c, 2) == 60);
    CHECK(series_coeff(SeriesId::F6c, 3) == 1120);
    CHECK(series_coeff(SeriesId::G6c, 0) == 1);
    CHECK(series_coeff(SeriesId::G6c, 1) == -3);
    CHECK(series_coeff(SeriesId::G6c, 2) == 9);
}

TEST_CASE("quartic binomial sum") {
    CHECK(quartic_sum_H(0) == 1);
    CHECK(quartic_sum_H(3) == 164);
}

TEST_CASE("level-4 coefficients are central binomial powers") {
    for (long n = 0; n <= 25; ++n) {
        Integer c = binomial(2 * n, n);
        CHECK(hyper_coeff(4, HyperKind::f, n) == Rational(c * c));
        CHECK(hyper_coeff(4, HyperKind::F, n) == Rational(c * c * c));
    }
}

TEST_CASE("level-1 F coefficients") {
    // (6n)! / ((3n)! n!^3)
    for (long n = 0; n <= 15; ++n) {
        Integer want = binomial(6 * n, 3 * n) * binomial(3 * n, n) * binomial(2 * n, n);
        CHECK(hyper_coeff(1, HyperKind::F, n) == Rational(want));
    }
}

TEST_CASE("recurrences agree with binomial sums") {
    for (const auto& p : kZagierTriples)
        for (long n = 0; n <= 20; ++n) {
            CHECK(zagier_t(p, n) == table1_oracle(p, Which::t, n));
            CHECK(zagier_T(p, n) == table1_oracle(p, Which::T, n));
        }
}

TEST_CASE("invalid parameters and ids") {
    CHECK_THROWS_AS(check_params({1, 2, 3}), std::invalid_argument);
    CHECK_THROWS(hyper_constant(7));
    CHECK_FALSE(parse_series_id("F9").has_value());
    CHECK(parse_series_id("G6b") == SeriesId::G6b);
    CHECK(to_string(SeriesId::f6c) == "f6c");
}

TEST_CASE("concurrent lookups agree") {
    std::vector<Rational> a(8), b(8);
    std::vector<std::thread> ts;
    for (int i = 0; i < 8; ++i) ts.emplace_back([&, i] { a[i] = series_coeff(SeriesId::H, 60 + i); });
    for (auto& t : ts) t.join();
    for (int i = 0; i < 8; ++i) b[i] = series_coeff(SeriesId::H, 60 + i);
    CHECK(a == b);
}

TEST_CASE("growth bounds") {
    CHECK(growth_bound(SeriesId::F4) == 64);
    CHECK(growth_bound(SeriesId::F1) == 1728);
    CHECK(base_series(SeriesId::F4, 3, "x")[2] == 216);
}
