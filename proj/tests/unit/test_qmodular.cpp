#include <doctest.h>

#include "hypermod/qmodular.hpp"

using namespace hypermod;

TEST_CASE("eta carries q^(1/24) and pentagonal coefficients") {
    QSeries e = eta_quotient({{1, 1}}, 30);
    CHECK(e.frac24 == 1);
    // Euler: exponents k(3k-1)/2 with sign (-1)^k
    std::vector<long> want(31, 0);
    for (long k = -5; k <= 5; ++k) {
        long m = k * (3 * k - 1) / 2;
        if (m <= 30) want[m] = (k % 2 == 0) ? 1 : -1;
    }
    for (long n = 0; n <= 30; ++n) CHECK(e.s[n] == want[n]);
}

TEST_CASE("Eisenstein heads") {
    QSeries P = eisenstein(Eisenstein::P, 1, 5);
    CHECK(P.s[0] == 1);
    CHECK(P.s[1] == -24);
    CHECK(P.s[2] == -72);
    CHECK(P.s[3] == -96);
    QSeries Q = eisenstein(Eisenstein::Q, 1, 5);
    CHECK(Q.s[1] == 240);
    CHECK(Q.s[2] == 2160);
    QSeries P2 = eisenstein(Eisenstein::P, 2, 6);
    CHECK(P2.s[1] == 0);
    CHECK(P2.s[2] == -24);
}

TEST_CASE("sums need aligned exponents") {
    QSeries a = eta_quotient({{1, 1}}, 10), b = eta_quotient({{2, 1}}, 10);
    CHECK_THROWS_AS(a + b, QSeriesError);
    QSeries c = a * a;
    CHECK(c.frac24 == 2);
    CHECK((c - a * a).s.is_zero());
}

TEST_CASE("every registered identity certifies") {
    for (const auto& info : q_identities()) {
        QReport r = verify_q_identity(info.id, std::min<long>(info.default_order, 40));
        INFO(info.id);
        CHECK(r.certified);
        CHECK(r.as_printed.has_value() == info.has_printed);
    }
}

TEST_CASE("forms as displayed that do not hold") {
    for (const char* id : {"L73.c", "H7.a", "H7.d", "M1"}) {
        QReport r = verify_q_identity(id, 30);
        INFO(id);
        REQUIRE(r.as_printed.has_value());
        CHECK_FALSE(r.as_printed->certified);
    }
}

TEST_CASE("unknown identity") { CHECK_THROWS(verify_q_identity("nope", 10)); }

TEST_CASE("minus_q flips odd coefficients") {
    PowerSeries f("q", std::vector<Rational>{1, 2, 3, 4});
    PowerSeries g = minus_q(f);
    CHECK(g[1] == -2);
    CHECK(g[2] == 3);
    CHECK(g[3] == -4);
}

TEST_CASE("log-derivative of the level-12 hauptmodul") {
    QSeries z = logderiv_z(hauptmodul(12, 12), 12);
    std::vector<long> want{1, -1, -1, -1, -1, 4, -1, 6};
    CHECK(z.frac24 == 0);
    for (size_t n = 0; n < want.size(); ++n) CHECK(z.s[static_cast<long>(n)] == want[n]);
}
