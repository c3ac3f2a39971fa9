#pragma once
// Coefficient generators for the base hypergeometric and Apery-like series.

#include <array>
#include <optional>
#include <string>

#include "hypermod/rational.hpp"
#include "hypermod/series.hpp"

namespace hypermod {

struct ZagierParams {
    long alpha, beta, gamma;
    bool operator==(const ZagierParams&) const = default;
};

inline constexpr std::array<ZagierParams, 4> kZagierTriples = {{
    {11, 3, 1},      // level 5
    {-17, -6, -72},  // 6a
    {10, 3, -9},     // 6b
    {7, 2, 8},       // 6c
}};

void check_params(const ZagierParams& p);  // throws std::invalid_argument

enum class SeriesId {
    f1, f2, f3, f4, F1, F2, F3, F4,
    f5, F5, G5, f6a, F6a, G6a, f6b, F6b, G6b, f6c, F6c, G6c, H
};

std::string to_string(SeriesId id);
std::optional<SeriesId> parse_series_id(const std::string& s);

// C_s for level 1..4
long hyper_constant(int level);

enum class HyperKind { f, F };
// f: coefficient of 2F1(s,1-s;1;C x); F: of 3F2(1/2,s,1-s;1,1;4C x)
Rational hyper_coeff(int level, HyperKind kind, long n);

Rational zagier_t(const ZagierParams& p, long n);
Rational zagier_T(const ZagierParams& p, long n);

enum class Which { t, T };
Rational table1_oracle(const ZagierParams& p, Which which, long n);

Integer quartic_sum_H(long n);

// Memoized, thread-safe coefficient lookup.
Rational series_coeff(SeriesId id, long n);
PowerSeries base_series(SeriesId id, long N, const std::string& var = "x");

// Rational upper bound on the exponential growth rate of the coefficients;
// the series converges for |x| * bound < 1.
Rational growth_bound(SeriesId id);

// Zagier triple behind a level-5/6 family, if any.
std::optional<ZagierParams> family_params(SeriesId id);

}  // namespace hypermod
