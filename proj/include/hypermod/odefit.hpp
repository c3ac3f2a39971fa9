#pragma once
// Guessing linear ODEs with polynomial coefficients, and the recurrences they induce.

#include <optional>
#include <string>
#include <vector>

#include "hypermod/catalog.hpp"
#include "hypermod/series.hpp"

namespace hypermod {

// sum_i polys[i](p) * y^(i) = 0
struct LinearODE {
    std::vector<IntPoly> polys;

    long order() const { return static_cast<long>(polys.size()) - 1; }
    long degree() const;
    bool operator==(const LinearODE&) const = default;
};

// sum_k polys[k - lo](n) * t(n + k) = 0 for every n, with t(m) = 0 for m < 0
struct Recurrence {
    long lo = 0, hi = 0;
    std::vector<RatPoly> polys;

    const RatPoly& at(long shift) const { return polys[static_cast<size_t>(shift - lo)]; }
};

struct FitError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline constexpr long kFitSurplus = 5;

// Content 1 and a positive lowest nonzero coefficient in the top polynomial.
LinearODE normalize(LinearODE ode);

// Minimal operator (order first, then degree) annihilating s to its full order.
std::optional<LinearODE> fit_linear_ode(const PowerSeries& s, long max_order, long max_degree);

PowerSeries ode_residual(const LinearODE& ode, const PowerSeries& s, long N);

// Shifted so hi == 1 and scaled so the t(n+1) polynomial is monic.
Recurrence ode_to_recurrence(const LinearODE& ode);

// t(0..count-1) from the given initial values; throws if the leading polynomial vanishes
// where no initial value is supplied.
std::vector<Rational> recurrence_generate(const Recurrence& rec, const std::vector<Rational>& initial, long count);

struct OdeCertificate {
    LinearODE ode;
    bool certified = false;
    long order = 0;
    std::vector<std::string> failing;  // entries with nonzero residual
};

std::optional<OdeCertificate> common_ode_certificate(const TheoremGroup& g, long r, long d, long N, int jobs = 0);

// Human-readable forms, e.g. "(n+1)^2*t(n+1) = ..." with polynomials in expanded form
std::string to_string(const LinearODE& ode, const std::string& var = "p");
std::string to_string(const Recurrence& rec);

Json to_json(const LinearODE& ode);
LinearODE ode_from_json(const Json& j);
Json to_json(const Recurrence& rec);

}  // namespace hypermod
