#pragma once
// Rigorous evaluation of the 1/pi series at algebraic points and replay of the
// equivalence cases that link them.

#include <stdexcept>
#include <string>
#include <vector>

#include "hypermod/ball.hpp"
#include "hypermod/catalog.hpp"

namespace hypermod {

struct PiError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ball of width < 10^-digits around sum a(n) (n + lambda) x0^n.
// Interior points: exact partial sum plus a geometric tail bound from the term ratio.
// Boundary points (x0 = -1/(4C), level 4): Cohen-Rodriguez Villegas-Zagier acceleration.
Ball sum_series_at(const PiSeriesCase& c, long digits);

// pi from 16 atan(1/5) - 4 atan(1/239)
Ball pi_reference(long digits);
// pi from 48 atan(1/18) + 32 atan(1/57) - 20 atan(1/239), for cross-checks
Ball pi_reference_gauss(long digits);

struct ExactCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct BallCheck {
    std::string name;
    Rational width;
    bool pass = false;
    std::string detail;
};

struct PiReport {
    std::string id;
    long digits = 0;
    std::vector<ExactCheck> exact_checks;
    std::vector<BallCheck> ball_checks;
    std::vector<std::string> notes;

    bool certified() const;
};

PiReport verify_pi_formula(const PiSeriesCase& c, long digits);
PiReport verify_equivalence_case(const EquivalenceCase& c, long digits, const Catalog& cat = default_catalog());

// Number of real roots of p in (a, b], by Sturm sequence.
long sturm_count(const RatPoly& p, const Rational& a, const Rational& b);
// Bisects an interval holding exactly one simple root until it is narrower than width.
std::pair<Rational, Rational> refine_root(const RatPoly& p, Rational lo, Rational hi, const Rational& width);

// Scientific rendering of a nonnegative rational, 3 significant digits.
std::string sci(const Rational& q);

Json to_json(const PiReport& r);

}  // namespace hypermod
