#pragma once
// q-expansions: eta quotients, Eisenstein series, the level-12 and level-10 hauptmoduln,
// and the registry of modular parameterizations that get certified.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypermod/catalog.hpp"
#include "hypermod/series.hpp"
#include "hypermod/verifier.hpp"

namespace hypermod {

struct QSeriesError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// q^(frac24/24) * sum coeffs[n] q^n
struct QSeries {
    long frac24 = 0;
    PowerSeries s{"q", 0};

    long order() const { return s.order(); }
    // Plain power series in q; needs frac24 to be a nonnegative multiple of 24.
    // The order is kept, so the top frac24/24 coefficients are dropped.
    PowerSeries integral() const;
};

QSeries operator*(const QSeries& a, const QSeries& b);
// Sums need leading exponents that differ by a whole power of q.
QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries qs_pow(const QSeries& a, long e);

using EtaSpec = std::vector<std::pair<long, long>>;  // (m, e) for eta(m tau)^e

QSeries eta_quotient(const EtaSpec& spec, long N);

enum class Eisenstein { P, Q };
QSeries eisenstein(Eisenstein kind, long m, long N);

// h (level 12) or k (level 10)
QSeries hauptmodul(int level, long N);

// q d/dq log(hs) for hs = q * (1 + ...)
QSeries logderiv_z(const QSeries& hs, long N);

// outer(hs) for hs = q * (1 + ...)
QSeries compose_h(const PowerSeries& outer, const QSeries& hs, long N);

// f(-q) for an integral series
PowerSeries minus_q(const PowerSeries& f);

struct QIdentityInfo {
    std::string id, description;
    long default_order;
    bool has_printed;  // an as-printed variant is carried alongside the corrected one
};

const std::vector<QIdentityInfo>& q_identities();

struct QSubCheck {
    std::string name;
    bool certified = false;
    std::optional<Mismatch> mismatch;
    std::string note;
};

struct QReport {
    std::string id;
    long order = 0;
    bool certified = false;
    std::vector<QSubCheck> checks;
    // outcome of the displayed form, when it differs from the certified one
    std::optional<QSubCheck> as_printed;
};

QReport verify_q_identity(const std::string& id, long N, const Catalog& cat = default_catalog());

Json to_json(const QSeries& q);
Json to_json(const QReport& r);

}  // namespace hypermod
