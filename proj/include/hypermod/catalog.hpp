#pragma once
// Machine encoding of the identity catalog and the algebra of its entries.

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hypermod/ball.hpp"
#include "hypermod/json_io.hpp"
#include "hypermod/qfield.hpp"
#include "hypermod/sequences.hpp"
#include "hypermod/series.hpp"

namespace hypermod {

struct CatalogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Factor {
    IntPoly poly;
    Rational exp;
};

// Product of polynomial powers; exponents have denominators dividing 4.
struct AlgebraicProduct {
    std::vector<Factor> factors;
};

// sign * prod poly_i ^ power_i with integer powers; vanishes at 0.
struct RationalArgument {
    int sign = 1;
    std::vector<IntPoly> factors;
    std::vector<long> powers;

    long monomial_power() const;  // order of vanishing at 0
};

struct IdentityEntry {
    std::string id, label, level;
    SeriesId base;
    AlgebraicProduct prefactor;
    RationalArgument argument;
    std::optional<RationalArgument> printed_argument;  // as displayed, when it differs
};

struct TheoremGroup {
    std::string id, title, variable;
    long default_order = 40;
    std::vector<Rational> expected_head;
    std::vector<IdentityEntry> entries;
    std::vector<std::vector<std::string>> chains;  // empty: one common series
    std::string note;
};

struct PiSeriesCase {
    std::string id, label;
    SeriesId base;
    QuadFieldElem point, lambda, rhs;
    long digits = 50;
    bool boundary = false;
};

struct EquivalencePoint {
    enum class Kind { field, root, nested } kind = Kind::field;
    QuadFieldElem value;         // field
    IntPoly poly;                // root: ascending integer coefficients
    Rational lo, hi;             // root: isolating interval
    QuadFieldElem base, radicand;  // nested: base + coef * sqrt(radicand)
    Rational coef;
    std::string decimal;
};

struct EquivalencePair {
    std::string a, b;
    std::optional<Rational> lambda;
};

struct Claim {
    bool is_field = false;
    Rational q;
    QuadFieldElem f;
};

struct EquivalenceCase {
    std::string id;
    EquivalencePoint point;
    std::vector<EquivalencePair> pairs;
    std::vector<std::tuple<long, long, std::string>> metadata;  // (level, N, nome)
    std::map<std::string, Claim> claims;
    std::vector<std::string> pi_links;
};

struct Catalog {
    std::vector<TheoremGroup> groups;
    std::vector<PiSeriesCase> pi_series;
    std::vector<EquivalenceCase> equivalences;
    Json raw;  // document as loaded, for round-trip checks

    const TheoremGroup* find_group(const std::string& id) const;
    const IdentityEntry* find_entry(const std::string& id) const;
    const PiSeriesCase* find_pi(const std::string& id) const;
    const EquivalenceCase* find_equivalence(const std::string& id) const;
};

Catalog load_catalog(std::istream& in);
Catalog load_catalog_text(const std::string& text);
Catalog load_catalog_file(const std::string& path);
// HYPERMOD_CATALOG if set, else the shipped data file.
std::string default_catalog_path();
const Catalog& default_catalog();

Json serialize_catalog(const Catalog& cat);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> failures;
    std::map<std::string, long> group_sizes;
    long pairwise_total = 0;
};

ValidationReport validate_catalog(const Catalog& cat);

// Entry algebra -------------------------------------------------------------

PowerSeries prefactor_series(const AlgebraicProduct& p, const std::string& var, long N);
PowerSeries argument_series(const RationalArgument& a, const std::string& var, long N);

QuadFieldElem eval_argument(const RationalArgument& a, const QuadFieldElem& p);
Ball eval_argument(const RationalArgument& a, const Ball& p, long prec);
// (d/dp log arg)(p)
QuadFieldElem argument_logderiv(const RationalArgument& a, const QuadFieldElem& p);

// prefactor(p)^2, exact because every exponent is a half-integer or integer
QuadFieldElem prefactor_squared(const AlgebraicProduct& f, const QuadFieldElem& p);
QuadFieldElem prefactor_sq_logderiv(const AlgebraicProduct& f, const QuadFieldElem& p);
Ball eval_prefactor(const AlgebraicProduct& f, const Ball& p, long prec);

}  // namespace hypermod
