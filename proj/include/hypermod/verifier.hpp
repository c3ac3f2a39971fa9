#pragma once
// Coefficient-exact certification of catalog groups and the standalone series identities.

#include <optional>
#include <string>
#include <vector>

#include "hypermod/catalog.hpp"

namespace hypermod {

struct Mismatch {
    std::string a, b;  // entry ids, or "lhs"/"rhs"
    long power = 0;
    Rational ca, cb;
};

struct PrintedVariant {
    std::string entry;
    bool matches = false;  // does the as-displayed argument give the common series
    long first_difference = -1;
};

struct GroupReport {
    std::string group;
    long order = 0;
    bool certified = false;
    std::optional<Mismatch> first_mismatch;
    long pairwise_count = 0;
    std::vector<Rational> head;
    std::vector<PrintedVariant> printed;
    std::string note;
};

// Outcome of a two-sided identity check (Clausen, zs, formal translation).
struct CheckReport {
    std::string name;
    long order = 0;
    bool certified = false;
    std::optional<Mismatch> first_mismatch;
    std::vector<Rational> head;
    std::string note;
};

// prefactor * base o argument, truncated at N, in variable var
PowerSeries expand_entry(const IdentityEntry& e, const std::string& var, long N, bool printed = false);

// Every entry of g expanded at N, in entry order.
std::vector<PowerSeries> expand_group(const TheoremGroup& g, long N, int jobs = 0);

// jobs <= 0 picks the hardware concurrency
GroupReport verify_group(const TheoremGroup& g, long N, int jobs = 0);
GroupReport verify_substitution_case(const Catalog& cat, const std::string& id, long N, int jobs = 0);

CheckReport verify_clausen(int level, long N);
CheckReport verify_zs(const ZagierParams& p, long N);

CheckReport verify_translate_formal(const IdentityEntry& a, const IdentityEntry& b, const Rational& lambda,
                                    const std::string& var, long N);

// Compares two series to the shared order; nullopt when equal.
std::optional<Mismatch> compare_series(const PowerSeries& x, const PowerSeries& y, const std::string& a,
                                       const std::string& b);

// p y'/y for y of valuation m >= 1: a series with constant term m, order drops by m
PowerSeries theta_log(const PowerSeries& y);

Json to_json(const GroupReport& r);
Json to_json(const CheckReport& r);

}  // namespace hypermod
