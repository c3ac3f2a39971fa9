#pragma once
// The end-to-end certification suite, one entry per acceptance criterion.

#include <string>
#include <vector>

#include "hypermod/catalog.hpp"
#include "hypermod/odefit.hpp"

namespace hypermod {

inline constexpr int kCriteria = 10;

struct CriterionResult {
    int number = 0;
    std::string title;
    bool pass = false;
    std::vector<std::string> failures;
    Json reports = Json::array();
    double seconds = 0;
};

CriterionResult run_criterion(int k, int jobs = 0, const Catalog& cat = default_catalog());
std::vector<CriterionResult> run_acceptance(int jobs = 0, const Catalog& cat = default_catalog());

// Reference operator for the T2 series (normalized) and the recurrence it induces.
LinearODE reference_t2_ode();
Recurrence expected_t2_recurrence();

Json to_json(const CriterionResult& r);

}  // namespace hypermod
