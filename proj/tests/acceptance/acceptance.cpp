// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <cstdio>

#include "hypermod/suite.hpp"

using namespace hypermod;

int main() {
    int failed = 0;
    double total = 0;
    for (int k = 1; k <= kCriteria; ++k) {
        CriterionResult r = run_criterion(k);
        total += r.seconds;
        std::printf("criterion %2d: %s  %s (%.2fs)\n", k, r.pass ? "PASS" : "FAIL", r.title.c_str(), r.seconds);
        for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
        if (!r.pass) ++failed;
    }
    std::printf("%d of %d criteria passed in %.1fs\n", kCriteria - failed, kCriteria, total);
    return failed ? 1 : 0;
}
