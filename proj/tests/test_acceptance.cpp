// Acceptance suite: runs every catalogue case at default caps, checks its
// stated wall-clock budget, and prints one line per criterion.
#include <cstdio>
#include <string>

#include "fphom/verify.hpp"

using namespace fphom;

int main() {
    const Caps caps;
    const auto& cases = verify_cases();

    // stated per-criterion budgets, in seconds, in catalogue order
    const double budgets[] = {1.0, 5.0, 5.0, 1.0, 30.0, 30.0, 30.0, 10.0, 120.0, 10.0, 1.0};
    static_assert(sizeof(budgets) / sizeof(budgets[0]) == 11);

    bool all_ok = true;
    double total = 0.0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const CaseResult r = run_case(cases[i], caps);
        total += r.seconds;
        const bool in_budget = r.seconds < budgets[i];
        const bool ok = r.status == CaseResult::Status::Pass && in_budget;
        all_ok = all_ok && ok;
        std::printf("%-4s %2zu %-32s (%.3fs)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                    r.case_id.c_str(), r.seconds,
                    r.status == CaseResult::Status::Fail ? (" " + r.detail).c_str() : "",
                    !in_budget ? " [over budget]" : "");
        if (r.status == CaseResult::Status::Skipped) {
            std::printf("     skipped: %s\n", r.detail.c_str());
            all_ok = false; // default caps must not skip anything
        }
    }

    // criterion 12: the whole catalogue passes within the total budget
    const bool total_ok = all_ok && total <= 60.0;
    std::printf("%-4s %2d %-32s (%.3fs total)\n", total_ok ? "PASS" : "FAIL", 12,
                "full_suite_within_budget", total);

    return total_ok ? 0 : 1;
}
