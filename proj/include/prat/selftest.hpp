#pragma once

#include <functional>
#include <string>
#include <vector>

namespace prat {

struct SuiteResult {
    std::string name;
    long checks = 0;
    long failures = 0;
    std::string first_failure;
    double seconds = 0.0;

    bool ok() const { return failures == 0 && checks > 0; }
};

/// Invariant suites backed by independent oracles. Suites that need the
/// bundled fixtures take the data directory.
SuiteResult suite_forms_vs_dirichlet(long max_abs_d = 200);
SuiteResult suite_recurrence_matrix_vs_iteration(int specs = 100, int max_n = 2000);
SuiteResult suite_sum_ef(int pairs = 1000);
SuiteResult suite_fermat_membership(const std::string& data_dir);
SuiteResult suite_crt_and_degree_one(const std::string& data_dir);
SuiteResult suite_recurrence_consistency(const std::string& data_dir, unsigned long pmax = 300);

std::vector<SuiteResult> run_all_suites(const std::string& data_dir);

}  // namespace prat
