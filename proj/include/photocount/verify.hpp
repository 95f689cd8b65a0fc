#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace photocount {

// Self-check battery behind the `verify` CLI command: the inequality suite,
// two-path u/v agreement, the closed-form regression fixtures, truncated-sum
// normalization, and (when samples > 0) Monte-Carlo vs analytic columns.

struct VerifyOptions {
    std::size_t max_m = 30;
    std::vector<double> taus = {0.1, 0.5, 1.0, 2.0};
    std::size_t samples = 0;  // 0 -> skip the MC section
    std::size_t steps = 512;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    double nu = 1.0;
    double sigma = 0.1;
    double t_phys = 0.5;
};

struct VerifyRow {
    std::string check;
    std::string context;
    double lhs;   // observed quantity (deviation, value, ...)
    double rhs;   // what it must stay below
    bool pass;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    bool all_pass;
};

VerifyReport run_verification(const VerifyOptions& opt);

}  // namespace photocount
