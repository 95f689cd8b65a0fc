#pragma once

#include <optional>
#include <string>
#include <vector>

#include "photocount/bessel.hpp"
#include "photocount/moments.hpp"
#include "photocount/params.hpp"

// The N-th order Mandel-distribution approximations P_n^(N), the guaranteed
// accuracy bound that goes with them, the Poisson short-time reference law,
// and a runnable suite for the a-priori coefficient inequalities.

namespace photocount {

// zeta = e sigma tau psi(tau) I_0(tau) / (2 nu^2); the accuracy bound
// bound = [e psi I0 / (e psi I0 - tau)] (2 zeta)^{N+1} / (1 - 2 zeta)
// exists only while zeta < 1/2.
struct AccuracyBound {
    double zeta;
    std::optional<double> bound;  // nullopt -> "unavailable" (zeta >= 1/2)
};

AccuracyBound error_bound(std::size_t order_n, const ModelParams& params);

struct DistApprox {
    ModelParams params;
    std::size_t order_n;
    std::vector<double> probs;  // P_0^(N)..P_N^(N); identically 0 beyond N
    double zeta;
    std::optional<double> bound;
    bool has_negative;  // truncation can push tail probabilities below zero
};

// P_n^(N) = ((-1)^n / n!) sum_{l=0}^{N-n} ((n+l)!/l!) theta^{n+l} x_{n+l}.
// Negative values are returned as computed and only flagged: clipping would
// break the exact sum-to-one telescoping of the truncated double series.
DistApprox approx_dist(std::size_t order_n, const ModelParams& params);

// Poisson law (1/n!) (sigma t_phys / nu)^n e^{-sigma t_phys / nu}
double poisson_limit(std::size_t n, const ModelParams& params);

struct InequalityRecord {
    std::string name;     // which estimate was checked
    std::string context;  // e.g. "m=7" or "alpha=0.25"
    double lhs;
    double rhs;
    bool pass;            // lhs <= rhs (strict where the estimate is strict)
    double margin;        // rhs/lhs when lhs > 0, else +inf sentinel
};

struct InequalityReport {
    double tau;
    std::size_t max_m;
    std::vector<InequalityRecord> records;
    bool all_pass;
};

// Evaluates both sides of the logarithm, factorial, u/v/w and x-coefficient
// estimates up to max_m at the given tau. tau must be positive: the w-bound
// factor 1 + tau/2m + m/tau degenerates at tau = 0.
InequalityReport inequality_suite(std::size_t max_m, double tau);

}  // namespace photocount
