#pragma once

#include <cstdint>
#include <vector>

#include "photocount/params.hpp"

// Independent Monte-Carlo ground truth. Trajectories of the complex OU
// process are sampled with the exact transition kernel (no discretization
// bias in the law of the grid values; the only bias is the trapezoidal
// quadrature of J). One root seed, one substream per trajectory index, and
// fixed-size accumulation blocks merged in index order, so results are
// bit-identical across runs and across worker counts.

namespace photocount::mc {

// splitmix64 sequence on a state derived from (seed, stream)
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    double next_uniform();  // strictly inside (0,1), 53-bit resolution
    double next_normal();   // standard normal via the inverse CDF

private:
    std::uint64_t state_;
};

// Phi^-1(u): analytic initial guess + fixed Halley refinements through
// std::erfc; accurate to a few ulp over the full (0,1) range
double norm_quantile(double u);

struct Trajectory {
    ModelParams params;
    std::vector<double> times;  // K+1 uniform grid points on [0, t_phys]
    std::vector<double> xi, eta;
    double j_value;  // trapezoidal integral of xi^2 + eta^2
};

// One exact-discretization path: initial point from the stationary density
// (variance sigma/(2 nu)), every step from the transition kernel. xi and eta
// consume interleaved draws from the stream.
Trajectory sample_trajectory(const ModelParams& params, std::size_t steps, RngStream& stream);

struct MCEstimate {
    double value;
    double std_error;  // sample standard deviation / sqrt(n_samples)
    std::size_t n_samples;
    std::uint64_t seed;
    std::size_t steps;
};

// estimate[k] = sample mean of J^k, k = 0..max_n
std::vector<MCEstimate> estimate_moments(const ModelParams& params, std::size_t max_n,
                                         std::size_t n_samples, std::size_t steps,
                                         std::uint64_t seed, unsigned threads = 0);

// estimate[n] = sample mean of J^n e^-J / n!, the conditional-Poisson
// estimator of P_n (unbiased, nonnegative termwise)
std::vector<MCEstimate> estimate_pn(const ModelParams& params, std::size_t n_max,
                                    std::size_t n_samples, std::size_t steps,
                                    std::uint64_t seed, unsigned threads = 0);

// sample mean of e^{-lambda J}
MCEstimate estimate_laplace(const ModelParams& params, double lambda,
                            std::size_t n_samples, std::size_t steps,
                            std::uint64_t seed, unsigned threads = 0);

}  // namespace photocount::mc
