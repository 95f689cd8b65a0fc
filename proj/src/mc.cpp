#include "photocount/mc.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace photocount::mc {

namespace {

inline std::uint64_t mix64(std::uint64_t z) {
    // murmur3 finalizer
    z ^= z >> 33;
    z *= 0xff51afd7ed558ccdULL;
    z ^= z >> 33;
    z *= 0xc4ceb9fe1a85ec53ULL;
    z ^= z >> 33;
    return z;
}

constexpr double kSqrt2Pi = 2.5066282746310005024;

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) {
    // decorrelate substreams before entering the splitmix orbit
    state_ = mix64(seed ^ mix64(stream * 0x9E3779B97F4A7C15ULL + 0xBF58476D1CE4E5B9ULL));
}

std::uint64_t RngStream::next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double RngStream::next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
}

double RngStream::next_normal() { return norm_quantile(next_uniform()); }

double norm_quantile(double u) {
    if (!(u > 0.0) || !(u < 1.0))
        throw std::domain_error("norm_quantile: u must lie strictly in (0,1)");
    const bool upper = u > 0.5;
    const double p = upper ? 1.0 - u : u;  // (0, 0.5], exact near 1

    double x;
    if (p > 0.115) {
        // Maclaurin guess in w = sqrt(2 pi)(p - 1/2)
        const double w = kSqrt2Pi * (p - 0.5);
        const double w2 = w * w;
        x = w * (1.0 + w2 * (1.0 / 6.0 + w2 * (7.0 / 120.0 + w2 * 127.0 / 7560.0)));
    } else {
        // tail: Phi(-x) ~ phi(x)/x gives x^2 ~ t^2 - ln(2 pi t^2)
        const double t2 = -2.0 * std::log(p);
        x = -std::sqrt(t2 - std::log(6.283185307179586 * t2));
    }

    // Halley refinement; 4 fixed passes keep the draw deterministic and
    // land within a few ulp everywhere
    for (int i = 0; i < 4; ++i) {
        const double cdf = 0.5 * std::erfc(-x * 0.7071067811865475244);
        const double pdf = std::exp(-0.5 * x * x) / kSqrt2Pi;
        const double f = (cdf - p) / pdf;
        x -= f / (1.0 + 0.5 * x * f);
    }
    return upper ? -x : x;
}

namespace {

struct OUKernel {
    double dt;
    double rho;        // e^{-nu dt}
    double step_sd;    // sqrt(sigma (1 - rho^2) / (2 nu))
    double stat_sd;    // sqrt(sigma / (2 nu))

    OUKernel(const ModelParams& p, std::size_t steps) {
        dt = p.t_phys() / static_cast<double>(steps);
        rho = std::exp(-p.nu() * dt);
        stat_sd = std::sqrt(p.sigma() / (2.0 * p.nu()));
        step_sd = std::sqrt(p.sigma() * (1.0 - rho * rho) / (2.0 * p.nu()));
    }
};

// walk one path, return the trapezoidal J; optionally record the grid
double walk_path(const OUKernel& k, std::size_t steps, RngStream& stream, Trajectory* out) {
    double xi = k.stat_sd * stream.next_normal();
    double eta = k.stat_sd * stream.next_normal();
    double acc = 0.5 * (xi * xi + eta * eta);
    if (out) {
        out->xi.push_back(xi);
        out->eta.push_back(eta);
    }
    for (std::size_t i = 1; i <= steps; ++i) {
        xi = k.rho * xi + k.step_sd * stream.next_normal();
        eta = k.rho * eta + k.step_sd * stream.next_normal();
        acc += (i == steps ? 0.5 : 1.0) * (xi * xi + eta * eta);
        if (out) {
            out->xi.push_back(xi);
            out->eta.push_back(eta);
        }
    }
    return acc * k.dt;
}

constexpr std::size_t kBlock = 4096;

unsigned resolve_threads(unsigned threads) {
    if (threads != 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Fills values[0..n_stats-1] for one sample given its J.
template <class PerSample>
std::vector<MCEstimate> run_estimator(const ModelParams& params, std::size_t n_stats,
                                      std::size_t n_samples, std::size_t steps,
                                      std::uint64_t seed, unsigned threads,
                                      PerSample per_sample) {
    if (n_samples == 0) throw std::invalid_argument("mc: n_samples must be >= 1");
    if (steps == 0) throw std::invalid_argument("mc: steps must be >= 1");

    const OUKernel kernel(params, steps);
    const std::size_t n_blocks = (n_samples + kBlock - 1) / kBlock;
    std::vector<double> block_sum(n_blocks * n_stats, 0.0);
    std::vector<double> block_sumsq(n_blocks * n_stats, 0.0);

    std::atomic<std::size_t> next_block{0};
    auto worker = [&]() {
        std::vector<double> vals(n_stats);
        for (;;) {
            const std::size_t b = next_block.fetch_add(1);
            if (b >= n_blocks) return;
            double* sums = &block_sum[b * n_stats];
            double* sqs = &block_sumsq[b * n_stats];
            const std::size_t lo = b * kBlock;
            const std::size_t hi = std::min(n_samples, lo + kBlock);
            for (std::size_t i = lo; i < hi; ++i) {
                RngStream stream(seed, i);
                const double j = walk_path(kernel, steps, stream, nullptr);
                per_sample(j, vals.data());
                for (std::size_t s = 0; s < n_stats; ++s) {
                    sums[s] += vals[s];
                    sqs[s] += vals[s] * vals[s];
                }
            }
        }
    };

    const unsigned n_threads = resolve_threads(threads);
    if (n_threads <= 1 || n_blocks <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const unsigned use = static_cast<unsigned>(
            std::min<std::size_t>(n_threads, n_blocks));
        pool.reserve(use);
        for (unsigned t = 0; t < use; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // reduce blocks in index order: the grouping is independent of the
    // worker count, so totals are bit-identical for any thread setting
    std::vector<MCEstimate> out(n_stats);
    const double n = static_cast<double>(n_samples);
    for (std::size_t s = 0; s < n_stats; ++s) {
        double sum = 0.0, sumsq = 0.0;
        for (std::size_t b = 0; b < n_blocks; ++b) {
            sum += block_sum[b * n_stats + s];
            sumsq += block_sumsq[b * n_stats + s];
        }
        const double mean = sum / n;
        double var = 0.0;
        if (n_samples > 1) var = std::max(0.0, (sumsq - sum * sum / n) / (n - 1.0));
        out[s] = MCEstimate{mean, std::sqrt(var / n), n_samples, seed, steps};
    }
    return out;
}

}  // namespace

Trajectory sample_trajectory(const ModelParams& params, std::size_t steps, RngStream& stream) {
    if (steps == 0) throw std::invalid_argument("sample_trajectory: steps must be >= 1");
    const OUKernel kernel(params, steps);
    Trajectory traj{params, {}, {}, {}, 0.0};
    traj.times.reserve(steps + 1);
    traj.xi.reserve(steps + 1);
    traj.eta.reserve(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i)
        traj.times.push_back(kernel.dt * static_cast<double>(i));
    traj.j_value = walk_path(kernel, steps, stream, &traj);
    return traj;
}

std::vector<MCEstimate> estimate_moments(const ModelParams& params, std::size_t max_n,
                                         std::size_t n_samples, std::size_t steps,
                                         std::uint64_t seed, unsigned threads) {
    return run_estimator(params, max_n + 1, n_samples, steps, seed, threads,
                         [max_n](double j, double* vals) {
                             double p = 1.0;
                             vals[0] = 1.0;
                             for (std::size_t k = 1; k <= max_n; ++k) {
                                 p *= j;
                                 vals[k] = p;
                             }
                         });
}

std::vector<MCEstimate> estimate_pn(const ModelParams& params, std::size_t n_max,
                                    std::size_t n_samples, std::size_t steps,
                                    std::uint64_t seed, unsigned threads) {
    return run_estimator(params, n_max + 1, n_samples, steps, seed, threads,
                         [n_max](double j, double* vals) {
                             // term_n = J^n e^-J / n!
                             double term = std::exp(-j);
                             vals[0] = term;
                             for (std::size_t n = 1; n <= n_max; ++n) {
                                 term *= j / static_cast<double>(n);
                                 vals[n] = term;
                             }
                         });
}

MCEstimate estimate_laplace(const ModelParams& params, double lambda,
                            std::size_t n_samples, std::size_t steps,
                            std::uint64_t seed, unsigned threads) {
    if (!(lambda >= 0.0))
        throw std::invalid_argument("estimate_laplace: lambda must be >= 0");
    return run_estimator(params, 1, n_samples, steps, seed, threads,
                         [lambda](double j, double* vals) {
                             vals[0] = std::exp(-lambda * j);
                         })[0];
}

}  // namespace photocount::mc
