#include "photocount/distribution.hpp"

#include <cmath>
#include <limits>

namespace photocount {

AccuracyBound error_bound(std::size_t order_n, const ModelParams& params) {
    const double tau = params.tau();
    const BesselPack pack = make_bessel_pack(tau);
    const double e = std::exp(1.0);
    const double epi0 = e * pack.psi * pack.i0_tau;
    AccuracyBound result{};
    result.zeta = e * params.sigma() * tau * pack.psi * pack.i0_tau /
                  (2.0 * params.nu() * params.nu());
    if (result.zeta < 0.5) {
        const double prefac = epi0 / (epi0 - tau);
        result.bound = prefac * std::pow(2.0 * result.zeta, static_cast<double>(order_n) + 1.0) /
                       (1.0 - 2.0 * result.zeta);
    }
    return result;
}

DistApprox approx_dist(std::size_t order_n, const ModelParams& params) {
    const double tau = params.tau();
    const double theta = params.theta();
    const std::vector<double> x = x_coeffs(order_n, w_coeffs(order_n, tau));

    std::vector<double> probs(order_n + 1, 0.0);
    for (std::size_t n = 0; n <= order_n; ++n) {
        // P_n^(N) = (-1)^n sum_l binom(n+l, n) theta^{n+l} x_{n+l}
        double binom = 1.0;
        double theta_pow = std::pow(theta, static_cast<double>(n));
        double acc = 0.0;
        for (std::size_t l = 0; n + l <= order_n; ++l) {
            if (l > 0) {
                binom *= static_cast<double>(n + l) / static_cast<double>(l);
                theta_pow *= theta;
            }
            acc += binom * theta_pow * x[n + l];
        }
        probs[n] = (n % 2 == 0) ? acc : -acc;
    }

    const AccuracyBound ab = error_bound(order_n, params);
    bool has_negative = false;
    for (double p : probs)
        if (p < 0.0) has_negative = true;

    return DistApprox{params, order_n, std::move(probs), ab.zeta, ab.bound, has_negative};
}

double poisson_limit(std::size_t n, const ModelParams& params) {
    const double a = params.sigma() * params.t_phys() / params.nu();
    double r = std::exp(-a);
    for (std::size_t k = 1; k <= n; ++k) r *= a / static_cast<double>(k);
    return r;
}

namespace {

void push(std::vector<InequalityRecord>& out, std::string name, std::string context,
          double lhs, double rhs) {
    const double margin = lhs > 0.0 ? rhs / lhs : std::numeric_limits<double>::infinity();
    out.push_back(InequalityRecord{std::move(name), std::move(context), lhs, rhs,
                                   lhs <= rhs, margin});
}

}  // namespace

InequalityReport inequality_suite(std::size_t max_m, double tau) {
    if (max_m < 2) throw std::invalid_argument("inequality_suite: max_m must be >= 2");
    if (!(tau > 0.0)) throw std::invalid_argument("inequality_suite: tau must be > 0");

    InequalityReport report{tau, max_m, {}, true};
    auto& rec = report.records;

    const double e = std::exp(1.0);
    const BesselPack pack = make_bessel_pack(tau);

    // logarithm estimate: -ln(1 - alpha) <= 2 alpha on [0, 1/2]
    for (int j = 0; j <= 20; ++j) {
        const double alpha = 0.025 * j;
        push(rec, "log-bound", "alpha=" + std::to_string(alpha), -std::log1p(-alpha), 2.0 * alpha);
    }

    // factorial estimate, both sides scaled by (2n)!:
    // 1 <= e n binom(2n,n) / 4^n
    {
        double c = 1.0;  // binom(2n,n)/4^n
        for (std::size_t n = 1; n <= max_m; ++n) {
            c *= (2.0 * n - 1.0) / (2.0 * n);
            push(rec, "factorial-bound", "n=" + std::to_string(n) + " (scaled by (2n)!)", 1.0,
                 e * static_cast<double>(n) * c);
        }
    }

    // coefficients from the fixed-point backend: the bounds below are checked
    // against values exact far beyond the double roundoff floor
    const AuxCoeffsT<BigFixed> auxf = aux_fixed(max_m, tau);
    const std::vector<BigFixed> xf = x_coeffs_fixed(max_m, auxf);

    const double half_tau_sq = 0.25 * tau * tau;  // (tau/2)^2
    double pw = 1.0;                              // (tau/2)^{2m} / (m-1)!
    double fact_m = 1.0;                          // m!
    for (std::size_t m = 1; m <= max_m; ++m) {
        pw *= half_tau_sq;
        if (m > 1) pw /= static_cast<double>(m - 1);
        fact_m *= static_cast<double>(m);
        const double u_m = auxf.u[m].to_double();
        const double v_m = auxf.v[m].to_double();
        const double w_m = auxf.w[m].to_double();
        push(rec, "u-bound", "m=" + std::to_string(m), u_m, e * pw * pack.i0_tau);
        push(rec, "v-bound", "m=" + std::to_string(m), v_m,
             tau / (2.0 * m + 1.0) * u_m);
        const double phi = 1.0 + tau / (2.0 * m) + static_cast<double>(m) / tau;
        push(rec, "w-bound", "m=" + std::to_string(m), w_m,
             e * pw / fact_m * pack.i0_tau * phi);
    }

    const double epi0 = e * pack.psi * pack.i0_tau;
    push(rec, "x-bound-prefactor", "e*psi(tau) > 1", 1.0, e * pack.psi);
    push(rec, "x-bound-prefactor", "e*psi*I0 > tau", tau, epi0);
    const double prefac = epi0 / (epi0 - tau);
    const double ratio = epi0 * tau / 4.0;  // e tau psi I0 / 4
    double rp = 1.0;
    for (std::size_t m = 1; m <= max_m; ++m) {
        rp *= ratio;
        if (m < 2) continue;  // the x-estimate is stated for m > 1
        push(rec, "x-bound", "m=" + std::to_string(m), std::fabs(xf[m].to_double()),
             prefac * rp);
    }

    for (const auto& r : rec)
        if (!r.pass) report.all_pass = false;
    return report;
}

}  // namespace photocount
