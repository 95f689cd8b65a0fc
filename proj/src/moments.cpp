#include "photocount/moments.hpp"

#include <cmath>
#include <utility>

namespace photocount {

namespace {

// Shared series kernel for every scalar backend. First terms:
//   u: tau^2m m!/(2m)!,  v: tau^2m+1 m!/(2m+1)!
// then term ratios tau^2 (n+1)/((2n+1)(2n+2)(n+1-m)) resp.
// tau^2 (n+1)/((2n+2)(2n+3)(n+1-m)).
template <class S>
std::pair<S, S> uv_direct_t(std::size_t m, const S& tau, const S& tol,
                            std::size_t max_terms) {
    const S tau2 = tau * tau;
    S t(1);
    for (std::size_t i = 1; i <= m; ++i) {
        std::int64_t den = static_cast<std::int64_t>(2 * i - 1) * static_cast<std::int64_t>(2 * i);
        t = t * tau2 * S(static_cast<std::int64_t>(i)) / S(den);
    }
    S term_u = t;
    S term_v = t * tau / S(static_cast<std::int64_t>(2 * m + 1));
    S sum_u = term_u, sum_v = term_v;
    for (std::size_t it = 0, n = m; it < max_terms; ++it, ++n) {
        std::int64_t k = static_cast<std::int64_t>(n - m) + 1;
        S num = tau2 * S(static_cast<std::int64_t>(n + 1));
        term_u = term_u * num /
                 S(static_cast<std::int64_t>(2 * n + 1) * static_cast<std::int64_t>(2 * n + 2) * k);
        term_v = term_v * num /
                 S(static_cast<std::int64_t>(2 * n + 2) * static_cast<std::int64_t>(2 * n + 3) * k);
        sum_u = sum_u + term_u;
        sum_v = sum_v + term_v;
        if (term_u <= tol * sum_u && term_v <= tol * sum_v) break;
    }
    return {sum_u, sum_v};
}

constexpr std::size_t kDirectCap = 200;

// u_m = (m!/2)(e^tau R_m^+ + e^-tau R_m^-),
// v_m = ((m+1)!/tau)(e^tau R_{m+1}^+ + e^-tau R_{m+1}^-)
std::pair<BigFixed, BigFixed> closed_uv(const RPolyTable& table, std::size_t m,
                                        const BigFixed& t, const BigFixed& ep,
                                        const BigFixed& em) {
    BigFixed u = (ep * table.eval_plus(m, t) + em * table.eval_minus(m, t))
                     .mul_int(BigInt::factorial(static_cast<unsigned>(m)))
                     .div_int(BigInt(2));
    BigFixed v = ((ep * table.eval_plus(m + 1, t) + em * table.eval_minus(m + 1, t))
                      .mul_int(BigInt::factorial(static_cast<unsigned>(m) + 1))) /
                 t;
    return {std::move(u), std::move(v)};
}

}  // namespace

std::pair<double, double> uv_direct(std::size_t m, double tau, double tol) {
    if (!(tau >= 0.0)) throw std::invalid_argument("uv_direct: tau must be >= 0");
    if (!(tol > 0.0)) throw std::invalid_argument("uv_direct: tol must be > 0");
    return uv_direct_t<double>(m, tau, tol, kDirectCap);
}

std::pair<double, double> uv_closed(std::size_t m, double tau, const RPolyTable& table) {
    if (!(tau > 0.0)) throw std::invalid_argument("uv_closed: tau must be > 0");
    if (table.max_m() < m + 1)
        throw std::invalid_argument("uv_closed: table must extend to m+1");
    const BigFixed t = BigFixed::from_double(tau);
    const auto [u, v] = closed_uv(table, m, t, BigFixed::exp(t), BigFixed::exp(-t));
    return {u.to_double(), v.to_double()};
}

AuxCoeffs w_coeffs(std::size_t max_m, double tau) {
    return w_coeffs(max_m, tau, tau <= 1.0 ? AuxRoute::direct_series : AuxRoute::closed_form);
}

AuxCoeffs w_coeffs(std::size_t max_m, double tau, AuxRoute route) {
    if (!(tau >= 0.0)) throw std::invalid_argument("w_coeffs: tau must be >= 0");
    AuxCoeffs aux;
    aux.tau = tau;
    aux.route = route;
    aux.u.resize(max_m + 1);
    aux.v.resize(max_m + 1);
    aux.w.assign(max_m + 1, 0.0);

    if (route == AuxRoute::direct_series) {
        for (std::size_t m = 0; m <= max_m; ++m) {
            auto [u, v] = uv_direct(m, tau);
            aux.u[m] = u;
            aux.v[m] = v;
        }
    } else {
        const RPolyTable table(max_m + 1);
        const BigFixed t = BigFixed::from_double(tau);
        const BigFixed ep = BigFixed::exp(t);
        const BigFixed em = BigFixed::exp(-t);
        for (std::size_t m = 0; m <= max_m; ++m) {
            const auto [u, v] = closed_uv(table, m, t, ep, em);
            aux.u[m] = u.to_double();
            aux.v[m] = v.to_double();
        }
    }

    const double exp_neg = std::exp(-tau);
    double inv_fact = 1.0;  // 1/m!
    for (std::size_t m = 1; m <= max_m; ++m) {
        inv_fact /= static_cast<double>(m);
        aux.w[m] = inv_fact * exp_neg *
                   (aux.u[m] + 0.5 * static_cast<double>(m) * aux.v[m - 1] + aux.v[m]);
    }
    return aux;
}

namespace {

template <class S>
std::vector<S> x_from_w(std::size_t max_n, const std::vector<S>& w) {
    if (w.size() < max_n + 1)
        throw std::invalid_argument("x_coeffs: aux.w too short for requested order");
    std::vector<S> c(max_n + 1, S(0));
    c[0] = S(1);
    for (std::size_t m = 1; m <= max_n; ++m) c[m] = w[m];
    CoeffSeq<S> e_plus_w(std::move(c));
    return inverse(e_plus_w).coeffs();
}

}  // namespace

std::vector<double> x_coeffs(std::size_t max_n, const AuxCoeffs& aux) {
    return x_from_w<double>(max_n, aux.w);
}

AuxCoeffsT<BigFixed> aux_fixed(std::size_t max_m, double tau) {
    if (!(tau >= 0.0)) throw std::invalid_argument("aux_fixed: tau must be >= 0");
    AuxCoeffsT<BigFixed> aux;
    aux.tau = tau;
    aux.route = AuxRoute::direct_series;
    const BigFixed t = BigFixed::from_double(tau);
    aux.u.reserve(max_m + 1);
    aux.v.reserve(max_m + 1);
    for (std::size_t m = 0; m <= max_m; ++m) {
        auto [u, v] = uv_direct_t<BigFixed>(m, t, BigFixed(0), 4000);
        aux.u.push_back(u);
        aux.v.push_back(v);
    }
    aux.w.assign(max_m + 1, BigFixed(0));
    const BigFixed em = BigFixed::exp(-t);
    for (std::size_t m = 1; m <= max_m; ++m) {
        BigFixed s = aux.u[m] + aux.v[m] +
                     aux.v[m - 1].mul_int(BigInt(static_cast<std::int64_t>(m))).div_int(BigInt(2));
        aux.w[m] = (s * em).div_int(BigInt::factorial(static_cast<unsigned>(m)));
    }
    return aux;
}

std::vector<BigFixed> x_coeffs_fixed(std::size_t max_n, const AuxCoeffsT<BigFixed>& aux) {
    return x_from_w<BigFixed>(max_n, aux.w);
}

namespace {

// e^x for x >= 0 as a rational truncated when term < tol * sum
Rational exp_rational_pos(const Rational& x, const Rational& tol) {
    if (x.sign() < 0) throw std::invalid_argument("exp_rational_pos: x must be >= 0");
    Rational sum(1), term(1);
    for (std::int64_t k = 1; k < 3000; ++k) {
        term = term * x / Rational(k);
        sum += term;
        if (term <= tol * sum) break;
    }
    return sum;
}

}  // namespace

AuxCoeffsT<Rational> aux_rational(std::size_t max_m, const Rational& tau, const Rational& tol) {
    if (tau.sign() < 0) throw std::invalid_argument("aux_rational: tau must be >= 0");
    AuxCoeffsT<Rational> aux;
    aux.tau = tau.to_double();
    aux.route = AuxRoute::direct_series;
    aux.u.reserve(max_m + 1);
    aux.v.reserve(max_m + 1);
    for (std::size_t m = 0; m <= max_m; ++m) {
        auto [u, v] = uv_direct_t<Rational>(m, tau, tol, 3000);
        aux.u.push_back(u);
        aux.v.push_back(v);
    }
    aux.w.assign(max_m + 1, Rational(0));
    const Rational em = Rational(1) / exp_rational_pos(tau, tol);
    Rational fact(1);
    for (std::size_t m = 1; m <= max_m; ++m) {
        fact = fact * Rational(static_cast<std::int64_t>(m));
        Rational s = aux.u[m] + aux.v[m] +
                     aux.v[m - 1] * Rational(static_cast<std::int64_t>(m), 2);
        aux.w[m] = s * em / fact;
    }
    return aux;
}

std::vector<Rational> x_coeffs_rational(std::size_t max_n, const AuxCoeffsT<Rational>& aux) {
    return x_from_w<Rational>(max_n, aux.w);
}

MomentTable moments(std::size_t max_n, const ModelParams& params) {
    MomentTable table{params, {}, {}};
    const double tau = params.tau();
    if (tau == 0.0) {
        table.x.assign(max_n + 1, 0.0);
        table.moments.assign(max_n + 1, 0.0);
        table.x[0] = 1.0;
        table.moments[0] = 1.0;
        return table;
    }
    table.x = x_coeffs(max_n, w_coeffs(max_n, tau));
    table.moments.resize(max_n + 1);
    table.moments[0] = 1.0;
    double fact_theta = 1.0;  // n! theta^n
    for (std::size_t n = 1; n <= max_n; ++n) {
        fact_theta *= static_cast<double>(n) * params.theta();
        const double signed_x = (n % 2 == 0) ? table.x[n] : -table.x[n];
        if (!(signed_x > 0.0))
            throw numerical_degradation(
                "moments: sign of x_" + std::to_string(n) +
                " lost in the float backend; reduce tau or use the exact backend");
        table.moments[n] = fact_theta * signed_x;
        if (!std::isfinite(table.moments[n]))
            throw numerical_degradation(
                "moments: M_" + std::to_string(n) +
                " overflows double; reduce the order or the parameter scale");
    }
    return table;
}

double gen_func(const EvalPoint& point, const ModelParams& params) {
    const double tau = params.tau();
    const double q = point.q;
    const double num = 4.0 * q * std::exp(tau * (1.0 - q));
    const double den = (1.0 + q) * (1.0 + q) -
                       (q - 1.0) * (q - 1.0) * std::exp(-2.0 * q * tau);
    return num / den;
}

}  // namespace photocount
