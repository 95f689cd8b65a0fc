#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "photocount/exact.hpp"
#include "photocount/params.hpp"
#include "photocount/rpoly.hpp"
#include "photocount/series.hpp"

// Auxiliary coefficients u_m, v_m, w_m of the expansion of
// G(lambda) = e^tau / Q(lambda) in powers of z = theta*lambda, the inverse
// sequence X = (E + W)^-1, and the moments M_n of the absorbed energy.
//
// Two independent routes exist for u_m, v_m:
//   direct: the defining series, all terms positive, stable at any tau;
//   closed: R-polynomial closed forms. The closed form combines e^tau R+
//             and e^-tau R- whose sum is O(tau^2m) while each term is O(1),
//             so it is evaluated in wide fixed-point and rounded once.

namespace photocount {

struct numerical_degradation : std::runtime_error {
    explicit numerical_degradation(const std::string& what) : std::runtime_error(what) {}
};

enum class AuxRoute { direct_series, closed_form };

template <class S>
struct AuxCoeffsT {
    double tau = 0.0;
    std::vector<S> u, v, w;  // indices 0..max_m; w[0] == 0
    AuxRoute route = AuxRoute::direct_series;
};

using AuxCoeffs = AuxCoeffsT<double>;

// Truncated sums of Eqs. u_m = sum_{n>=m} tau^2n/(2n)! * n!/(n-m)! and the
// (2n+1)! analogue; stops when the term drops below tol * partial_sum.
std::pair<double, double> uv_direct(std::size_t m, double tau, double tol = 1e-16);

// Closed forms u_m = (m!/2)(e^tau R_m^+ + e^-tau R_m^-),
// v_m = ((m+1)!/tau)(e^tau R_{m+1}^+ + e^-tau R_{m+1}^-).
// Requires table.max_m() >= m+1 and tau > 0.
std::pair<double, double> uv_closed(std::size_t m, double tau, const RPolyTable& table);

// w_0 = 0, w_m = (1/m!) e^-tau (u_m + m v_{m-1}/2 + v_m).
// Route defaults to the direct series for tau <= 1 and the closed forms above.
AuxCoeffs w_coeffs(std::size_t max_m, double tau);
AuxCoeffs w_coeffs(std::size_t max_m, double tau, AuxRoute route);

// x_0 = 1, X = (E + W)^-1 via the series-algebra inverse.
std::vector<double> x_coeffs(std::size_t max_n, const AuxCoeffs& aux);

// High-precision backend: same pipeline in wide fixed-point (direct series).
AuxCoeffsT<BigFixed> aux_fixed(std::size_t max_m, double tau);
std::vector<BigFixed> x_coeffs_fixed(std::size_t max_n, const AuxCoeffsT<BigFixed>& aux);

// Exact-rational backend; series truncated when term < tol * sum, e^-tau
// truncated the same way, so results carry an explicit truncation error
// instead of roundoff. tau must be rational (every double is).
AuxCoeffsT<Rational> aux_rational(std::size_t max_m, const Rational& tau,
                                  const Rational& tol = Rational(1, 1000000000000000000LL));
std::vector<Rational> x_coeffs_rational(std::size_t max_n, const AuxCoeffsT<Rational>& aux);

struct MomentTable {
    ModelParams params;
    std::vector<double> x;        // x_0..x_N
    std::vector<double> moments;  // M_n = (-1)^n n! theta^n x_n
};

// Throws numerical_degradation when the alternating sign of x_n is lost
// (switch to the exact backend or reduce tau when that happens).
MomentTable moments(std::size_t max_n, const ModelParams& params);

// Q(lambda) of the closed Ziegert form, evaluated overflow-safely.
double gen_func(const EvalPoint& point, const ModelParams& params);

}  // namespace photocount
