#pragma once

#include <cstddef>
#include <vector>

#include "photocount/exact.hpp"
#include "photocount/params.hpp"

// Hand-expanded low-order closed forms. These are written out term by term,
// independently of the recurrences and series kernels, and serve as the
// regression fixtures for the algebraic pipeline.

namespace photocount::reference {

// exact monomial coefficients of R_m^+/- for m <= 4
std::vector<Rational> r_poly_plus(std::size_t m);
std::vector<Rational> r_poly_minus(std::size_t m);

// w_1..w_3 and x_1..x_3 as explicit functions of tau
double w_closed(std::size_t m, double tau);   // m in {1,2,3}
double x_closed(std::size_t n, double tau);   // n in {0,1,2,3}

// explicit P_n^(N) for N <= 3, n <= N
double p_closed(std::size_t n, std::size_t order_n, const ModelParams& params);

}  // namespace photocount::reference
