#include "photocount/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace photocount::reference {

namespace {
Rational q(std::int64_t n, std::int64_t d) { return Rational(n, d); }
}

std::vector<Rational> r_poly_plus(std::size_t m) {
    switch (m) {
        case 0: return {q(1, 1)};
        case 1: return {q(0, 1), q(1, 2)};
        case 2: return {q(0, 1), q(-1, 8), q(1, 8)};
        case 3: return {q(0, 1), q(1, 16), q(-1, 16), q(1, 48)};
        case 4: return {q(0, 1), q(-5, 128), q(5, 128), q(-1, 64), q(1, 384)};
        default: throw std::invalid_argument("r_poly_plus: fixture only up to m=4");
    }
}

std::vector<Rational> r_poly_minus(std::size_t m) {
    switch (m) {
        case 0: return {q(1, 1)};
        case 1: return {q(0, 1), q(-1, 2)};
        case 2: return {q(0, 1), q(1, 8), q(1, 8)};
        case 3: return {q(0, 1), q(-1, 16), q(-1, 16), q(-1, 48)};
        case 4: return {q(0, 1), q(5, 128), q(5, 128), q(1, 64), q(1, 384)};
        default: throw std::invalid_argument("r_poly_minus: fixture only up to m=4");
    }
}

namespace {

// the two exponential-polynomial combinations shared by w_m, x_m, P_n^(N)
double bracket2(double t) { return 2.0 * t * t + 2.0 * t - 1.0 + std::exp(-2.0 * t); }
double bracket3(double t) {
    return 2.0 * t * t * t + 6.0 * t * t + 3.0 * t - 6.0 +
           3.0 * (3.0 * t + 2.0) * std::exp(-2.0 * t);
}

}  // namespace

double w_closed(std::size_t m, double tau) {
    switch (m) {
        case 1: return 0.5 * tau;
        case 2:
            return (2.0 * tau * tau - 2.0 * tau + 1.0 - std::exp(-2.0 * tau)) / 16.0;
        case 3:
            return (2.0 * tau * tau * tau - 6.0 * tau * tau + 9.0 * tau - 6.0 +
                    3.0 * (tau + 2.0) * std::exp(-2.0 * tau)) / 96.0;
        default: throw std::invalid_argument("w_closed: fixture only for m=1..3");
    }
}

double x_closed(std::size_t n, double tau) {
    switch (n) {
        case 0: return 1.0;
        case 1: return -0.5 * tau;
        case 2: return bracket2(tau) / 16.0;
        case 3: return -bracket3(tau) / 96.0;
        default: throw std::invalid_argument("x_closed: fixture only for n=0..3");
    }
}

double p_closed(std::size_t n, std::size_t order_n, const ModelParams& params) {
    if (order_n > 3 || n > order_n)
        throw std::invalid_argument("p_closed: fixture only for n <= N <= 3");
    const double tau = params.tau();
    const double a = params.sigma() * tau / (params.nu() * params.nu());
    const double g = params.sigma() / (2.0 * params.nu() * params.nu());
    const double b2 = g * g * bracket2(tau);
    const double b3 = g * g * g * bracket3(tau);

    switch (order_n) {
        case 0:
            return 1.0;
        case 1:
            return n == 0 ? 1.0 - a : a;
        case 2:
            switch (n) {
                case 0: return 1.0 - a + b2;
                case 1: return a - 2.0 * b2;
                default: return b2;
            }
        default:
            switch (n) {
                case 0: return 1.0 - a + b2 - (2.0 / 3.0) * b3;
                case 1: return a - 2.0 * b2 + 2.0 * b3;
                case 2: return b2 - 2.0 * b3;
                default: return (2.0 / 3.0) * b3;
            }
    }
}

}  // namespace photocount::reference
