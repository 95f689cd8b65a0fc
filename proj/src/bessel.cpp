#include "photocount/bessel.hpp"

namespace photocount {

double bessel_i0(double x) {
    if (!(x >= 0.0)) throw std::domain_error("bessel_i0: x must be >= 0");
    const double h = 0.25 * x * x;  // (x/2)^2
    double term = 1.0, sum = 1.0;
    for (int n = 1; n < 1000; ++n) {
        term *= h / (static_cast<double>(n) * n);
        sum += term;
        if (term < 1e-16 * sum) break;
    }
    return sum;
}

double bessel_i1(double x) {
    if (!(x >= 0.0)) throw std::domain_error("bessel_i1: x must be >= 0");
    if (x == 0.0) return 0.0;
    const double h = 0.25 * x * x;
    double term = 0.5 * x;  // m = 1 term (x/2)^1 / (1! 0!)
    double sum = term;
    for (int m = 1; m < 1000; ++m) {
        term *= h / (static_cast<double>(m) * (m + 1));
        sum += term;
        if (term < 1e-16 * sum) break;
    }
    return sum;
}

double psi(double tau) {
    if (!(tau >= 0.0)) throw std::domain_error("psi: tau must be >= 0");
    const double i0_2 = bessel_i0(2.0);
    const double i1_2 = bessel_i1(2.0);
    return tau * i1_2 + 0.5 * tau * tau * (i0_2 - 1.0) + i0_2;
}

BesselPack make_bessel_pack(double tau) {
    BesselPack p{};
    p.tau = tau;
    p.i0_tau = bessel_i0(tau);
    p.i1_tau = bessel_i1(tau);
    p.i0_2 = bessel_i0(2.0);
    p.i1_2 = bessel_i1(2.0);
    p.psi = tau * p.i1_2 + 0.5 * tau * tau * (p.i0_2 - 1.0) + p.i0_2;
    return p;
}

}  // namespace photocount
