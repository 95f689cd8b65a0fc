#pragma once

#include <stdexcept>

namespace photocount {

// Modified Bessel functions by their defining series, summed until the
// term falls below 1e-16 of the partial sum.
double bessel_i0(double x);
double bessel_i1(double x);

// psi(tau) = tau I_1(2) + (tau^2/2)(I_0(2) - 1) + I_0(2)
double psi(double tau);

struct BesselPack {
    double tau;
    double i0_tau;  // I_0(tau)
    double i1_tau;  // I_1(tau)
    double i0_2;    // I_0(2)
    double i1_2;    // I_1(2)
    double psi;     // psi(tau)
};

BesselPack make_bessel_pack(double tau);

}  // namespace photocount
