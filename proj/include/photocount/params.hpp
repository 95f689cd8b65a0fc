#pragma once

#include <cmath>
#include <stdexcept>

// Physical model parameters and the Laplace-variable evaluation point.
// The public API speaks (nu, sigma, t_phys); everything downstream works
// in the dimensionless pair (tau, theta), converted here and only here.

namespace photocount {

class ModelParams {
public:
    // nu: relaxation rate (1/time), > 0
    // sigma: noise intensity, > 0
    // t_phys: registration time, >= 0
    ModelParams(double nu, double sigma, double t_phys)
        : nu_(nu), sigma_(sigma), t_phys_(t_phys),
          tau_(nu * t_phys), theta_(2.0 * sigma / (nu * nu)) {
        if (!(nu > 0.0) || !std::isfinite(nu))
            throw std::invalid_argument("ModelParams: nu must be finite and > 0");
        if (!(sigma > 0.0) || !std::isfinite(sigma))
            throw std::invalid_argument("ModelParams: sigma must be finite and > 0");
        if (!(t_phys >= 0.0) || !std::isfinite(t_phys))
            throw std::invalid_argument("ModelParams: t_phys must be finite and >= 0");
        if (!std::isfinite(tau_) || !std::isfinite(theta_))
            throw std::invalid_argument("ModelParams: derived tau or theta overflows");
    }

    double nu() const { return nu_; }
    double sigma() const { return sigma_; }
    double t_phys() const { return t_phys_; }

    double tau() const { return tau_; }      // nu * t_phys
    double theta() const { return theta_; }  // 2 sigma / nu^2

private:
    double nu_, sigma_, t_phys_;
    double tau_, theta_;
};

// Point lambda on the real Laplace axis with its derived quantities.
// Valid while q^2 = 1 + theta*lambda stays positive.
struct EvalPoint {
    double lambda;
    double z;  // theta * lambda
    double q;  // sqrt(1 + z)
    double r;  // nu * q

    EvalPoint(const ModelParams& p, double lam) : lambda(lam) {
        z = p.theta() * lam;
        double q2 = 1.0 + z;
        if (!(q2 > 0.0))
            throw std::domain_error("EvalPoint: 1 + 2*lambda*sigma/nu^2 must be > 0");
        q = std::sqrt(q2);
        r = p.nu() * q;
    }
};

}  // namespace photocount
