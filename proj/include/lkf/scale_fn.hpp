#pragma once

#include "lkf/grid.hpp"
#include "lkf/levy_model.hpp"

namespace lkf {

/// Thrown when a model family has no closed-form scale function here.
struct UnsupportedModelError : std::domain_error {
    using std::domain_error::domain_error;
};

/// q-scale function pair (W, Z) of a spectrally negative Levy process,
/// evaluated in closed form.  Supported families:
///   - Brownian motion with drift (sigma > 0, no jumps),
///   - bounded variation drift plus compound-Poisson exponential jumps,
///   - pure positive drift.
/// W is zero on the negative half-line and strictly increasing on [0, inf);
/// Z(x) = 1 + q * int_0^x W(y) dy, with Z = 1 on (-inf, 0].
class ScaleFunction {
public:
    ScaleFunction(const LevyModel& model, double q);

    const LevyModel& model() const { return model_; }
    double q() const { return q_; }
    /// W(0): zero for unbounded variation, 1/d for bounded variation.
    double w_at_zero() const { return w0_; }
    /// Phi(q), the largest root of psi = q.
    double phi_q() const { return phi_; }
    double psi_prime_at_phi() const { return dpsi_phi_; }

    double w(double x) const;
    double z(double x) const;

    /// e^{-Phi(q) x} W(x), stable for large x (tends to 1/psi'(Phi(q))).
    double w_scaled(double x) const;
    /// e^{-Phi(q) x} Z(x).
    double z_scaled(double x) const;

private:
    enum class Family { BrownianDrift, CramerLundberg, PureDrift };

    LevyModel model_;
    double q_;
    Family family_;
    double w0_;
    double phi_;
    double dpsi_phi_;

    // Brownian-with-drift parameters: roots r+ = Phi(q) >= 0 > r- of
    // sigma^2 r^2/2 + gamma r = q, and D = sqrt(gamma^2 + 2 q sigma^2).
    double r_plus_ = 0.0, r_minus_ = 0.0, big_d_ = 0.0;
    // Cramer-Lundberg partial fractions: W(x) = A+ e^{th+ x} + A- e^{th- x}.
    double th_plus_ = 0.0, th_minus_ = 0.0, a_plus_ = 0.0, a_minus_ = 0.0;
    bool double_root_ = false;
};

/// | int_0^upper e^{-theta x} W(x) dx  -  1/(psi(theta) - q) |, by composite
/// Simpson quadrature.  Requires theta > Phi(q).
double verify_laplace(const ScaleFunction& sf, double theta, double upper);

/// Residual of the discount-shift identity
///   W^{(q+lambda)}(x-d) - W^{(q)}(x-d)
///     = lambda * int_d^x W^{(q+lambda)}(x-z) W^{(q)}(z-d) dz
/// with trapezoid quadrature on the grid.
double shift_residual(const ScaleFunction& sf, double lambda, double x,
                      double d_level, const GridSpec& grid);

}  // namespace lkf
