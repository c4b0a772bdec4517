#include "lkf/scale_fn.hpp"

#include <cmath>
#include <stdexcept>

namespace lkf {

namespace {

// (e^{ax} - 1)/a with the a -> 0 limit.
double expm1_over(double a, double x) {
    if (a == 0.0) return x;
    return std::expm1(a * x) / a;
}

}  // namespace

ScaleFunction::ScaleFunction(const LevyModel& model, double q)
    : model_(model), q_(q) {
    if (q < 0.0) throw std::domain_error("ScaleFunction: q must be >= 0");

    if (model.sigma() > 0.0) {
        if (model.has_jumps()) {
            throw UnsupportedModelError(
                "ScaleFunction: no closed form for Gaussian part with jumps");
        }
        family_ = Family::BrownianDrift;
        const double s2 = model.sigma() * model.sigma();
        const double g = model.gamma();
        big_d_ = std::sqrt(g * g + 2.0 * q * s2);
        r_plus_ = (-g + big_d_) / s2;
        r_minus_ = (-g - big_d_) / s2;
        w0_ = 0.0;
        phi_ = r_plus_;
        dpsi_phi_ = big_d_;
    } else if (model.has_jumps()) {
        family_ = Family::CramerLundberg;
        const double d = model.drift();
        const double a = model.jumps()->rate;
        const double mu = model.jump_mu();
        // Roots of d*th^2 + (d*mu - a - q)*th - q*mu = 0; th+ = Phi(q).
        const double b = d * mu - a - q;
        const double disc = b * b + 4.0 * d * q * mu;
        const double sq = std::sqrt(disc);
        th_plus_ = (-b + sq) / (2.0 * d);
        th_minus_ = (-b - sq) / (2.0 * d);
        double_root_ = (sq == 0.0);
        if (!double_root_) {
            a_plus_ = (mu + th_plus_) / (d * (th_plus_ - th_minus_));
            a_minus_ = -(mu + th_minus_) / (d * (th_plus_ - th_minus_));
        }
        w0_ = 1.0 / d;
        phi_ = th_plus_;
        dpsi_phi_ = psi_prime(model, phi_);
        // Guard the explicit quadratic against a malformed parametrization.
        if (std::abs(psi(model, phi_) - q) > 1e-9 * std::max(1.0, q)) {
            throw std::runtime_error(
                "ScaleFunction: quadratic root disagrees with psi");
        }
    } else {
        family_ = Family::PureDrift;
        const double d = model.drift();
        w0_ = 1.0 / d;
        phi_ = q / d;
        dpsi_phi_ = d;
    }
}

double ScaleFunction::w(double x) const {
    if (x < 0.0) return 0.0;
    switch (family_) {
        case Family::BrownianDrift: {
            if (big_d_ == 0.0) {
                return 2.0 * x / (model_.sigma() * model_.sigma());
            }
            return std::exp(r_plus_ * x) * (-std::expm1((r_minus_ - r_plus_) * x)) /
                   big_d_;
        }
        case Family::CramerLundberg: {
            if (double_root_) {
                // q = 0 at the critical drift: a double root at zero.
                const double mu = model_.jump_mu();
                return (1.0 + mu * x) / model_.drift();
            }
            return a_plus_ * std::exp(th_plus_ * x) +
                   a_minus_ * std::exp(th_minus_ * x);
        }
        case Family::PureDrift:
            return std::exp(phi_ * x) * w0_;
    }
    return 0.0;
}

double ScaleFunction::w_scaled(double x) const {
    if (x < 0.0) return 0.0;
    switch (family_) {
        case Family::BrownianDrift:
            if (big_d_ == 0.0) return 2.0 * x / (model_.sigma() * model_.sigma());
            return (-std::expm1((r_minus_ - r_plus_) * x)) / big_d_;
        case Family::CramerLundberg:
            if (double_root_) {
                const double mu = model_.jump_mu();
                return (1.0 + mu * x) / model_.drift();
            }
            return a_plus_ + a_minus_ * std::exp((th_minus_ - th_plus_) * x);
        case Family::PureDrift:
            return w0_;
    }
    return 0.0;
}

double ScaleFunction::z(double x) const {
    if (x <= 0.0 || q_ == 0.0) return 1.0;
    switch (family_) {
        case Family::BrownianDrift:
            return 1.0 + q_ * (expm1_over(r_plus_, x) - expm1_over(r_minus_, x)) /
                             big_d_;
        case Family::CramerLundberg:
            // q > 0 implies both roots are nonzero (their product is -q*mu/d).
            return 1.0 + q_ * (a_plus_ * expm1_over(th_plus_, x) +
                               a_minus_ * expm1_over(th_minus_, x));
        case Family::PureDrift:
            return std::exp(phi_ * x);
    }
    return 1.0;
}

double ScaleFunction::z_scaled(double x) const {
    if (x <= 0.0 || q_ == 0.0) return std::exp(-phi_ * std::max(x, 0.0));
    switch (family_) {
        case Family::BrownianDrift: {
            const double e = std::exp(-r_plus_ * x);
            return e + q_ * ((1.0 - e) / r_plus_ -
                             (std::exp((r_minus_ - r_plus_) * x) - e) / r_minus_) /
                           big_d_;
        }
        case Family::CramerLundberg: {
            const double e = std::exp(-th_plus_ * x);
            return e + q_ * (a_plus_ * (1.0 - e) / th_plus_ +
                             a_minus_ *
                                 (std::exp((th_minus_ - th_plus_) * x) - e) /
                                 th_minus_);
        }
        case Family::PureDrift:
            return 1.0;
    }
    return 1.0;
}

double verify_laplace(const ScaleFunction& sf, double theta, double upper) {
    if (theta <= sf.phi_q()) {
        throw std::domain_error("verify_laplace: requires theta > Phi(q)");
    }
    if (!(upper > 0.0)) {
        throw std::invalid_argument("verify_laplace: upper must be > 0");
    }
    auto f = [&](double x) { return std::exp(-theta * x) * sf.w(x); };
    std::size_t n = static_cast<std::size_t>(std::max(20000.0, 2000.0 * upper));
    if (n % 2 == 1) ++n;
    const double h = upper / static_cast<double>(n);
    double sum = f(0.0) + f(upper);
    for (std::size_t i = 1; i < n; ++i) {
        sum += (i % 2 == 1 ? 4.0 : 2.0) * f(h * static_cast<double>(i));
    }
    const double integral = sum * h / 3.0;
    const double exact = 1.0 / (psi(sf.model(), theta) - sf.q());
    return std::abs(integral - exact);
}

double shift_residual(const ScaleFunction& sf, double lambda, double x,
                      double d_level, const GridSpec& grid) {
    if (x < d_level) {
        throw std::invalid_argument("shift_residual: requires x >= d_level");
    }
    const ScaleFunction shifted(sf.model(), sf.q() + lambda);
    double integral = 0.0;
    const auto& zs = grid.nodes;
    for (std::size_t i = 0; i + 1 < zs.size(); ++i) {
        const double z0 = zs[i], z1 = zs[i + 1];
        const double f0 = shifted.w(x - z0) * sf.w(z0 - d_level);
        const double f1 = shifted.w(x - z1) * sf.w(z1 - d_level);
        integral += 0.5 * (z1 - z0) * (f0 + f1);
    }
    const double lhs = shifted.w(x - d_level) - sf.w(x - d_level);
    return std::abs(lhs - lambda * integral);
}

}  // namespace lkf
