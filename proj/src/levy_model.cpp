#include "lkf/levy_model.hpp"

#include <cmath>
#include <limits>

namespace lkf {

LevyModel::LevyModel(double sigma, double gamma,
                     std::optional<FiniteActivityJumps> jumps)
    : sigma_(sigma), gamma_(gamma), jumps_(std::move(jumps)) {
    if (!(sigma_ >= 0.0)) {
        throw std::invalid_argument("LevyModel: sigma must be >= 0");
    }
    if (jumps_) {
        if (!(jumps_->rate > 0.0)) {
            throw std::invalid_argument("LevyModel: jump rate must be > 0");
        }
        if (!(jumps_->mean_size > 0.0)) {
            throw std::invalid_argument("LevyModel: jump mean_size must be > 0");
        }
    }
    // Not the negative of a subordinator: sigma > 0, or a strictly positive
    // natural drift when sigma = 0.
    if (sigma_ == 0.0 && !(gamma_ > 0.0)) {
        throw std::invalid_argument(
            "LevyModel: bounded variation requires drift gamma > 0");
    }
}

double LevyModel::jump_mu() const {
    if (!jumps_) throw std::domain_error("LevyModel: no jump component");
    return 1.0 / jumps_->mean_size;
}

double LevyModel::drift() const {
    if (sigma_ != 0.0) {
        throw std::domain_error(
            "LevyModel: natural drift undefined for unbounded variation");
    }
    return gamma_;
}

double psi(const LevyModel& model, double theta) {
    if (theta < 0.0) throw std::domain_error("psi: theta must be >= 0");
    double v = model.gamma() * theta +
               0.5 * model.sigma() * model.sigma() * theta * theta;
    if (model.has_jumps()) {
        const double mu = model.jump_mu();
        v += model.jumps()->rate * (mu / (mu + theta) - 1.0);
    }
    return v;
}

double psi_prime(const LevyModel& model, double theta) {
    double v = model.gamma() + model.sigma() * model.sigma() * theta;
    if (model.has_jumps()) {
        const double mu = model.jump_mu();
        v -= model.jumps()->rate * mu / ((mu + theta) * (mu + theta));
    }
    return v;
}

namespace {

// Bisection for an increasing predicate on [lo, hi]: returns the boundary of
// {theta : pred(theta)} to 1e-12 absolute.
template <typename Pred>
double bisect(double lo, double hi, Pred pred) {
    for (int it = 0; it < 200 && (hi - lo) > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (pred(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double phi(const LevyModel& model, double q) {
    if (q < 0.0) throw std::domain_error("phi: q must be >= 0");
    const double dpsi0 = psi_prime(model, 0.0);
    if (q == 0.0 && dpsi0 >= 0.0) return 0.0;

    // psi is convex; restrict to the increasing branch [theta_min, inf).
    double theta_min = 0.0;
    if (dpsi0 < 0.0) {
        double hi = 1.0;
        while (psi_prime(model, hi) <= 0.0) {
            hi *= 2.0;
            if (hi > 1e12) {
                throw std::runtime_error("phi: cannot bracket psi' root");
            }
        }
        theta_min = bisect(0.0, hi, [&](double t) {
            return psi_prime(model, t) > 0.0;
        });
    }

    double hi = theta_min + 1.0;
    while (psi(model, hi) <= q) {
        hi = theta_min + 2.0 * (hi - theta_min);
        if (hi > 1e12) {
            throw std::runtime_error("phi: cannot bracket psi(theta) = q");
        }
    }
    return bisect(theta_min, hi, [&](double t) { return psi(model, t) > q; });
}

double drift_d(const LevyModel& model) { return model.drift(); }

bool is_bounded_variation(const LevyModel& model) {
    return model.is_bounded_variation();
}

}  // namespace lkf
