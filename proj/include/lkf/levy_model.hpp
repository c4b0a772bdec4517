#pragma once

#include <optional>
#include <stdexcept>

namespace lkf {

/// Compound-Poisson spectrally negative jump component with exponentially
/// distributed downward jump magnitudes.
struct FiniteActivityJumps {
    double rate;       // jump intensity
    double mean_size;  // mean magnitude of a downward jump (= 1/mu)
};

/// Spectrally negative Levy process X_t = gamma*t + sigma*B_t - (compound
/// Poisson sum of downward jumps).  For sigma = 0 the process has bounded
/// variation and gamma is the natural drift of the piecewise-linear path.
class LevyModel {
public:
    LevyModel(double sigma, double gamma,
              std::optional<FiniteActivityJumps> jumps = std::nullopt);

    double sigma() const { return sigma_; }
    double gamma() const { return gamma_; }
    const std::optional<FiniteActivityJumps>& jumps() const { return jumps_; }
    bool has_jumps() const { return jumps_.has_value(); }

    /// mu = 1/mean_size of the jump law; only valid with jumps present.
    double jump_mu() const;

    bool is_bounded_variation() const { return sigma_ == 0.0; }

    /// Natural drift of a bounded-variation path.  Throws std::domain_error
    /// for sigma > 0.
    double drift() const;

private:
    double sigma_;
    double gamma_;
    std::optional<FiniteActivityJumps> jumps_;
};

/// Laplace exponent psi(theta), theta >= 0:
///   gamma*theta + sigma^2 theta^2 / 2 + rate*(mu/(mu+theta) - 1).
/// Throws std::domain_error for theta < 0.
double psi(const LevyModel& model, double theta);

/// psi'(theta) = gamma + sigma^2 theta - rate*mu/(mu+theta)^2.
double psi_prime(const LevyModel& model, double theta);

/// Right inverse of psi: the largest root of psi(lambda) = q, q >= 0.
/// Bracketing plus bisection; the root is located to 1e-12 absolute.
double phi(const LevyModel& model, double q);

/// Natural drift of a bounded-variation model; domain error otherwise.
double drift_d(const LevyModel& model);

bool is_bounded_variation(const LevyModel& model);

}  // namespace lkf
