#pragma once

#include <utility>
#include <vector>

#include "lkf/levy_model.hpp"

namespace lkf {

/// Point mass of a Radon measure.
struct Atom {
    double level;
    double mass;
};

/// Right-continuous step function used for measure densities and for
/// integrands in resolvent computations.  Value is `values[i]` on
/// [breakpoints[i], breakpoints[i+1]) and `values.back()` from the last
/// breakpoint onward; zero to the left of the first breakpoint.
class PiecewiseConstant {
public:
    PiecewiseConstant() = default;
    PiecewiseConstant(std::vector<double> breakpoints, std::vector<double> values);

    static PiecewiseConstant constant(double v);

    double operator()(double x) const;
    /// Exact integral over [a, b].
    double integral(double a, double b) const;
    bool is_zero() const;

    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> breakpoints_;
    std::vector<double> values_;
};

/// Revuz measure of a positive co-natural additive functional on a working
/// window: a finite list of atoms plus a piecewise-constant density.  The
/// measure is zero outside the window.
class RadonMeasureSpec {
public:
    RadonMeasureSpec() = default;
    RadonMeasureSpec(std::vector<Atom> atoms, PiecewiseConstant density,
                     double window_lo, double window_hi);

    /// Builds from possibly unsorted atoms; atoms at equal levels are merged.
    static RadonMeasureSpec from_samples(std::vector<Atom> atoms,
                                         PiecewiseConstant density,
                                         double window_lo, double window_hi);

    static RadonMeasureSpec zero(double window_lo, double window_hi);

    const std::vector<Atom>& atoms() const { return atoms_; }
    const PiecewiseConstant& density() const { return density_; }
    double window_lo() const { return window_lo_; }
    double window_hi() const { return window_hi_; }

    /// Density value at z (zero outside the window).
    double density_at(double z) const;
    /// Exact density integral over [a, b] intersected with the window.
    double density_integral(double a, double b) const;

    bool empty() const;

private:
    std::vector<Atom> atoms_;
    PiecewiseConstant density_;
    double window_lo_ = 0.0;
    double window_hi_ = 0.0;
};

/// Difference of two nonnegative Radon measures on a common window.
struct SignedMeasureSpec {
    RadonMeasureSpec plus;
    RadonMeasureSpec minus;

    SignedMeasureSpec() = default;
    explicit SignedMeasureSpec(RadonMeasureSpec p);
    SignedMeasureSpec(RadonMeasureSpec p, RadonMeasureSpec m);
};

/// The map turning a Revuz measure into the Volterra driving measure: each
/// atom mass p becomes d*(1 - e^{-p/d}) for bounded variation; atoms are kept
/// as-is in the unbounded-variation limit.  Diffuse part unchanged.
RadonMeasureSpec apply_T(const RadonMeasureSpec& nu, const LevyModel& model);

/// Total mass (atoms + density) on a closed subinterval of the window.
double total_mass(const RadonMeasureSpec& nu, double lo, double hi);

/// True iff apply_T(nu) is dominated by nu atom-by-atom with equal density.
bool check_T_dominated(const RadonMeasureSpec& nu, const LevyModel& model);

}  // namespace lkf
