#include "lkf/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lkf {

PiecewiseConstant::PiecewiseConstant(std::vector<double> breakpoints,
                                     std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (breakpoints_.size() != values_.size()) {
        throw std::invalid_argument("PiecewiseConstant: size mismatch");
    }
    if (!std::is_sorted(breakpoints_.begin(), breakpoints_.end())) {
        throw std::invalid_argument("PiecewiseConstant: breakpoints not sorted");
    }
}

PiecewiseConstant PiecewiseConstant::constant(double v) {
    return PiecewiseConstant({-std::numeric_limits<double>::infinity()}, {v});
}

double PiecewiseConstant::operator()(double x) const {
    if (breakpoints_.empty() || x < breakpoints_.front()) return 0.0;
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    return values_[(it - breakpoints_.begin()) - 1];
}

double PiecewiseConstant::integral(double a, double b) const {
    if (b <= a || breakpoints_.empty()) return 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        const double seg_lo = breakpoints_[i];
        const double seg_hi = (i + 1 < breakpoints_.size())
                                  ? breakpoints_[i + 1]
                                  : std::numeric_limits<double>::infinity();
        const double lo = std::max(a, seg_lo);
        const double hi = std::min(b, seg_hi);
        if (hi > lo) total += values_[i] * (hi - lo);
    }
    return total;
}

bool PiecewiseConstant::is_zero() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](double v) { return v == 0.0; });
}

RadonMeasureSpec::RadonMeasureSpec(std::vector<Atom> atoms,
                                   PiecewiseConstant density,
                                   double window_lo, double window_hi)
    : atoms_(std::move(atoms)),
      density_(std::move(density)),
      window_lo_(window_lo),
      window_hi_(window_hi) {
    if (!(window_hi_ >= window_lo_)) {
        throw std::invalid_argument("RadonMeasureSpec: empty window");
    }
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (!(atoms_[i].mass > 0.0)) {
            throw std::invalid_argument("RadonMeasureSpec: atom mass must be > 0");
        }
        if (atoms_[i].level < window_lo_ || atoms_[i].level > window_hi_) {
            throw std::invalid_argument("RadonMeasureSpec: atom outside window");
        }
        if (i > 0 && !(atoms_[i].level > atoms_[i - 1].level)) {
            throw std::invalid_argument(
                "RadonMeasureSpec: atom levels must be strictly increasing");
        }
    }
    for (double v : density_.values()) {
        if (v < 0.0) {
            throw std::invalid_argument("RadonMeasureSpec: density must be >= 0");
        }
    }
}

RadonMeasureSpec RadonMeasureSpec::from_samples(std::vector<Atom> atoms,
                                                PiecewiseConstant density,
                                                double window_lo,
                                                double window_hi) {
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.level < b.level; });
    std::vector<Atom> merged;
    for (const Atom& a : atoms) {
        if (!merged.empty() && merged.back().level == a.level) {
            merged.back().mass += a.mass;
        } else {
            merged.push_back(a);
        }
    }
    return RadonMeasureSpec(std::move(merged), std::move(density), window_lo,
                            window_hi);
}

RadonMeasureSpec RadonMeasureSpec::zero(double window_lo, double window_hi) {
    return RadonMeasureSpec({}, PiecewiseConstant{}, window_lo, window_hi);
}

double RadonMeasureSpec::density_at(double z) const {
    if (z < window_lo_ || z > window_hi_) return 0.0;
    return density_(z);
}

double RadonMeasureSpec::density_integral(double a, double b) const {
    return density_.integral(std::max(a, window_lo_), std::min(b, window_hi_));
}

bool RadonMeasureSpec::empty() const {
    return atoms_.empty() && density_.is_zero();
}

SignedMeasureSpec::SignedMeasureSpec(RadonMeasureSpec p)
    : plus(std::move(p)),
      minus(RadonMeasureSpec::zero(plus.window_lo(), plus.window_hi())) {}

SignedMeasureSpec::SignedMeasureSpec(RadonMeasureSpec p, RadonMeasureSpec m)
    : plus(std::move(p)), minus(std::move(m)) {
    if (plus.window_lo() != minus.window_lo() ||
        plus.window_hi() != minus.window_hi()) {
        throw std::invalid_argument("SignedMeasureSpec: windows disagree");
    }
}

RadonMeasureSpec apply_T(const RadonMeasureSpec& nu, const LevyModel& model) {
    if (!model.is_bounded_variation()) return nu;
    const double d = model.drift();
    std::vector<Atom> atoms = nu.atoms();
    for (Atom& a : atoms) {
        a.mass = d * (-std::expm1(-a.mass / d));
    }
    return RadonMeasureSpec(std::move(atoms), nu.density(), nu.window_lo(),
                            nu.window_hi());
}

double total_mass(const RadonMeasureSpec& nu, double lo, double hi) {
    if (lo < nu.window_lo() || hi > nu.window_hi() || hi < lo) {
        throw std::invalid_argument("total_mass: interval outside window");
    }
    double m = nu.density_integral(lo, hi);
    for (const Atom& a : nu.atoms()) {
        if (a.level >= lo && a.level <= hi) m += a.mass;
    }
    return m;
}

bool check_T_dominated(const RadonMeasureSpec& nu, const LevyModel& model) {
    const RadonMeasureSpec mapped = apply_T(nu, model);
    for (std::size_t i = 0; i < nu.atoms().size(); ++i) {
        if (mapped.atoms()[i].level != nu.atoms()[i].level) return false;
        if (mapped.atoms()[i].mass > nu.atoms()[i].mass) return false;
    }
    return mapped.density().breakpoints() == nu.density().breakpoints() &&
           mapped.density().values() == nu.density().values();
}

}  // namespace lkf
