#pragma once

#include <vector>

namespace lkf {

/// Sorted solver grid on [lo, hi].  Critical points (measure atoms, density
/// breakpoints, query points) are nodes verbatim; the gaps between them are
/// filled uniformly so that no two consecutive nodes are more than `step`
/// apart.
struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    double step = 0.0;
    std::vector<double> nodes;

    std::size_t size() const { return nodes.size(); }

    /// Index of a node equal to x (exact match); -1 if absent.
    std::ptrdiff_t find_node(double x) const;
};

GridSpec make_grid(double lo, double hi, double step,
                   const std::vector<double>& critical_points = {});

}  // namespace lkf
