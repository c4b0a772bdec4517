#include "lkf/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lkf {

std::ptrdiff_t GridSpec::find_node(double x) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), x);
    if (it != nodes.end() && *it == x) return it - nodes.begin();
    return -1;
}

GridSpec make_grid(double lo, double hi, double step,
                   const std::vector<double>& critical_points) {
    if (!(hi >= lo)) throw std::invalid_argument("make_grid: hi < lo");
    if (!(step > 0.0)) throw std::invalid_argument("make_grid: step <= 0");

    std::vector<double> anchors{lo, hi};
    for (double c : critical_points) {
        if (c >= lo && c <= hi) anchors.push_back(c);
    }
    std::sort(anchors.begin(), anchors.end());
    anchors.erase(std::unique(anchors.begin(), anchors.end(),
                              [&](double a, double b) {
                                  return std::abs(b - a) < 1e-14;
                              }),
                  anchors.end());

    GridSpec g;
    g.lo = lo;
    g.hi = hi;
    g.step = step;
    g.nodes.reserve(static_cast<std::size_t>((hi - lo) / step) + anchors.size() + 2);
    for (std::size_t i = 0; i + 1 < anchors.size(); ++i) {
        const double a = anchors[i];
        const double b = anchors[i + 1];
        const auto parts = static_cast<std::size_t>(std::ceil((b - a) / step - 1e-12));
        const std::size_t n = std::max<std::size_t>(parts, 1);
        g.nodes.push_back(a);
        for (std::size_t k = 1; k < n; ++k) {
            g.nodes.push_back(a + (b - a) * static_cast<double>(k) / static_cast<double>(n));
        }
    }
    g.nodes.push_back(anchors.back());
    return g;
}

}  // namespace lkf
