#include "heislab/heisenberg.hpp"

#include <cmath>

namespace heislab {

bool distinct_cosets(const std::vector<HeisenbergPoint>& points,
                     const std::optional<GridParams>& g) {
    if (points.empty()) throw std::invalid_argument("empty system");
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool same;
            if (g) {
                same = grid_index(points[i].y, g->dy()) == grid_index(points[j].y, g->dy()) &&
                       grid_index(points[i].x, g->dx()) == grid_index(points[j].x, g->dx());
            } else {
                same = points[i].y == points[j].y && points[i].x == points[j].x;
            }
            if (same) return false;
        }
    }
    return true;
}

QuantizeResult quantize(const HeisenbergPoint& a, const GridParams& g) {
    QuantizeResult r;
    r.point.theta = mod1(snap_to_grid(mod1(a.theta), g.theta_step()));
    r.point.y = snap_to_grid(a.y, g.dy());
    r.point.x = snap_to_grid(a.x, g.dx());
    double dtheta = std::abs(r.point.theta - mod1(a.theta));
    dtheta = std::min(dtheta, 1.0 - dtheta); // theta distance on the circle
    r.displacement = std::max({dtheta, std::abs(r.point.y - a.y), std::abs(r.point.x - a.x)});
    return r;
}

} // namespace heislab
