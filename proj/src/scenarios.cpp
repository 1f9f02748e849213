#include "heislab/scenarios.hpp"

#include <cmath>

namespace heislab {

std::vector<HeisenbergPoint> random_distinct_coset_points(const GridParams& g, int n,
                                                          double max_abs, Rng& rng) {
    const long long ymax = static_cast<long long>(std::floor(max_abs / g.dy()));
    const long long xmax = static_cast<long long>(std::floor(max_abs / g.dx()));
    std::vector<HeisenbergPoint> pts;
    int guard = 0;
    while (static_cast<int>(pts.size()) < n) {
        if (++guard > 1000 * n) throw std::runtime_error("point sampling stalled");
        HeisenbergPoint p;
        p.theta = static_cast<double>(rng.uniform_int(0, g.M - 1)) / g.M;
        p.y = static_cast<double>(rng.uniform_int(-ymax, ymax)) * g.dy();
        p.x = static_cast<double>(rng.uniform_int(-xmax, xmax)) * g.dx();
        bool clash = false;
        for (const auto& q : pts)
            if (q.y == p.y && q.x == p.x) clash = true;
        if (!clash) pts.push_back(p);
    }
    return pts;
}

std::vector<cd> random_coeffs(int n, Rng& rng) {
    std::vector<cd> c(n);
    for (auto& v : c) v = cd(rng.normal(), rng.normal());
    return c;
}

HeisenbergField random_kerp_field(const GridParams& g, int fiber_absmax, Rng& rng,
                                  double width_lo, double width_hi, double center_max) {
    if (fiber_absmax < 1 || fiber_absmax >= g.M / 2)
        throw std::invalid_argument("fiber range out of bounds");
    std::vector<FiberProfile> profiles;
    for (int a = 1; a <= fiber_absmax; ++a) {
        for (int k : {a, -a}) {
            FiberProfile p;
            p.k = k;
            p.amplitude = cd(rng.normal(), rng.normal());
            p.y0 = rng.uniform(-center_max, center_max);
            p.x0 = rng.uniform(-center_max, center_max);
            p.sy = rng.uniform(width_lo, width_hi);
            p.sx = rng.uniform(width_lo, width_hi);
            profiles.push_back(p);
        }
    }
    return make_fiber_field(g, profiles);
}

ComboSpec random_combo(const GridParams& g, int n, int max_steps, double budget,
                       Rng& rng) {
    ComboSpec spec;
    spec.points = random_distinct_coset_points(g, n, max_steps * std::max(g.dy(), g.dx()), rng);
    spec.coeffs = random_coeffs(n, rng);
    double total = 0.0;
    for (const cd& c : spec.coeffs) total += std::abs(c);
    if (total > 0.0)
        for (cd& c : spec.coeffs) c *= budget / total;
    return spec;
}

} // namespace heislab
