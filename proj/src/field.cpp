#include "heislab/field.hpp"

#include <cmath>

namespace heislab {

namespace {

void check_field_shift(const HeisenbergPoint& h, const GridParams& g) {
    if (!on_grid(h.y, g.dy()) || !on_grid(h.x, g.dx()))
        throw std::invalid_argument("off-grid translation");
}

} // namespace

HeisenbergField zero_field(const GridParams& g) {
    g.validate();
    HeisenbergField F;
    F.grid = g;
    F.fibers.assign(g.M, std::vector<cd>(static_cast<std::size_t>(g.Ny) * g.Nx, cd(0.0, 0.0)));
    return F;
}

double field_norm(const HeisenbergField& F) {
    double acc = 0.0;
    for (const auto& fib : F.fibers)
        for (const cd& v : fib) acc += std::norm(v);
    return std::sqrt(acc * F.grid.dy() * F.grid.dx());
}

std::vector<cd> sample_theta(const HeisenbergField& F, int m) {
    const GridParams& g = F.grid;
    std::vector<cd> slice(static_cast<std::size_t>(g.Ny) * g.Nx, cd(0.0, 0.0));
    for (int k = F.kmin(); k <= F.kmax(); ++k) {
        const cd ph = cis(kTwoPi * mod1(static_cast<double>(k) * m / g.M));
        const auto& fib = F.fiber(k);
        for (std::size_t idx = 0; idx < slice.size(); ++idx) slice[idx] += ph * fib[idx];
    }
    return slice;
}

HeisenbergField left_translate(const HeisenbergField& F, const HeisenbergPoint& h) {
    const GridParams& g = F.grid;
    check_field_shift(h, g);
    const int jh = static_cast<int>(grid_index(h.y, g.dy()));
    const int ih = static_cast<int>(grid_index(h.x, g.dx()));

    HeisenbergField out = zero_field(g);
    for (int k = F.kmin(); k <= F.kmax(); ++k) {
        const cd central = cis(-kTwoPi * mod1(k * h.theta));
        const auto& src = F.fiber(k);
        auto& dst = out.fiber(k);
        for (int j = 0; j < g.Ny; ++j) {
            const int js = wrap_index(j - jh, g.Ny);
            // wrapped representative of y - y_h: the grid value being read
            const cd rowph = central * cis(kTwoPi * k * h.x * F.y(js));
            const cd* s = &src[static_cast<std::size_t>(js) * g.Nx];
            cd* d = &dst[static_cast<std::size_t>(j) * g.Nx];
            for (int i = 0; i < g.Nx; ++i) d[i] = rowph * s[wrap_index(i - ih, g.Nx)];
        }
    }
    return out;
}

HeisenbergField right_translate(const HeisenbergField& F, const HeisenbergPoint& h) {
    const GridParams& g = F.grid;
    check_field_shift(h, g);
    const int jh = static_cast<int>(grid_index(h.y, g.dy()));
    const int ih = static_cast<int>(grid_index(h.x, g.dx()));

    HeisenbergField out = zero_field(g);
    for (int k = F.kmin(); k <= F.kmax(); ++k) {
        const cd central = cis(kTwoPi * mod1(k * h.theta));
        const auto& src = F.fiber(k);
        auto& dst = out.fiber(k);
        for (int j = 0; j < g.Ny; ++j) {
            const int js = wrap_index(j + jh, g.Ny);
            const cd* s = &src[static_cast<std::size_t>(js) * g.Nx];
            cd* d = &dst[static_cast<std::size_t>(j) * g.Nx];
            for (int i = 0; i < g.Nx; ++i)
                d[i] = central * cis(-kTwoPi * k * F.x(i) * h.y) * s[wrap_index(i + ih, g.Nx)];
        }
    }
    return out;
}

CenterProjection center_project(const HeisenbergField& F) {
    CenterProjection out{zero_field(F.grid), zero_field(F.grid)};
    out.PF.fiber(0) = F.fiber(0);
    for (int k = F.kmin(); k <= F.kmax(); ++k)
        if (k != 0) out.KF.fiber(k) = F.fiber(k);
    return out;
}

RosenblattExample rosenblatt_example(int n, const RosenblattRegion& region,
                                     const GridParams& g) {
    g.validate();
    if (n < 2 || g.M % n != 0)
        throw std::invalid_argument("center order must divide theta-grid");
    if (!(region.theta1 > region.theta0) || !(region.y1 > region.y0) ||
        !(region.x1 > region.x0))
        throw std::invalid_argument("empty region");

    HeisenbergField base = zero_field(g);

    // theta-DFT coefficients of the window indicator sampled at theta_m = m/M
    std::vector<cd> coef(g.M, cd(0.0, 0.0));
    int hits = 0;
    for (int m = 0; m < g.M; ++m) {
        double theta = static_cast<double>(m) / g.M;
        if (theta >= region.theta0 && theta < region.theta1) {
            ++hits;
            for (int k = base.kmin(); k <= base.kmax(); ++k)
                coef[k + g.M / 2] += cis(-kTwoPi * mod1(static_cast<double>(k) * m / g.M));
        }
    }
    if (hits == 0) throw std::invalid_argument("empty region");
    for (cd& c : coef) c /= static_cast<double>(g.M);

    int spatial_hits = 0;
    for (int j = 0; j < g.Ny; ++j) {
        for (int i = 0; i < g.Nx; ++i) {
            double yv = base.y(j), xv = base.x(i);
            if (yv >= region.y0 && yv < region.y1 && xv >= region.x0 && xv < region.x1) {
                ++spatial_hits;
                for (int k = base.kmin(); k <= base.kmax(); ++k)
                    base.fiber(k)[static_cast<std::size_t>(j) * g.Nx + i] = coef[k + g.M / 2];
            }
        }
    }
    if (spatial_hits == 0) throw std::invalid_argument("empty region");

    // averaging over the order-n central subgroup: fibers with n | k pick up
    // the factor n, all others vanish identically
    RosenblattExample out{zero_field(g), {}};
    for (int k = base.kmin(); k <= base.kmax(); ++k) {
        if (k % n != 0) continue;
        auto& dst = out.F.fiber(k);
        const auto& src = base.fiber(k);
        for (std::size_t idx = 0; idx < src.size(); ++idx)
            dst[idx] = static_cast<double>(n) * src[idx];
    }
    out.witness.points = {identity_point(), HeisenbergPoint{1.0 / n, 0.0, 0.0}};
    out.witness.coeffs = {cd(1.0, 0.0), cd(-1.0, 0.0)};
    return out;
}

HeisenbergField exp_right_apply(const ComboSpec& spec, const HeisenbergField& F,
                                double tol) {
    if (spec.points.size() != spec.coeffs.size())
        throw std::invalid_argument("coefficient count does not match point count");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

    const double base = field_norm(F);
    HeisenbergField acc = F;   // m = 0 term
    HeisenbergField term = F;
    if (base == 0.0) return acc;

    constexpr int kMaxTerms = 500;
    for (int m = 1; m <= kMaxTerms; ++m) {
        HeisenbergField next = zero_field(F.grid);
        for (std::size_t j = 0; j < spec.points.size(); ++j) {
            if (spec.coeffs[j] == cd(0.0, 0.0)) continue;
            HeisenbergField shifted = right_translate(term, spec.points[j]);
            for (int k = next.kmin(); k <= next.kmax(); ++k) {
                auto& dst = next.fiber(k);
                const auto& src = shifted.fiber(k);
                for (std::size_t idx = 0; idx < dst.size(); ++idx)
                    dst[idx] += spec.coeffs[j] * src[idx];
            }
        }
        for (auto& fib : next.fibers)
            for (cd& v : fib) v /= static_cast<double>(m);
        term = std::move(next);
        double tnorm = field_norm(term);
        for (int k = acc.kmin(); k <= acc.kmax(); ++k) {
            auto& dst = acc.fiber(k);
            const auto& src = term.fiber(k);
            for (std::size_t idx = 0; idx < dst.size(); ++idx) dst[idx] += src[idx];
        }
        if (tnorm < tol * base) return acc;
    }
    throw std::runtime_error("exponential series did not converge");
}

double translate_combo_residual(const HeisenbergField& F, const ComboSpec& spec) {
    if (spec.points.size() != spec.coeffs.size())
        throw std::invalid_argument("coefficient count does not match point count");
    if (spec.points.empty()) throw std::invalid_argument("empty system");

    HeisenbergField acc = zero_field(F.grid);
    for (std::size_t j = 0; j < spec.points.size(); ++j) {
        HeisenbergField term = left_translate(F, spec.points[j]);
        for (int k = acc.kmin(); k <= acc.kmax(); ++k) {
            auto& dst = acc.fiber(k);
            const auto& src = term.fiber(k);
            for (std::size_t idx = 0; idx < dst.size(); ++idx)
                dst[idx] += spec.coeffs[j] * src[idx];
        }
    }
    return field_norm(acc);
}

HeisenbergField make_fiber_field(const GridParams& g,
                                 const std::vector<FiberProfile>& profiles) {
    HeisenbergField F = zero_field(g);
    for (const auto& p : profiles) {
        if (!F.has_fiber(p.k)) throw std::invalid_argument("fiber index out of range");
        if (!(p.sy > 0.0) || !(p.sx > 0.0)) throw std::invalid_argument("degenerate width");
        auto& fib = F.fiber(p.k);
        for (int j = 0; j < g.Ny; ++j) {
            double uy = (F.y(j) - p.y0) / p.sy;
            double gy = std::exp(-M_PI * uy * uy);
            for (int i = 0; i < g.Nx; ++i) {
                double ux = (F.x(i) - p.x0) / p.sx;
                fib[static_cast<std::size_t>(j) * g.Nx + i] +=
                    p.amplitude * gy * std::exp(-M_PI * ux * ux);
            }
        }
    }
    return F;
}

} // namespace heislab
