#pragma once

#include <vector>

#include "heislab/heisenberg.hpp"

namespace heislab {

// Function on the reduced Heisenberg group stored as central Fourier fibers:
//
//   F(theta, y, x) = sum_k fibers[k](y, x) e^{2 pi i k theta},
//   k = -M/2 .. M/2-1,
//
// with each fiber an Ny x Nx slice on y_j = -Py/2 + j*dy, x_i = -Px/2 + i*dx.
// Both axes are periodized (periods Py, Nx*dx), so translations act by exact
// circular index shifts and pointwise unimodular phases; fields meant for
// transfer experiments must decay well inside the fundamental domain.
// The theta measure has total mass 1, so
// ||F||^2 = dy*dx * sum_k sum |fibers[k]|^2.
struct HeisenbergField {
    GridParams grid;
    std::vector<std::vector<cd>> fibers; // [k + M/2][j*Nx + i]

    int kmin() const { return -grid.M / 2; }
    int kmax() const { return grid.M / 2 - 1; }
    bool has_fiber(int k) const { return k >= kmin() && k <= kmax(); }

    std::vector<cd>& fiber(int k) { return fibers[k + grid.M / 2]; }
    const std::vector<cd>& fiber(int k) const { return fibers[k + grid.M / 2]; }

    double y(int j) const { return -grid.Py() / 2 + j * grid.dy(); }
    double x(int i) const { return -grid.Px() / 2 + i * grid.dx(); }
};

// Finite combination sum_j coeffs[j] L_{points[j]}: the relation under test.
struct ComboSpec {
    std::vector<HeisenbergPoint> points;
    std::vector<cd> coeffs;
};

HeisenbergField zero_field(const GridParams& g);

double field_norm(const HeisenbergField& F);

/// Slice F(theta_m, ., .) at theta_m = m/M, as an Ny*Nx array.
std::vector<cd> sample_theta(const HeisenbergField& F, int m);

/// Left regular representation L_h F(g) = F(h^{-1} g). Fiberwise:
/// out_k(y, x) = e^{-2 pi i k theta_h} e^{2 pi i k x_h (y - y_h)}
///               f_k(y - y_h, x - x_h),
/// with circular shifts; the phase uses the wrapped representative of
/// y - y_h (the grid value actually read). y_h, x_h must be on their grids.
HeisenbergField left_translate(const HeisenbergField& F, const HeisenbergPoint& h);

/// Right regular representation R_h F(g) = F(g h). Fiberwise:
/// out_k(y, x) = e^{2 pi i k (theta_h - x y_h)} f_k(y + y_h, x + x_h).
HeisenbergField right_translate(const HeisenbergField& F, const HeisenbergPoint& h);

struct CenterProjection {
    HeisenbergField PF; // k = 0 fiber only: the average over the center
    HeisenbergField KF; // F - PF: everything the nontrivial fibers carry
};

/// Split F = PF + KF with PF the center average. Exact: ||F||^2 = ||PF||^2 + ||KF||^2.
CenterProjection center_project(const HeisenbergField& F);

// Indicator region for the dependent-translate construction: a theta window
// times a rectangle in (y, x), all half-open.
struct RosenblattRegion {
    double theta0 = 0.0, theta1 = 0.5;
    double y0 = -1.0, y1 = 1.0;
    double x0 = -1.0, x1 = 1.0;
};

struct RosenblattExample {
    HeisenbergField F;
    ComboSpec witness; // points {identity, (1/n,0,0)}, coeffs {1, -1}
};

/// F = sum_{l=1..n} L_{z^l} 1_K for z = (1/n, 0, 0): averaging over the
/// order-n central subgroup kills every fiber with n ∤ k and scales the rest
/// by n, so L_z F = F exactly. Fibers with n ∤ k are set to exact zeros
/// (their analytic value), which makes the witness residual bit-exactly 0.
/// Requires n | M.
RosenblattExample rosenblatt_example(int n, const RosenblattRegion& region,
                                     const GridParams& g);

/// A = exp(sum_j c_j R_{h_j}) applied to F by the power series, truncated
/// once a term falls below tol * ||F||. Term norms are dominated by
/// (sum |c_j|)^m / m!, so truncation always happens.
HeisenbergField exp_right_apply(const ComboSpec& spec, const HeisenbergField& F,
                                double tol = 1e-12);

/// || sum_j coeffs[j] L_{h_j} F ||.
double translate_combo_residual(const HeisenbergField& F, const ComboSpec& spec);

// Test/CLI factory: one Gaussian bump per listed fiber.
struct FiberProfile {
    int k = 1;
    cd amplitude = 1.0;
    double y0 = 0.0, x0 = 0.0; // center
    double sy = 0.45, sx = 0.45; // Gaussian widths e^{-pi ((u-u0)/s)^2}
};

HeisenbergField make_fiber_field(const GridParams& g,
                                 const std::vector<FiberProfile>& profiles);

} // namespace heislab
