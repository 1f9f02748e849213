#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "heislab/grid.hpp"

namespace heislab {

// Complex signal on the uniform periodic grid t_i = -L/2 + i*dx, i = 0..N-1,
// the desk-scale model of L^2(R). The symmetric origin keeps Gaussians and
// half-line supports centered in the fundamental domain. All inner products
// carry the quadrature weight dx.
struct SampledSignal {
    std::vector<cd> values;
    double L = 0.0;

    int N() const { return static_cast<int>(values.size()); }
    double dx() const { return L / N(); }
    double t(int i) const { return -L / 2 + i * dx(); }
};

/// T_x: circular shift by x/dx samples. x must be a multiple of dx.
SampledSignal translate(const SampledSignal& phi, double x);

/// M_y: pointwise multiplication by e^{2 pi i t y}. y must be a multiple of
/// 1/L so the multiplier is periodic on the circle.
SampledSignal modulate(const SampledSignal& phi, double y);

/// dx * sum psi[i] * conj(phi[i]); linear in the first argument.
cd inner(const SampledSignal& psi, const SampledSignal& phi);

double norm(const SampledSignal& phi);

/// || T_x M_y phi - e^{-2 pi i x y} M_y T_x phi || / ||phi||. The identity is
/// exact in this model, so anything above roundoff indicates a bug.
double ccr_residual(const SampledSignal& phi, double x, double y);

// Deterministic test-vector factories.

/// L^2-normalized Gaussian 2^{1/4} width^{-1/2} e^{-pi ((t-center)/width)^2}.
SampledSignal make_gaussian(const GridParams& g, double center, double width);

/// Indicator of [a, b); a == b yields the zero signal, a > b is an error.
SampledSignal make_indicator(const GridParams& g, double a, double b);

/// e^{-(t-a)} for t >= a, zero below: supported on a half-line, decaying.
SampledSignal make_half_line(const GridParams& g, double a);

/// Complex standard normals from a seeded generator (Box-Muller over
/// mt19937_64, so the stream does not depend on the standard library).
SampledSignal make_random(const GridParams& g, std::uint64_t seed);

/// Dispatch on "gaussian:center,width" | "indicator:a,b" | "half_line:a" |
/// "random:seed" (CLI surface).
SampledSignal make_signal(const GridParams& g, const std::string& spec);

} // namespace heislab
