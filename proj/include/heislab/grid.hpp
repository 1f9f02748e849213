#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace heislab {

using cd = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Unit-modulus phasor e^{i t}. The zero angle is returned as an exact
/// (1, 0) so that phase-free operations preserve data bit for bit.
inline cd cis(double t) {
    if (t == 0.0) return cd(1.0, 0.0);
    return cd(std::cos(t), std::sin(t));
}

/// Canonical representative of u mod 1 in [0, 1).
inline double mod1(double u) {
    double r = u - std::floor(u);
    if (r >= 1.0) r = 0.0;   // guards against rounding at tiny negative u
    return r;
}

// Discretization shared by every module.
//
// Signals live on the circle of circumference L sampled at N points,
// t_i = -L/2 + i*dx with dx = L/N. Fields carry M central Fourier fibers,
// each an Ny x Nx slice with spacings dy = 1/L and dx. With these choices
// every translation lands on a sample, every modulation frequency k*y is a
// multiple of 1/L, and the commutation phase e^{-2 pi i x y} is a root of
// unity of order N -- the finite model reproduces the group algebra to
// roundoff.
struct GridParams {
    int N = 256;     // signal samples
    double L = 16.0; // signal period
    int M = 8;       // theta samples / central fibers
    int Ny = 64;     // field modulation-axis samples
    int Nx = 64;     // field translation-axis samples

    double dx() const { return L / N; }
    double dy() const { return 1.0 / L; }
    double theta_step() const { return 1.0 / M; }
    double Py() const { return Ny * dy(); } // field y-extent (periodized)
    double Px() const { return Nx * dx(); } // field x-extent (periodized)

    void validate() const {
        if (N < 2) throw std::invalid_argument("GridParams: N must be >= 2");
        if (!(L > 0.0)) throw std::invalid_argument("GridParams: L must be positive");
        if (M < 2 || M % 2 != 0)
            throw std::invalid_argument("GridParams: M must be even and >= 2");
        if (Ny < 2 || Ny % 2 != 0)
            throw std::invalid_argument("GridParams: Ny must be even and >= 2");
        if (Nx < 2 || Nx % 2 != 0)
            throw std::invalid_argument("GridParams: Nx must be even and >= 2");
        if (Nx > N)
            throw std::invalid_argument("GridParams: field x-extent may not exceed the signal period");
    }
};

/// Nearest multiple of step; exact halves round away from zero.
inline double snap_to_grid(double v, double step) {
    return std::round(v / step) * step;
}

/// True when v sits within tol grid steps of a multiple of step.
inline bool on_grid(double v, double step, double tol = 1e-9) {
    double q = v / step;
    return std::abs(q - std::round(q)) <= tol;
}

/// Index of the grid multiple nearest to v (caller checks on_grid first).
inline long long grid_index(double v, double step) {
    return static_cast<long long>(std::llround(v / step));
}

/// Euclidean-style remainder: result in [0, n) for n > 0.
inline int wrap_index(long long i, int n) {
    long long r = i % n;
    if (r < 0) r += n;
    return static_cast<int>(r);
}

} // namespace heislab
