#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "heislab/heisenberg.hpp"
#include "heislab/signal.hpp"

namespace heislab {

// Finite Gabor system {pi_k(h) phi : h in points}. k must be nonzero and the
// points grid-quantized in (y, x); duplicate cosets are allowed on purpose
// (they are the standard dependent witnesses) but flag as degenerate via
// distinct_cosets.
struct GaborSystem {
    int k = 1;
    SampledSignal phi;
    std::vector<HeisenbergPoint> points;
};

enum class Verdict { independent, dependent, borderline };

std::string to_string(Verdict v);

struct IndependenceReport {
    double sigma_min = 0.0;
    double sigma_max = 0.0;
    Verdict verdict = Verdict::borderline;
    std::optional<Eigen::VectorXcd> null_coeffs; // unit vector, dependent only
    double epsilon = 0.0;
};

/// pi_k(theta, y, x) phi = e^{2 pi i k theta} M_{ky} T_x phi. x and y must be
/// on their grids (k*y then automatically lands on the modulation grid);
/// theta may be any real.
SampledSignal apply_pi(int k, const HeisenbergPoint& h, const SampledSignal& phi);

/// Gram matrix G[i][j] = <pi_k(h_i) phi, pi_k(h_j) phi>; Hermitian PSD.
Eigen::MatrixXcd gram(const GaborSystem& system);

/// Two-threshold rank certificate on a Hermitian PSD Gram matrix:
/// independent when sigma_min > eps * sigma_max, dependent when
/// sigma_min <= eps^2 * sigma_max (or below the numerical-rank floor
/// n*ulp*sigma_max), borderline otherwise. The floor keeps exactly singular
/// inputs from landing in "borderline" through eigensolver roundoff alone.
IndependenceReport independence_report(const Eigen::MatrixXcd& G, double epsilon = 1e-8);

/// || sum_j coeffs[j] pi_k(h_j) phi ||.
double combo_residual(const GaborSystem& system, const std::vector<cd>& coeffs);

} // namespace heislab
