#pragma once

#include <Eigen/Dense>

#include "heislab/field.hpp"
#include "heislab/repr.hpp"

namespace heislab {

// Relative slack applied to the continuum-limit transfer bounds; exact
// finite-model identities are tested at roundoff scale instead.
inline constexpr double kTransferSlack = 1e-3;

// Dense integral kernel K(t, u) on the signal grid, acting by
// (K phi)(t_i) = dx * sum_j K[i][j] phi(t_j). hs_norm is the dx-weighted
// Frobenius norm. Rows carry the kernel of pi_k applied to the field the
// operator came from; see kernel_of for the sampling rules.
struct KernelOperator {
    Eigen::MatrixXcd matrix;
    double dx = 0.0;
    double L = 0.0;
    int k = 0;
};

/// Matrix-coefficient field F(h) = <psi, pi_k(h) phi> sampled on the field
/// grid. The theta dependence of pi_k makes exactly one fiber nonzero; under
/// the storage convention F = sum_k fibers[k] e^{2 pi i k theta} it is the
/// fiber at index -k, holding the slice (y, x) -> <psi, M_{ky} T_x phi>.
HeisenbergField matrix_coefficient_field(const SampledSignal& psi,
                                         const SampledSignal& phi, int k,
                                         const GridParams& g);

/// Integral kernel of pi_k(F): K(t, u) = (F_2 G)(-k t, t - u) with
/// G = fibers[-k] and F_2 G(eta, x') = dy * sum_y G(y, x') e^{-2 pi i y eta},
/// a semidiscrete transform evaluated directly at the off-grid frequencies
/// eta = -k t_i. Two sampling rules keep the model faithful to a decaying
/// continuum field:
///   - rows are kept only while |k t_i| <= L/2, the Nyquist band of the
///     fiber's y-grid; beyond it the transform of a well-sampled decaying
///     fiber is below roundoff while the raw sum would alias, so rows are
///     zero there;
///   - t - u is reduced mod L on the signal circle and looked up in the
///     field's x-window [-Px/2, Px/2); entries outside the window are zero.
/// For k | N the in-band rows tile exactly one transform period and the
/// dx-weighted Frobenius norm reproduces hs_norm_via_fiber to roundoff.
KernelOperator kernel_of(const HeisenbergField& F, int k);

SampledSignal apply_kernel(const KernelOperator& K, const SampledSignal& phi);

double hs_norm(const KernelOperator& K);

/// sqrt(|k|^{-1} dy dx sum |fibers[-k]|^2): the fiberwise route to the same
/// Hilbert-Schmidt norm kernel_of computes by quadrature.
double hs_norm_via_fiber(const HeisenbergField& F, int k);

struct PlancherelReport {
    double lhs = 0.0;     // ||F||^2
    double rhs = 0.0;     // sum over 0 < |k| <= kmax of |k| hs_norm^2
    double rel_err = 0.0; // |lhs - rhs| / lhs (0 when both vanish)
};

/// Isometry check for F with no central average: ||F||^2 against
/// sum |k| ||pi_k(F)||_HS^2 over 0 < |k| <= kmax. Errors when the k = 0
/// fiber carries more than 1e-12 of the field's norm.
PlancherelReport plancherel_check(const HeisenbergField& F, int kmax);

/// || kernel_of(L_h F, k) - pi_k(h) kernel_of(F, k) ||_HS relative to
/// || kernel_of(F, k) ||_HS, where pi_k(h) acts on the kernel's left index
/// by the same shift and phases as apply_pi.
double intertwine_residual(const HeisenbergField& F, const HeisenbergPoint& h, int k);

struct ForwardTransferReport {
    int k = 0;
    double r_gabor = 0.0;    // || sum c_j pi_k(h_j) phi ||
    double r_translate = 0.0; // || sum c_j L_{h_j} F || for the induced field
    double bound = 0.0;      // |k|^{-1/2} r_gabor ||phi|| (1 + slack)
    bool satisfied = false;
};

/// A Gabor relation pushed to the group side through the matrix-coefficient
/// field of (phi, phi): the induced translate residual obeys
/// r_translate = |k|^{-1/2} r_gabor ||phi|| up to discretization.
ForwardTransferReport transfer_forward(const GaborSystem& system,
                                       const std::vector<cd>& coeffs,
                                       const GridParams& g);

struct BackwardTransferReport {
    int k_star = 0;
    double r_translate = 0.0;
    double r_gabor = 0.0;
    double bound = 0.0; // |k*|^{-1/2} r_translate (1 + slack)
    double psi_norm = 0.0;
    bool satisfied = false;
};

/// A translate relation pulled back to a Gabor relation: picks the fiber
/// k* with the largest Hilbert-Schmidt mass (ties: smaller |k|, then
/// positive), takes phi as the top right-singular vector of its kernel and
/// psi = pi_{k*}(F) phi, then checks
/// || sum c_j pi_{k*}(h_j) psi || <= |k*|^{-1/2} || sum c_j L_{h_j} F ||.
/// F is replaced by its ker-P part first.
BackwardTransferReport transfer_backward(const HeisenbergField& F, const ComboSpec& spec);

/// dy dx sum over the field grid of |<g, M_{ky} T_x f>|^2; for concentrated
/// f, g this approximates |k|^{-1} ||f||^2 ||g||^2.
double moyal_grid_sum(const SampledSignal& f, const SampledSignal& g, int k,
                      const GridParams& gp);

/// Unit-weight double sum over the full Z_N x Z_N shift/modulation grid of
/// |<g, M_{b/L} T_{a dx} f>|^2; equals N ||f||^2 ||g||^2 identically in the
/// finite model.
double moyal_finite_sum(const SampledSignal& f, const SampledSignal& g);

} // namespace heislab
