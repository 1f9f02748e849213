#pragma once

#include "heislab/field.hpp"
#include "heislab/repr.hpp"
#include "heislab/rng.hpp"

namespace heislab {

// Randomized desk-scale instances. Shift magnitudes and profile widths are
// kept well inside the periodized field windows so that wrap-around tails
// stay below the tolerances the experiments assert; the continuum-limit
// identities are only meaningful in that regime.

/// Grid points with |y|, |x| <= max_abs (multiples of dy, dx), pairwise
/// distinct cosets, theta uniform on the theta-grid.
std::vector<HeisenbergPoint> random_distinct_coset_points(const GridParams& g, int n,
                                                          double max_abs, Rng& rng);

/// Complex standard normal coefficient vector.
std::vector<cd> random_coeffs(int n, Rng& rng);

/// Field with Gaussian-profile fibers at 1 <= |k| <= fiber_absmax: centers
/// within +-center_max, widths in [width_lo, width_hi], complex normal
/// amplitudes. The k = 0 fiber stays empty, so the field lies in ker P.
/// Experiments that iterate translations (the commutant exponential) pass
/// tighter profiles so compounded shifts keep clear of the window edge.
HeisenbergField random_kerp_field(const GridParams& g, int fiber_absmax, Rng& rng,
                                  double width_lo = 0.35, double width_hi = 0.5,
                                  double center_max = 0.25);

/// Random relation for commutant experiments: n points with shifts of at
/// most max_steps grid cells, coefficients rescaled to sum |c_j| = budget.
ComboSpec random_combo(const GridParams& g, int n, int max_steps, double budget,
                       Rng& rng);

} // namespace heislab
