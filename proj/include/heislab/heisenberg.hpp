#pragma once

#include <optional>
#include <vector>

#include "heislab/grid.hpp"

namespace heislab {

// Element (theta, y, x) of the reduced Heisenberg group T x R x R with
// z = e^{2 pi i theta}. theta is always kept reduced into [0, 1); keeping
// the central coordinate additive avoids unit-modulus drift entirely.
struct HeisenbergPoint {
    double theta = 0.0; // central coordinate, z = exp(2 pi i theta)
    double y = 0.0;     // modulation coordinate
    double x = 0.0;     // translation coordinate
};

inline HeisenbergPoint identity_point() { return {0.0, 0.0, 0.0}; }

/// Group law: (z1, y1, x1)(z2, y2, x2) = (z1 z2 e^{-2 pi i x1 y2}, y1+y2, x1+x2).
inline HeisenbergPoint group_mul(const HeisenbergPoint& a, const HeisenbergPoint& b) {
    return {mod1(a.theta + b.theta - a.x * b.y), a.y + b.y, a.x + b.x};
}

/// Inverse: (-theta - x*y mod 1, -y, -x).
inline HeisenbergPoint group_inv(const HeisenbergPoint& a) {
    return {mod1(-a.theta - a.x * a.y), -a.y, -a.x};
}

inline bool is_central(const HeisenbergPoint& a) { return a.y == 0.0 && a.x == 0.0; }

/// True iff all (y, x) pairs are pairwise distinct, i.e. the points occupy
/// distinct cosets of the center. When grid params are supplied, equality is
/// decided after snapping y and x to their grids.
bool distinct_cosets(const std::vector<HeisenbergPoint>& points,
                     const std::optional<GridParams>& g = std::nullopt);

struct QuantizeResult {
    HeisenbergPoint point;
    double displacement = 0.0; // max absolute snap distance over theta, y, x
};

/// Snap x to (L/N)Z, y to (1/L)Z and theta to (1/M)Z; ties round away from
/// zero. Reports the largest coordinate displacement the snap introduced.
QuantizeResult quantize(const HeisenbergPoint& a, const GridParams& g);

} // namespace heislab
