#pragma once

#include <vector>

#include "heislab/field.hpp"

namespace heislab {

// Gauss-Legendre rule on [1/3, 2/3]. The interval stays clear of the arccos
// endpoint singularities at 0 and 1, so the integrands below are analytic
// and the rule converges spectrally.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights; // positive, summing to the interval length 1/3
};

QuadratureRule gauss_legendre_rule(int n = 64);

/// F(y, x) = integral over [1/3, 2/3] of e^{i (x arccos t + y arccos(1-t))} dt.
/// |F| <= 1/3 always; F(0, 0) = 1/3 exactly. The pairing x <-> arccos(t),
/// y <-> arccos(1-t) is a convention; the five-point identity below holds
/// for either choice by the t -> 1-t symmetry.
cd edgar_eval(double y, double x, const QuadratureRule& rule);

/// |2F(y,x) - F(y,x+1) - F(y,x-1) - F(y+1,x) - F(y-1,x)|. Identically zero:
/// the bracket under the integral is 2 - 2t - 2(1-t) = 0 pointwise.
double difference_residual(double y, double x, const QuadratureRule& rule);

/// The five-point relation read as a dependent combination of translates on
/// the quotient plane: points (0,0), (0,±1), (±1,0) with coefficients
/// (2, -1, -1, -1, -1).
ComboSpec dependence_witness();

struct LpPartialResult {
    double value = 0.0;
    double R_requested = 0.0;
    double R_used = 0.0; // capped when the quadrature could no longer resolve
    bool capped = false;
};

/// Midpoint Riemann sum of |F|^p over [-R, R]^2 with step h. R is capped at
/// 500/h, past which the fixed rule would need node escalation.
LpPartialResult lp_partial(double p, double R, double h, const QuadratureRule& rule);

} // namespace heislab
