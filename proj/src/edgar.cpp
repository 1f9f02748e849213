#include "heislab/edgar.hpp"

#include <cmath>

namespace heislab {

QuadratureRule gauss_legendre_rule(int n) {
    if (n < 1) throw std::invalid_argument("rule needs at least one node");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    // nodes on [-1, 1] by Newton iteration on P_n, then mapped to [1/3, 2/3]
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double a = 1.0 / 3.0, b = 2.0 / 3.0;
        rule.nodes[i] = 0.5 * (b - a) * x + 0.5 * (b + a);
        rule.weights[i] = (b - a) / ((1.0 - x * x) * pp * pp);
    }
    return rule;
}

cd edgar_eval(double y, double x, const QuadratureRule& rule) {
    cd acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double t = rule.nodes[i];
        acc += rule.weights[i] * cis(x * std::acos(t) + y * std::acos(1.0 - t));
    }
    return acc;
}

double difference_residual(double y, double x, const QuadratureRule& rule) {
    cd r = 2.0 * edgar_eval(y, x, rule) - edgar_eval(y, x + 1.0, rule) -
           edgar_eval(y, x - 1.0, rule) - edgar_eval(y + 1.0, x, rule) -
           edgar_eval(y - 1.0, x, rule);
    return std::abs(r);
}

ComboSpec dependence_witness() {
    ComboSpec spec;
    spec.points = {HeisenbergPoint{0.0, 0.0, 0.0}, HeisenbergPoint{0.0, 0.0, 1.0},
                   HeisenbergPoint{0.0, 0.0, -1.0}, HeisenbergPoint{0.0, 1.0, 0.0},
                   HeisenbergPoint{0.0, -1.0, 0.0}};
    spec.coeffs = {cd(2.0, 0.0), cd(-1.0, 0.0), cd(-1.0, 0.0), cd(-1.0, 0.0),
                   cd(-1.0, 0.0)};
    return spec;
}

LpPartialResult lp_partial(double p, double R, double h, const QuadratureRule& rule) {
    if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
    if (!(R > 0.0) || !(h > 0.0)) throw std::invalid_argument("R and h must be positive");

    LpPartialResult res;
    res.R_requested = R;
    res.R_used = std::min(R, 500.0 / h);
    res.capped = res.R_used < R;

    const long long cells = static_cast<long long>(std::ceil(2.0 * res.R_used / h));
    double acc = 0.0;
    for (long long jy = 0; jy < cells; ++jy) {
        double yv = -res.R_used + (jy + 0.5) * h;
        for (long long jx = 0; jx < cells; ++jx) {
            double xv = -res.R_used + (jx + 0.5) * h;
            acc += std::pow(std::abs(edgar_eval(yv, xv, rule)), p);
        }
    }
    res.value = acc * h * h;
    return res;
}

} // namespace heislab
