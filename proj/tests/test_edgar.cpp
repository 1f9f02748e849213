#include <doctest.h>

#include "heislab/edgar.hpp"
#include "heislab/rng.hpp"

using namespace heislab;

TEST_CASE("gauss-legendre rule") {
    for (int n : {16, 64, 128}) {
        QuadratureRule rule = gauss_legendre_rule(n);
        REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
        double wsum = 0.0;
        for (int i = 0; i < n; ++i) {
            CHECK(rule.weights[i] > 0.0);
            CHECK(rule.nodes[i] > 1.0 / 3.0);
            CHECK(rule.nodes[i] < 2.0 / 3.0);
            wsum += rule.weights[i];
        }
        CHECK(std::abs(wsum - 1.0 / 3.0) < 1e-14);
    }
    // degree-2n-1 exactness spot check: integral of t^5 over [1/3, 2/3]
    QuadratureRule r3 = gauss_legendre_rule(3);
    double q = 0.0;
    for (int i = 0; i < 3; ++i) q += r3.weights[i] * std::pow(r3.nodes[i], 5);
    double exact = (std::pow(2.0 / 3.0, 6) - std::pow(1.0 / 3.0, 6)) / 6.0;
    CHECK(q == doctest::Approx(exact).epsilon(1e-14));
}

TEST_CASE("edgar function values") {
    QuadratureRule rule = gauss_legendre_rule(64);

    CHECK(std::abs(edgar_eval(0.0, 0.0, rule) - cd(1.0 / 3.0, 0.0)) <= 1e-15);

    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        double y = rng.uniform(-20.0, 20.0), x = rng.uniform(-20.0, 20.0);
        cd v = edgar_eval(y, x, rule);
        CHECK(std::abs(v) <= 1.0 / 3.0 + 1e-15);
        CHECK(std::abs(std::conj(v) - edgar_eval(-y, -x, rule)) <= 1e-14);
    }

    // node doubling no longer moves the value: the rule has converged
    QuadratureRule dbl = gauss_legendre_rule(128);
    for (int trial = 0; trial < 20; ++trial) {
        double y = rng.uniform(-20.0, 20.0), x = rng.uniform(-20.0, 20.0);
        CHECK(std::abs(edgar_eval(y, x, rule) - edgar_eval(y, x, dbl)) <= 1e-13);
    }
}

TEST_CASE("five-point difference identity") {
    QuadratureRule rule = gauss_legendre_rule(64);

    CHECK(difference_residual(0.0, 0.0, rule) <= 1e-12);

    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial)
        CHECK(difference_residual(rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0), rule) <= 1e-12);

    // sanity: dropping one neighbor breaks the identity by a visible amount
    cd broken = 2.0 * edgar_eval(0.0, 0.0, rule) - edgar_eval(0.0, 1.0, rule) -
                edgar_eval(0.0, -1.0, rule) - edgar_eval(1.0, 0.0, rule);
    CHECK(std::abs(broken) > 1e-2);

    // x <-> y swap symmetry of the residual
    for (int trial = 0; trial < 20; ++trial) {
        double y = rng.uniform(-5.0, 5.0), x = rng.uniform(-5.0, 5.0);
        CHECK(std::abs(difference_residual(y, x, rule) - difference_residual(x, y, rule)) <= 1e-12);
    }
}

TEST_CASE("dependence witness") {
    ComboSpec w = dependence_witness();
    REQUIRE(w.points.size() == 5);
    REQUIRE(w.coeffs.size() == 5);
    cd total = 0.0;
    for (const cd& c : w.coeffs) total += c;
    CHECK(total == cd(-2.0, 0.0));
    CHECK(distinct_cosets(w.points));
    for (const auto& p : w.points) CHECK(p.theta == 0.0);
}

TEST_CASE("lp partial sums") {
    QuadratureRule rule = gauss_legendre_rule(64);

    // tiny R: the sum approaches |F(0,0)|^p (2R)^2
    LpPartialResult small = lp_partial(2.0, 0.25, 0.05, rule);
    double expect = std::pow(1.0 / 3.0, 2.0) * 0.25;
    CHECK(small.value == doctest::Approx(expect).epsilon(0.05));
    CHECK_FALSE(small.capped);

    // monotone in R on nested grids
    LpPartialResult a = lp_partial(5.0, 5.0, 0.25, rule);
    LpPartialResult b = lp_partial(5.0, 10.0, 0.25, rule);
    CHECK(b.value >= a.value);

    // the cap engages for absurd R
    LpPartialResult capped = lp_partial(2.0, 5000.0, 10.0, rule);
    CHECK(capped.capped);
    CHECK(capped.R_used == doctest::Approx(50.0));

    CHECK_THROWS_AS(lp_partial(0.5, 1.0, 0.25, rule), std::invalid_argument);
    CHECK_THROWS_AS(lp_partial(2.0, -1.0, 0.25, rule), std::invalid_argument);
}
