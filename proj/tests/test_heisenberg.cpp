#include <doctest.h>

#include "heislab/heisenberg.hpp"
#include "heislab/rng.hpp"

using namespace heislab;

namespace {

double theta_dist(double a, double b) {
    double d = mod1(a - b);
    return std::min(d, 1.0 - d);
}

HeisenbergPoint random_point(Rng& rng) {
    return {rng.uniform01(), rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0)};
}

} // namespace

TEST_CASE("group law") {
    HeisenbergPoint e = identity_point();
    HeisenbergPoint p{0.3, 1.5, -2.0};
    HeisenbergPoint r = group_mul(e, p);
    CHECK(r.theta == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(r.y == 1.5);
    CHECK(r.x == -2.0);

    // theta = 0 + 0 - (1/2)(1/2) = -1/4 = 3/4 mod 1
    HeisenbergPoint a{0.0, 0.0, 0.5};
    HeisenbergPoint b{0.0, 0.5, 0.0};
    HeisenbergPoint ab = group_mul(a, b);
    CHECK(ab.theta == 0.75);
    CHECK(ab.y == 0.5);
    CHECK(ab.x == 0.5);

    HeisenbergPoint c{0.0, 1.0, 1.0};
    HeisenbergPoint prod = group_mul(c, group_inv(c));
    CHECK(prod.theta == 0.0);
    CHECK(prod.y == 0.0);
    CHECK(prod.x == 0.0);
}

TEST_CASE("group inverse") {
    HeisenbergPoint z{0.3, 0.0, 0.0};
    HeisenbergPoint zi = group_inv(z);
    CHECK(zi.theta == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(zi.y == 0.0);
    CHECK(zi.x == 0.0);

    // -theta - x*y = -0 - 1 = -1 = 0 mod 1
    HeisenbergPoint c{0.0, 1.0, 1.0};
    HeisenbergPoint ci = group_inv(c);
    CHECK(ci.theta == 0.0);
    CHECK(ci.y == -1.0);
    CHECK(ci.x == -1.0);

    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        HeisenbergPoint p = random_point(rng);
        HeisenbergPoint q = group_inv(group_inv(p));
        CHECK(theta_dist(q.theta, p.theta) < 1e-12);
        CHECK(q.y == doctest::Approx(p.y).epsilon(1e-15));
        CHECK(q.x == doctest::Approx(p.x).epsilon(1e-15));
    }
}

TEST_CASE("associativity over random triples") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        HeisenbergPoint a = random_point(rng), b = random_point(rng), c = random_point(rng);
        HeisenbergPoint l = group_mul(group_mul(a, b), c);
        HeisenbergPoint r = group_mul(a, group_mul(b, c));
        CHECK(theta_dist(l.theta, r.theta) < 1e-12);
        CHECK(l.y == doctest::Approx(r.y).epsilon(1e-13));
        CHECK(l.x == doctest::Approx(r.x).epsilon(1e-13));
    }
}

TEST_CASE("central elements commute exactly") {
    Rng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        HeisenbergPoint z{rng.uniform01(), 0.0, 0.0};
        HeisenbergPoint p = random_point(rng);
        HeisenbergPoint zp = group_mul(z, p);
        HeisenbergPoint pz = group_mul(p, z);
        CHECK(zp.theta == pz.theta);
        CHECK(zp.y == pz.y);
        CHECK(zp.x == pz.x);
    }
    CHECK(is_central({0.5, 0.0, 0.0}));
    CHECK_FALSE(is_central({0.0, 0.0, 0.25}));
}

TEST_CASE("distinct cosets") {
    CHECK_FALSE(distinct_cosets({{0.0, 0.0, 0.0}, {0.5, 0.0, 0.0}}));
    CHECK(distinct_cosets({{0.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}));
    CHECK_FALSE(distinct_cosets({{0.0, 0.0, 0.0}, {0.25, 1.0, 0.0}, {0.0, 1.0, 0.0}}));
    CHECK_THROWS_AS(distinct_cosets({}), std::invalid_argument);

    // snapping decides: the two points collapse onto the same grid coset
    GridParams g;
    CHECK_FALSE(distinct_cosets({{0.0, 0.0, 0.0}, {0.0, 1e-4, 0.0}}, g));
    CHECK(distinct_cosets({{0.0, 0.0, 0.0}, {0.0, 1e-4, 0.0}}));
}

TEST_CASE("quantize") {
    GridParams g;
    const double dx = g.dx(), dy = g.dy();

    HeisenbergPoint on{0.25, 3 * dy, -5 * dx};
    QuantizeResult r = quantize(on, g);
    CHECK(r.displacement == 0.0);
    CHECK(r.point.theta == 0.25);
    CHECK(r.point.y == 3 * dy);
    CHECK(r.point.x == -5 * dx);

    r = quantize({0.0, 0.0, 0.4 * dx}, g);
    CHECK(r.point.x == 0.0);
    CHECK(r.displacement == doctest::Approx(0.4 * dx).epsilon(1e-12));

    // exact tie rounds away from zero, both signs
    r = quantize({0.0, 0.0, 0.5 * dx}, g);
    CHECK(r.point.x == dx);
    r = quantize({0.0, 0.0, -0.5 * dx}, g);
    CHECK(r.point.x == -dx);

    // products of quantized points stay on the theta-grid when x*y does:
    // x1*y2 = 8dx * 4dy = 0.5 * 0.25 = 1/8 = 1/M with dx = dy = 1/16, M = 8
    HeisenbergPoint a = quantize({0.0, 0.0, 8 * dx}, g).point;
    HeisenbergPoint b = quantize({0.0, 4 * dy, 0.0}, g).point;
    HeisenbergPoint ab = group_mul(a, b);
    CHECK(on_grid(ab.theta, g.theta_step(), 1e-12));
}
