#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "heislab/grid.hpp"

namespace heislab {

// Seeded generator with hand-rolled output maps. mt19937_64 has a fixed
// standard sequence and none of the distribution objects here are
// implementation-defined, so streams are reproducible across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : rng_(seed) {}

    double uniform01() { return (rng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Integer in [lo, hi], endpoints included.
    long long uniform_int(long long lo, long long hi) {
        return lo + static_cast<long long>(uniform01() * static_cast<double>(hi - lo + 1));
    }

    double normal() {
        if (have_) {
            have_ = false;
            return spare_;
        }
        double u1;
        do {
            u1 = uniform01();
        } while (u1 <= 0.0);
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(kTwoPi * u2);
        have_ = true;
        return r * std::cos(kTwoPi * u2);
    }

private:
    std::mt19937_64 rng_;
    bool have_ = false;
    double spare_ = 0.0;
};

} // namespace heislab
