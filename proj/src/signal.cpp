#include "heislab/signal.hpp"

#include <cmath>
#include <sstream>

#include "heislab/rng.hpp"

namespace heislab {

namespace {

void check_same_grid(const SampledSignal& a, const SampledSignal& b) {
    if (a.N() != b.N() || a.L != b.L)
        throw std::invalid_argument("grid mismatch");
}

} // namespace

SampledSignal translate(const SampledSignal& phi, double x) {
    const double dx = phi.dx();
    if (!on_grid(x, dx)) throw std::invalid_argument("x not on grid");
    const long long s = grid_index(x, dx);
    const int n = phi.N();
    SampledSignal out{std::vector<cd>(n), phi.L};
    for (int i = 0; i < n; ++i) out.values[i] = phi.values[wrap_index(i - s, n)];
    return out;
}

SampledSignal modulate(const SampledSignal& phi, double y) {
    if (!on_grid(y, 1.0 / phi.L)) throw std::invalid_argument("y not on grid");
    const int n = phi.N();
    SampledSignal out{std::vector<cd>(n), phi.L};
    for (int i = 0; i < n; ++i) out.values[i] = cis(kTwoPi * phi.t(i) * y) * phi.values[i];
    return out;
}

cd inner(const SampledSignal& psi, const SampledSignal& phi) {
    check_same_grid(psi, phi);
    cd acc = 0.0;
    for (int i = 0; i < psi.N(); ++i) acc += psi.values[i] * std::conj(phi.values[i]);
    return acc * psi.dx();
}

double norm(const SampledSignal& phi) {
    double acc = 0.0;
    for (const cd& v : phi.values) acc += std::norm(v);
    return std::sqrt(acc * phi.dx());
}

double ccr_residual(const SampledSignal& phi, double x, double y) {
    const double nrm = norm(phi);
    if (nrm == 0.0) throw std::invalid_argument("zero signal");
    SampledSignal lhs = translate(modulate(phi, y), x);
    SampledSignal rhs = modulate(translate(phi, x), y);
    const cd phase = cis(-kTwoPi * x * y);
    double acc = 0.0;
    for (int i = 0; i < phi.N(); ++i) acc += std::norm(lhs.values[i] - phase * rhs.values[i]);
    return std::sqrt(acc * phi.dx()) / nrm;
}

SampledSignal make_gaussian(const GridParams& g, double center, double width) {
    if (!(width > 0.0)) throw std::invalid_argument("degenerate width");
    SampledSignal s{std::vector<cd>(g.N), g.L};
    const double amp = std::pow(2.0, 0.25) / std::sqrt(width);
    for (int i = 0; i < g.N; ++i) {
        double u = (s.t(i) - center) / width;
        s.values[i] = amp * std::exp(-M_PI * u * u);
    }
    return s;
}

SampledSignal make_indicator(const GridParams& g, double a, double b) {
    if (a > b) throw std::invalid_argument("degenerate interval");
    SampledSignal s{std::vector<cd>(g.N), g.L};
    for (int i = 0; i < g.N; ++i) s.values[i] = (s.t(i) >= a && s.t(i) < b) ? 1.0 : 0.0;
    return s;
}

SampledSignal make_half_line(const GridParams& g, double a) {
    SampledSignal s{std::vector<cd>(g.N), g.L};
    for (int i = 0; i < g.N; ++i) {
        double t = s.t(i);
        s.values[i] = (t >= a) ? std::exp(-(t - a)) : 0.0;
    }
    return s;
}

SampledSignal make_random(const GridParams& g, std::uint64_t seed) {
    Rng gen(seed);
    SampledSignal s{std::vector<cd>(g.N), g.L};
    for (int i = 0; i < g.N; ++i) {
        double re = gen.normal();
        double im = gen.normal();
        s.values[i] = cd(re, im);
    }
    return s;
}

SampledSignal make_signal(const GridParams& g, const std::string& spec) {
    auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    std::vector<double> args;
    if (colon != std::string::npos) {
        std::stringstream ss(spec.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                args.push_back(std::stod(tok));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad signal parameter: " + tok);
            }
        }
    }
    auto want = [&](std::size_t n) {
        if (args.size() != n)
            throw std::invalid_argument("signal kind '" + kind + "' expects " +
                                        std::to_string(n) + " parameters");
    };
    if (kind == "gaussian") {
        want(2);
        return make_gaussian(g, args[0], args[1]);
    }
    if (kind == "indicator") {
        want(2);
        return make_indicator(g, args[0], args[1]);
    }
    if (kind == "half_line") {
        want(1);
        return make_half_line(g, args[0]);
    }
    if (kind == "random") {
        want(1);
        return make_random(g, static_cast<std::uint64_t>(args[0]));
    }
    throw std::invalid_argument("unknown signal kind: " + kind);
}

} // namespace heislab
