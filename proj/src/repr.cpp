#include "heislab/repr.hpp"

#include <cmath>

namespace heislab {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::independent: return "independent";
        case Verdict::dependent: return "dependent";
        case Verdict::borderline: return "borderline";
    }
    return "borderline";
}

SampledSignal apply_pi(int k, const HeisenbergPoint& h, const SampledSignal& phi) {
    if (k == 0) throw std::invalid_argument("k must be nonzero");
    SampledSignal out = modulate(translate(phi, h.x), k * h.y);
    const cd phase = cis(kTwoPi * mod1(k * h.theta));
    if (phase != cd(1.0, 0.0))
        for (cd& v : out.values) v *= phase;
    return out;
}

Eigen::MatrixXcd gram(const GaborSystem& system) {
    const int n = static_cast<int>(system.points.size());
    if (n == 0) throw std::invalid_argument("empty system");
    std::vector<SampledSignal> vecs;
    vecs.reserve(n);
    for (const auto& h : system.points) vecs.push_back(apply_pi(system.k, h, system.phi));
    Eigen::MatrixXcd G(n, n);
    for (int i = 0; i < n; ++i) {
        G(i, i) = inner(vecs[i], vecs[i]).real();
        for (int j = i + 1; j < n; ++j) {
            cd v = inner(vecs[i], vecs[j]);
            G(i, j) = v;
            G(j, i) = std::conj(v);
        }
    }
    return G;
}

IndependenceReport independence_report(const Eigen::MatrixXcd& G, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (G.rows() != G.cols() || G.rows() == 0)
        throw std::invalid_argument("invalid Gram matrix");
    const double scale = G.cwiseAbs().maxCoeff();
    if (scale > 0.0 && (G - G.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw std::invalid_argument("invalid Gram matrix");

    Eigen::MatrixXcd H = 0.5 * (G + G.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");

    const int n = static_cast<int>(G.rows());
    Eigen::ArrayXd sv = es.eigenvalues().array().abs(); // PSD up to roundoff
    int imin = 0, imax = 0;
    for (int i = 1; i < n; ++i) {
        if (sv(i) < sv(imin)) imin = i;
        if (sv(i) > sv(imax)) imax = i;
    }

    IndependenceReport rep;
    rep.sigma_min = sv(imin);
    rep.sigma_max = sv(imax);
    rep.epsilon = epsilon;
    const double rank_floor = n * std::numeric_limits<double>::epsilon();
    if (rep.sigma_min > epsilon * rep.sigma_max) {
        rep.verdict = Verdict::independent;
    } else if (rep.sigma_min <= std::max(epsilon * epsilon, rank_floor) * rep.sigma_max) {
        rep.verdict = Verdict::dependent;
        // ||sum_j c_j v_j||^2 = conj(c)^H G conj(c), so the usable
        // coefficient vector is the conjugate of the null eigenvector
        Eigen::VectorXcd v = es.eigenvectors().col(imin).conjugate();
        rep.null_coeffs = v / v.norm();
    } else {
        rep.verdict = Verdict::borderline;
    }
    return rep;
}

double combo_residual(const GaborSystem& system, const std::vector<cd>& coeffs) {
    if (coeffs.size() != system.points.size())
        throw std::invalid_argument("coefficient count does not match point count");
    SampledSignal acc{std::vector<cd>(system.phi.N(), cd(0.0, 0.0)), system.phi.L};
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        SampledSignal term = apply_pi(system.k, system.points[j], system.phi);
        for (int i = 0; i < acc.N(); ++i) acc.values[i] += coeffs[j] * term.values[i];
    }
    return norm(acc);
}

} // namespace heislab
