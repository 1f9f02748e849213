#include "heislab/transfer.hpp"

#include <cmath>

namespace heislab {

namespace {

void check_signal_grid(const SampledSignal& s, const GridParams& g) {
    if (s.N() != g.N || s.L != g.L) throw std::invalid_argument("grid mismatch");
}

// phases[j*N + i] = e^{-2 pi i k y_j t_i} for the field's y-grid against the
// signal's t-grid; shared by the matrix-coefficient and Moyal sums.
std::vector<cd> stft_phase_table(const GridParams& g, int k) {
    std::vector<cd> phases(static_cast<std::size_t>(g.Ny) * g.N);
    SampledSignal probe{std::vector<cd>(g.N), g.L};
    for (int j = 0; j < g.Ny; ++j) {
        double yv = -g.Py() / 2 + j * g.dy();
        for (int i = 0; i < g.N; ++i)
            phases[static_cast<std::size_t>(j) * g.N + i] = cis(-kTwoPi * k * yv * probe.t(i));
    }
    return phases;
}

} // namespace

HeisenbergField matrix_coefficient_field(const SampledSignal& psi,
                                         const SampledSignal& phi, int k,
                                         const GridParams& g) {
    if (k == 0) throw std::invalid_argument("k must be nonzero");
    check_signal_grid(psi, g);
    check_signal_grid(phi, g);
    HeisenbergField F = zero_field(g);
    if (!F.has_fiber(-k)) throw std::invalid_argument("k out of fiber range");

    const std::vector<cd> phases = stft_phase_table(g, k);
    auto& fib = F.fiber(-k);
    const double dx = g.dx();
    for (int q = 0; q < g.Nx; ++q) {
        // t-shift index of x_q = -Px/2 + q dx on the signal circle
        const int shift = q - g.Nx / 2;
        for (int j = 0; j < g.Ny; ++j) {
            const cd* ph = &phases[static_cast<std::size_t>(j) * g.N];
            cd acc = 0.0;
            for (int i = 0; i < g.N; ++i)
                acc += psi.values[i] * ph[i] * std::conj(phi.values[wrap_index(i - shift, g.N)]);
            fib[static_cast<std::size_t>(j) * g.Nx + q] = acc * dx;
        }
    }
    return F;
}

KernelOperator kernel_of(const HeisenbergField& F, int k) {
    if (k == 0) throw std::invalid_argument("k must be nonzero");
    if (!F.has_fiber(-k)) throw std::invalid_argument("k out of fiber range");
    const GridParams& g = F.grid;
    const auto& G = F.fiber(-k);

    KernelOperator K;
    K.matrix = Eigen::MatrixXcd::Zero(g.N, g.N);
    K.dx = g.dx();
    K.L = g.L;
    K.k = k;

    SampledSignal probe{std::vector<cd>(g.N), g.L};
    const double dy = g.dy();
    std::vector<cd> row_phase(g.Ny);
    std::vector<cd> p(g.Nx);
    for (int i = 0; i < g.N; ++i) {
        const double eta = -k * probe.t(i);
        if (std::abs(eta) > g.L / 2) continue; // outside the y-grid's Nyquist band
        for (int j = 0; j < g.Ny; ++j) row_phase[j] = cis(-kTwoPi * F.y(j) * eta);
        for (int q = 0; q < g.Nx; ++q) {
            cd acc = 0.0;
            for (int j = 0; j < g.Ny; ++j)
                acc += G[static_cast<std::size_t>(j) * g.Nx + q] * row_phase[j];
            p[q] = acc * dy;
        }
        // column with t_i - t_j = x_q on the signal circle: j = i - (q - Nx/2)
        for (int q = 0; q < g.Nx; ++q)
            K.matrix(i, wrap_index(i - (q - g.Nx / 2), g.N)) = p[q];
    }
    return K;
}

SampledSignal apply_kernel(const KernelOperator& K, const SampledSignal& phi) {
    if (phi.N() != K.matrix.rows() || phi.L != K.L)
        throw std::invalid_argument("grid mismatch");
    SampledSignal out{std::vector<cd>(phi.N()), phi.L};
    Eigen::Map<const Eigen::VectorXcd> v(phi.values.data(), phi.N());
    Eigen::VectorXcd w = K.matrix * v;
    for (int i = 0; i < phi.N(); ++i) out.values[i] = w(i) * K.dx;
    return out;
}

double hs_norm(const KernelOperator& K) { return K.dx * K.matrix.norm(); }

double hs_norm_via_fiber(const HeisenbergField& F, int k) {
    if (k == 0) throw std::invalid_argument("k must be nonzero");
    if (!F.has_fiber(-k)) throw std::invalid_argument("k out of fiber range");
    double acc = 0.0;
    for (const cd& v : F.fiber(-k)) acc += std::norm(v);
    return std::sqrt(acc * F.grid.dy() * F.grid.dx() / std::abs(k));
}

PlancherelReport plancherel_check(const HeisenbergField& F, int kmax) {
    const GridParams& g = F.grid;
    if (kmax < 1 || kmax > g.M / 2)
        throw std::invalid_argument("kmax out of range");
    const double total = field_norm(F);
    double central = 0.0;
    for (const cd& v : F.fiber(0)) central += std::norm(v);
    central = std::sqrt(central * g.dy() * g.dx());
    if (central > 1e-12 * total) throw std::invalid_argument("field not in ker P");

    PlancherelReport rep;
    rep.lhs = total * total;
    for (int k = -kmax; k <= kmax; ++k) {
        if (k == 0 || !F.has_fiber(-k)) continue;
        double hs = hs_norm(kernel_of(F, k));
        rep.rhs += std::abs(k) * hs * hs;
    }
    rep.rel_err = rep.lhs > 0.0 ? std::abs(rep.lhs - rep.rhs) / rep.lhs : 0.0;
    return rep;
}

double intertwine_residual(const HeisenbergField& F, const HeisenbergPoint& h, int k) {
    KernelOperator KF = kernel_of(F, k);
    const double denom = hs_norm(KF);
    if (denom == 0.0) throw std::invalid_argument("degenerate field for this k");

    KernelOperator KL = kernel_of(left_translate(F, h), k);

    // pi_k(h) acting on the kernel's left index: shift rows by x_h, multiply
    // row t_i by e^{2 pi i k theta_h} e^{2 pi i k y_h t_i}
    const GridParams& g = F.grid;
    if (!on_grid(h.x, g.dx()) || !on_grid(h.y, g.dy()))
        throw std::invalid_argument("off-grid translation");
    const int sh = static_cast<int>(grid_index(h.x, g.dx()));
    const cd central = cis(kTwoPi * mod1(k * h.theta));
    SampledSignal probe{std::vector<cd>(g.N), g.L};
    Eigen::MatrixXcd lhs(g.N, g.N);
    for (int i = 0; i < g.N; ++i)
        lhs.row(i) = central * cis(kTwoPi * k * h.y * probe.t(i)) *
                     KF.matrix.row(wrap_index(i - sh, g.N));

    return KF.dx * (KL.matrix - lhs).norm() / denom;
}

ForwardTransferReport transfer_forward(const GaborSystem& system,
                                       const std::vector<cd>& coeffs,
                                       const GridParams& g) {
    ForwardTransferReport rep;
    rep.k = system.k;
    rep.r_gabor = combo_residual(system, coeffs);
    HeisenbergField F = matrix_coefficient_field(system.phi, system.phi, system.k, g);
    rep.r_translate = translate_combo_residual(F, ComboSpec{system.points, coeffs});
    rep.bound = rep.r_gabor * norm(system.phi) / std::sqrt(std::abs(system.k)) *
                (1.0 + kTransferSlack);
    rep.satisfied = rep.r_translate <= rep.bound;
    return rep;
}

BackwardTransferReport transfer_backward(const HeisenbergField& F, const ComboSpec& spec) {
    const HeisenbergField KF = center_project(F).KF;
    const GridParams& g = KF.grid;

    // candidates visited in tie-preference order (smaller |k| first, then
    // positive), so strict improvement implements the tie-break
    int k_star = 0;
    double best = 0.0;
    for (int a = 1; a <= g.M / 2; ++a) {
        for (int k : {a, -a}) {
            if (!KF.has_fiber(-k)) continue;
            double hs = hs_norm_via_fiber(KF, k);
            if (hs > best) {
                best = hs;
                k_star = k;
            }
        }
    }
    if (k_star == 0)
        throw std::invalid_argument("F in kernel of every pi_k on this grid");

    KernelOperator K = kernel_of(KF, k_star);

    // top right-singular vector via the Hermitian eigenproblem of K^H K
    Eigen::MatrixXcd gramK = K.matrix.adjoint() * K.matrix;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gramK);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
    Eigen::VectorXcd v = es.eigenvectors().col(g.N - 1); // eigenvalues ascending

    SampledSignal phi{std::vector<cd>(g.N), g.L};
    const double scale = 1.0 / std::sqrt(g.dx()); // unit L2 norm
    for (int i = 0; i < g.N; ++i) phi.values[i] = v(i) * scale;

    SampledSignal psi = apply_kernel(K, phi);

    BackwardTransferReport rep;
    rep.k_star = k_star;
    rep.psi_norm = norm(psi);
    rep.r_translate = translate_combo_residual(KF, spec);
    rep.r_gabor = combo_residual(GaborSystem{k_star, psi, spec.points}, spec.coeffs);
    rep.bound = rep.r_translate / std::sqrt(std::abs(k_star)) * (1.0 + kTransferSlack);
    rep.satisfied = rep.r_gabor <= rep.bound;
    return rep;
}

double moyal_grid_sum(const SampledSignal& f, const SampledSignal& g, int k,
                      const GridParams& gp) {
    if (k == 0) throw std::invalid_argument("k must be nonzero");
    check_signal_grid(f, gp);
    check_signal_grid(g, gp);
    const std::vector<cd> phases = stft_phase_table(gp, k);
    const double dx = gp.dx();
    double acc = 0.0;
    for (int q = 0; q < gp.Nx; ++q) {
        const int shift = q - gp.Nx / 2;
        for (int j = 0; j < gp.Ny; ++j) {
            const cd* ph = &phases[static_cast<std::size_t>(j) * gp.N];
            cd s = 0.0;
            for (int i = 0; i < gp.N; ++i)
                s += g.values[i] * ph[i] * std::conj(f.values[wrap_index(i - shift, gp.N)]);
            acc += std::norm(s * dx);
        }
    }
    return acc * gp.dy() * gp.dx();
}

double moyal_finite_sum(const SampledSignal& f, const SampledSignal& g) {
    if (f.N() != g.N() || f.L != g.L) throw std::invalid_argument("grid mismatch");
    const int n = f.N();
    const double dx = f.dx();
    // e^{-2 pi i i b / N} root-of-unity table; the constant phase of t_i's
    // origin offset drops inside |.|^2
    std::vector<cd> table(n);
    for (int r = 0; r < n; ++r) table[r] = cis(-kTwoPi * r / n);

    std::vector<cd> w(n);
    double acc = 0.0;
    for (int a = 0; a < n; ++a) {
        for (int i = 0; i < n; ++i)
            w[i] = g.values[i] * std::conj(f.values[wrap_index(i - a, n)]);
        for (int b = 0; b < n; ++b) {
            cd s = 0.0;
            for (int i = 0; i < n; ++i) s += w[i] * table[static_cast<int>((static_cast<long long>(i) * b) % n)];
            acc += std::norm(s * dx);
        }
    }
    return acc;
}

} // namespace heislab
