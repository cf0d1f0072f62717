#include "kerrgate/scattering.hpp"

#include <cmath>

namespace kerrgate {

namespace {

Quadrature window_for(const DrivePulse& p, const CavityPair& cav, const KerrCoupling& k,
                      std::span<const BranchLabel> branches, const QuadratureOptions& opt) {
    std::vector<double> centers;
    centers.reserve(branches.size());
    for (const BranchLabel& b : branches)
        centers.push_back(cav.omega_o + eta_for(k, b.pol) * b.n_mu);
    Quadrature q = pulse_window(p, centers, cav.kappa_o());
    q.base_nodes = opt.base_nodes;
    q.tolerance = opt.tolerance;
    q.max_doublings = opt.max_doublings;
    return q;
}

}  // namespace

std::complex<double> reflection(double omega, const BranchLabel& b,
                                const CavityPair& cav, const KerrCoupling& k) {
    const double detuning = cav.omega_o - omega + eta_for(k, b.pol) * b.n_mu;
    const std::complex<double> i(0.0, 1.0);
    return (-i * detuning + cav.kappa_eo - cav.kappa_io) /
           (i * detuning + cav.kappa_eo + cav.kappa_io);
}

double backaction_phase(const BranchLabel& b, const DrivePulse& p,
                        const CavityPair& cav, const KerrCoupling& k,
                        BackactionWeight w, const QuadratureOptions& opt) {
    const double eta = eta_for(k, b.pol);
    if (eta == 0.0 || p.alpha == 0.0) return 0.0;
    const double kt = cav.kappa_o();
    const double num = w == BackactionWeight::kappa_linear
                           ? 4.0 * cav.kappa_eo
                           : 4.0 * cav.kappa_eo * cav.kappa_eo;
    const BranchLabel branch[] = {b};
    Quadrature q = window_for(p, cav, k, branch, opt);
    const double integral = integrate_real(q, [&](double omega) {
        const double f = spectrum(p, omega);
        const double detuning = cav.omega_o - omega + eta * b.n_mu;
        return f * f * num / (detuning * detuning + kt * kt);
    });
    return eta * std::norm(p.alpha) * integral;
}

ScatterSet scatter_set(std::span<const BranchLabel> branches, const DrivePulse& p,
                       const CavityPair& cav, const KerrCoupling& k,
                       BackactionWeight w, const QuadratureOptions& opt) {
    const int m = static_cast<int>(branches.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (branches[i].n_mu == branches[j].n_mu && branches[i].pol == branches[j].pol)
                throw std::invalid_argument("scatter_set: duplicate branch label");

    ScatterSet s;
    s.branches.assign(branches.begin(), branches.end());
    s.O.resize(m);
    s.W.resize(m);
    s.theta.resize(m);
    s.G = Eigen::MatrixXcd::Zero(m, m);

    Quadrature q = window_for(p, cav, k, branches, opt);
    for (int i = 0; i < m; ++i) {
        s.O[i] = integrate(q, [&](double omega) {
            const double f = spectrum(p, omega);
            return f * f * std::conj(reflection(omega, branches[i], cav, k));
        });
        s.theta[i] = backaction_phase(branches[i], p, cav, k, w, opt);
    }
    // upper triangle (including diagonal), mirrored for exact Hermiticity
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            if (branches[i].pol != branches[j].pol) continue;
            const std::complex<double> g = integrate(q, [&](double omega) {
                const double f = spectrum(p, omega);
                return f * f * std::conj(reflection(omega, branches[i], cav, k)) *
                       reflection(omega, branches[j], cav, k);
            });
            s.G(i, j) = g;
            s.G(j, i) = std::conj(g);
        }
    }
    for (int i = 0; i < m; ++i) {
        s.G(i, i) = std::complex<double>(s.G(i, i).real(), 0.0);
        s.W[i] = s.G(i, i).real();
    }
    return s;
}

}  // namespace kerrgate
