#include "kerrgate/gate.hpp"

#include <cmath>
#include <stdexcept>

#include "kerrgate/hilbert.hpp"

namespace kerrgate {

namespace {

const std::array<BranchLabel, 4> kBranches = {{{0, Polarization::L},
                                               {0, Polarization::R},
                                               {1, Polarization::L},
                                               {1, Polarization::R}}};

CavityPair cavity_of(const GateConfig& cfg) {
    CavityPair cav;
    cav.omega_o = 0.0;
    cav.kappa_eo = cfg.kappa_ratio;
    cav.kappa_io = cfg.kappa_io_ratio;
    return cav;
}

DrivePulse pulse_of(const GateConfig& cfg) {
    DrivePulse p;
    p.omega_in = cfg.eta();  // Delta_in = omega_o - omega_in = -eta
    p.sigma_omega = cfg.sigma_omega;
    p.alpha = {1.0, 0.0};    // single integrated photon
    return p;
}

// 16-dim Choi vector (1/2) sum_j a_j |j>|j>.
Eigen::VectorXcd choi_vector(const std::array<std::complex<double>, 4>& a, int dim = 16) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    for (int j = 0; j < 4; ++j) v[j * 4 + j] = 0.5 * a[j];
    return v;
}

std::array<std::complex<double>, 4> to_complex(const std::array<int, 4>& u) {
    std::array<std::complex<double>, 4> r;
    for (int j = 0; j < 4; ++j) r[j] = static_cast<double>(u[j]);
    return r;
}

struct Tomography {
    // 16 product inputs: 4 g-cavity states x 4 polarization states.
    std::array<std::array<std::complex<double>, 4>, 16> amplitudes;
    Tomography() {
        const std::complex<double> i(0.0, 1.0);
        const double s = 1.0 / std::sqrt(2.0);
        const std::array<std::array<std::complex<double>, 2>, 4> one_qubit = {{
            {{1.0, 0.0}}, {{0.0, 1.0}}, {{s, s}}, {{s, s * i}}}};
        int idx = 0;
        for (const auto& g : one_qubit)
            for (const auto& q : one_qubit) {
                // branch order ((0,L),(0,R),(1,L),(1,R))
                amplitudes[idx++] = {g[0] * q[0], g[0] * q[1], g[1] * q[0], g[1] * q[1]};
            }
    }
};

GateMetrics metrics_pure_choi(const std::array<std::complex<double>, 4>& v,
                              const ScatterSet& s) {
    const auto u = to_complex(target_unitary());
    DensityMatrix rho_u = DensityMatrix::pure(choi_vector(u));
    DensityMatrix rho_e = DensityMatrix::pure(choi_vector(v));
    GateMetrics m;
    m.F_G = uhlmann_fidelity(rho_u, rho_e);
    m.D_G = trace_distance(rho_u, rho_e);
    return m;
}

GateMetrics metrics_leakage_resolved(const std::array<std::complex<double>, 4>& v,
                                     const ScatterSet& s) {
    // 16 Choi dimensions plus one orthogonal leaked dimension per branch.
    const int dim = 20;
    const auto u = to_complex(target_unitary());
    const Eigen::VectorXcd phi_u = choi_vector(u, dim);
    const Eigen::VectorXcd phi_v = choi_vector(v, dim);
    Eigen::MatrixXcd raw = phi_v * phi_v.adjoint();
    for (int j = 0; j < 4; ++j)
        raw(16 + j, 16 + j) = 0.25 * std::max(s.W[j] - std::norm(v[j]), 0.0);
    GateMetrics m;
    DensityMatrix rho_e = DensityMatrix(raw).normalized();
    DensityMatrix rho_u = DensityMatrix::pure(phi_u);
    m.F_G = uhlmann_fidelity(rho_u, rho_e);
    m.D_G = trace_distance(rho_u, rho_e);
    return m;
}

GateMetrics metrics_avg_output(const std::array<std::complex<double>, 4>& v,
                               const ScatterSet& s) {
    static const Tomography tomo;
    const auto u = target_unitary();
    double f_sum = 0.0, d_sum = 0.0;
    for (const auto& c : tomo.amplitudes) {
        std::complex<double> overlap = 0.0;
        double norm_out = 0.0;
        for (int j = 0; j < 4; ++j) {
            overlap += static_cast<double>(u[j]) * std::norm(c[j]) * v[j];
            norm_out += std::norm(c[j]) * s.W[j];
        }
        const double f = std::min(std::norm(overlap) / norm_out, 1.0);
        f_sum += f;
        d_sum += std::sqrt(std::max(1.0 - f, 0.0));  // both states pure
    }
    GateMetrics m;
    m.F_G = f_sum / 16.0;
    m.D_G = d_sum / 16.0;
    return m;
}

}  // namespace

void GateConfig::validate() const {
    if (!(kappa_ratio > 0.0) || kappa_ratio > 1.0)
        throw std::invalid_argument("kappa_ratio must lie in (0, 1]");
    if (!(kappa_io_ratio >= 0.0))
        throw std::invalid_argument("kappa_io_ratio must be >= 0");
    if (!(sigma_omega > 0.0)) throw std::invalid_argument("sigma_omega must be > 0");
    if (!std::isfinite(eta_norm)) throw std::invalid_argument("eta_norm must be finite");
}

std::array<int, 4> target_unitary() { return {-1, -1, -1, 1}; }

std::array<std::complex<double>, 4> scatter_map(const GateConfig& cfg, const ScatterSet& s) {
    if (s.branches.size() != 4) throw std::invalid_argument("scatter_map: need 4 branches");
    std::array<std::complex<double>, 4> v;
    for (int j = 0; j < 4; ++j) v[j] = s.O[j];
    v[3] *= std::exp(std::complex<double>(0.0, s.theta[3]));
    if (cfg.correct_backaction) {
        // exact phase correction after scattering: rotate every branch
        // onto the target sign pattern, keeping the moduli
        const auto u = target_unitary();
        for (int j = 0; j < 4; ++j)
            v[j] = static_cast<double>(u[j]) * std::abs(v[j]);
    }
    return v;
}

ScatterSet gate_scatter_set(const GateConfig& cfg) {
    cfg.validate();
    const KerrCoupling k{cfg.eta(), 0.0};
    return scatter_set(kBranches, pulse_of(cfg), cavity_of(cfg), k,
                       BackactionWeight::kappa_linear, cfg.quad);
}

GateMetrics process_metrics_from(const GateConfig& cfg, const ScatterSet& s) {
    const auto v = scatter_map(cfg, s);
    GateMetrics m;
    switch (cfg.estimator) {
        case GateEstimator::pure_choi: m = metrics_pure_choi(v, s); break;
        case GateEstimator::leakage_resolved: m = metrics_leakage_resolved(v, s); break;
        case GateEstimator::avg_output: m = metrics_avg_output(v, s); break;
    }
    m.success_trace = 0.25 * (s.W[0] + s.W[1] + s.W[2] + s.W[3]);
    m.theta_mu = s.theta[3];
    return m;
}

GateMetrics process_metrics(const GateConfig& cfg) {
    return process_metrics_from(cfg, gate_scatter_set(cfg));
}

std::vector<GateSweepRow> sweep_gate(const GateConfig& templ, std::span<const double> kappa_grid,
                                     bool parallel) {
    templ.validate();
    const int n = static_cast<int>(kappa_grid.size());
    std::vector<GateSweepRow> rows(n);
    // rows are written by index, so the parallel schedule cannot reorder output
#ifdef KERRGATE_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int i = 0; i < n; ++i) {
        GateConfig cfg = templ;
        cfg.kappa_ratio = kappa_grid[i];
        cfg.correct_backaction = false;
        const ScatterSet s = gate_scatter_set(cfg);
        const GateMetrics m = process_metrics_from(cfg, s);
        GateConfig corr = cfg;
        corr.correct_backaction = true;
        const GateMetrics mc = process_metrics_from(corr, s);
        rows[i] = {cfg.kappa_ratio, cfg.eta_norm,       m.F_G,
                   m.D_G,           mc.F_G,             m.success_trace,
                   m.theta_mu / (2.0 * M_PI)};
    }
    return rows;
}

}  // namespace kerrgate
