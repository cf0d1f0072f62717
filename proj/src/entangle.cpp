#include "kerrgate/entangle.hpp"

#include <cmath>
#include <stdexcept>

#include "kerrgate/hilbert.hpp"

namespace kerrgate {

namespace {

const std::array<BranchLabel, 2> kBranches = {{{0, Polarization::R}, {1, Polarization::R}}};

struct EntScalars {
    std::complex<double> O0, O1;  // pulse-weighted conj-reflection overlaps
    double W0, W1;                // reflected weights
    std::complex<double> G10;     // integral |f|^2 r_0 conj(r_1)
    double theta;                 // backaction phase on the |1> branch
    CavityPair cav;
    DrivePulse pulse;
    KerrCoupling kerr;
};

EntScalars scalars_of(const EntConfig& cfg) {
    EntScalars e;
    e.cav.omega_o = 0.0;
    e.cav.kappa_eo = cfg.kappa_ratio;
    e.cav.kappa_io = cfg.kappa_io();
    e.kerr = {cfg.eta(), 0.0};
    e.pulse.omega_in = cfg.eta();  // Delta_in = -eta
    e.pulse.sigma_omega = cfg.sigma_omega;
    e.pulse.alpha = cfg.alpha;
    const ScatterSet s = scatter_set(kBranches, e.pulse, e.cav, e.kerr,
                                     BackactionWeight::kappa_squared, cfg.quad);
    e.O0 = s.O[0];
    e.O1 = s.O[1];
    e.W0 = s.W[0];
    e.W1 = s.W[1];
    e.G10 = std::conj(s.G(0, 1));
    e.theta = s.theta[1];
    return e;
}

std::complex<double> phase(double t) { return std::exp(std::complex<double>(0.0, t)); }

// Overlaps between the scattered multimode coherent branches and the
// +-alpha wavepacket targets, in closed form from the spectral integrals.
struct BranchOverlaps {
    std::complex<double> M0;  // <-alpha_f | Psi_0>
    std::complex<double> M1;  // < alpha_f | Psi_1>
    std::complex<double> T1;  // <-alpha_f | Psi_1>
    std::complex<double> T2;  // < alpha_f | Psi_0>
    std::complex<double> B;   // <Psi_0 | Psi_1>
};

BranchOverlaps overlaps_of(const EntScalars& e, double a2) {
    BranchOverlaps o;
    const double n0 = a2 * e.W0, n1 = a2 * e.W1, na = a2;
    o.M0 = std::exp(std::complex<double>(-0.5 * na - 0.5 * n0, 0.0) - a2 * e.O0);
    o.M1 = std::exp(std::complex<double>(-0.5 * na - 0.5 * n1, 0.0) + a2 * e.O1);
    o.T1 = std::exp(std::complex<double>(-0.5 * na - 0.5 * n1, 0.0) - a2 * e.O1);
    o.T2 = std::exp(std::complex<double>(-0.5 * na - 0.5 * n0, 0.0) + a2 * e.O0);
    o.B = std::exp(std::complex<double>(-0.5 * n0 - 0.5 * n1, 0.0) + a2 * e.G10);
    return o;
}

double fidelity_pointwise(const EntConfig& cfg, const EntScalars& e) {
    std::vector<double> centers = {e.cav.omega_o, e.cav.omega_o + e.kerr.eta_plus};
    Quadrature q = pulse_window(e.pulse, centers, e.cav.kappa_o());
    q.base_nodes = cfg.quad.base_nodes;
    q.tolerance = cfg.quad.tolerance;
    q.max_doublings = cfg.quad.max_doublings;
    const std::complex<double> eitheta = phase(e.theta);
    const std::complex<double> I = integrate(q, [&](double omega) {
        const double f = spectrum(e.pulse, omega);
        const std::complex<double> r0 = std::conj(reflection(omega, kBranches[0], e.cav, e.kerr));
        const std::complex<double> r1 = std::conj(reflection(omega, kBranches[1], e.cav, e.kerr));
        const CoherentAmplitude minus{-cfg.alpha, "omega"};
        const CoherentAmplitude plus{cfg.alpha, "omega"};
        const std::complex<double> ov0 = coherent_overlap(minus, {r0 * cfg.alpha, "omega"});
        const std::complex<double> ov1 = coherent_overlap(plus, {r1 * cfg.alpha, "omega"});
        return f * f * (ov0 + eitheta * ov1);
    });
    return std::min(0.25 * std::norm(I), 1.0);
}

double fidelity_multimode(const EntConfig& cfg, const EntScalars& e) {
    const BranchOverlaps o = overlaps_of(e, std::norm(cfg.alpha));
    return std::min(0.25 * std::norm(o.M0 + phase(e.theta) * o.M1), 1.0);
}

KittenResult kitten_of(const EntConfig& cfg, const EntScalars& e) {
    const double a2 = std::norm(cfg.alpha);
    const BranchOverlaps o = overlaps_of(e, a2);
    KittenResult k;
    const double reB = o.B.real();
    k.p_plus = 0.5 * (1.0 + reB);
    k.p_minus = 0.5 * (1.0 - reB);
    const double cat = std::exp(-2.0 * a2);  // <-alpha_f|alpha_f>
    for (int sgn : {+1, -1}) {
        const double s = static_cast<double>(sgn);
        const std::complex<double> num = o.M0 + s * o.T1 + s * o.T2 + o.M1;
        const double den = 2.0 * (1.0 + s * cat) * 2.0 * (1.0 + s * reB);
        double f = den > 0.0 ? std::min(std::norm(num) / den, 1.0) : 1.0;
        (sgn > 0 ? k.F_kitten_plus : k.F_kitten_minus) = f;
    }
    return k;
}

}  // namespace

double EntConfig::eta() const {
    const double a2 = std::norm(alpha);
    if (a2 == 0.0) return 0.0;
    return eta_norm_alpha * 2.0 * M_PI / (4.0 * a2);
}

void EntConfig::validate() const {
    if (!(kappa_ratio > 0.0) || kappa_ratio > 1.0)
        throw std::invalid_argument("kappa_ratio must lie in (0, 1]");
    if (!(kappa_io() >= 0.0)) throw std::invalid_argument("kappa_io_ratio must be >= 0");
    if (!(sigma_omega > 0.0)) throw std::invalid_argument("sigma_omega must be > 0");
    if (!std::isfinite(eta_norm_alpha) || eta_norm_alpha < 0.0)
        throw std::invalid_argument("eta_norm_alpha must be finite and >= 0");
}

EntMetrics entanglement_fidelity(const EntConfig& cfg) {
    cfg.validate();
    EntMetrics m;
    if (cfg.alpha == 0.0) {
        // vacuum input: nothing scatters, nothing distinguishes the branches
        m.F_ent = 1.0;
        m.F_ent_other = 1.0;
        m.p_plus = 1.0;
        m.F_kitten_plus = 1.0;
        m.F_kitten_minus = 1.0;
        return m;
    }
    const EntScalars e = scalars_of(cfg);
    m.theta = e.theta;
    const double f_point = fidelity_pointwise(cfg, e);
    const double f_multi = fidelity_multimode(cfg, e);
    m.F_ent = cfg.formula == EntFormula::pointwise ? f_point : f_multi;
    m.F_ent_other = cfg.formula == EntFormula::pointwise ? f_multi : f_point;
    const KittenResult k = kitten_of(cfg, e);
    m.p_plus = k.p_plus;
    m.p_minus = k.p_minus;
    m.F_kitten_plus = k.F_kitten_plus;
    m.F_kitten_minus = k.F_kitten_minus;
    return m;
}

KittenResult kitten_projection(const EntConfig& cfg) {
    cfg.validate();
    if (cfg.alpha == 0.0) return {1.0, 0.0, 1.0, 1.0};
    return kitten_of(cfg, scalars_of(cfg));
}

std::vector<EntSweepRow> sweep_ent(const EntConfig& templ, EntSweepAxis axis,
                                   std::span<const double> grid, bool parallel) {
    templ.validate();
    const int n = static_cast<int>(grid.size());
    std::vector<EntSweepRow> rows(n);
    const char* name = axis == EntSweepAxis::kappa_ratio ? "kappa_ratio" : "eta_norm_alpha";
#ifdef KERRGATE_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int i = 0; i < n; ++i) {
        EntConfig cfg = templ;
        if (axis == EntSweepAxis::kappa_ratio)
            cfg.kappa_ratio = grid[i];
        else
            cfg.eta_norm_alpha = grid[i];
        EntConfig pw = cfg;
        pw.formula = EntFormula::pointwise;
        const EntMetrics m = entanglement_fidelity(pw);
        rows[i] = {name,     grid[i],       m.theta / (2.0 * M_PI), m.F_ent,
                   m.F_ent_other, m.p_plus, m.F_kitten_plus};
    }
    return rows;
}

}  // namespace kerrgate
