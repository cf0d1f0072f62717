#ifndef KERRGATE_SCATTERING_HPP
#define KERRGATE_SCATTERING_HPP

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "kerrgate/params.hpp"
#include "kerrgate/pulse.hpp"

// Frequency-resolved reflection off the b-cavity, the number-state
// dependent backaction phase on the g-cavity, and the scalar spectral
// integrals every downstream metric is built from.

namespace kerrgate {

enum class Polarization { L, R };

struct BranchLabel {
    int n_mu = 0;                       // g-cavity photon number
    Polarization pol = Polarization::L;
};

inline double eta_for(const KerrCoupling& k, Polarization pol) {
    return pol == Polarization::R ? k.eta_plus : k.eta_minus;
}

// Reflection amplitude
//   r = [-i(omega_o - omega + eta_pm n) + kappa_eo - kappa_io]
//       / [i(omega_o - omega + eta_pm n) + kappa_eo + kappa_io].
// |r| <= 1 whenever kappa_io >= 0, with equality iff kappa_io == 0.
std::complex<double> reflection(double omega, const BranchLabel& b,
                                const CavityPair& cav, const KerrCoupling& k);

// Two models for the intracavity intensity weight entering the backaction
// phase. Both reduce to theta ~= 4 eta |alpha|^2 / kappa_o in the
// narrowband, resonant, overcoupled limit; they differ in how theta
// scales as kappa_eo is detuned from kappa_o.
enum class BackactionWeight {
    kappa_linear,   // 4 kappa_eo   / (Dtot^2 + kappa_o^2)
    kappa_squared,  // 4 kappa_eo^2 / (Dtot^2 + kappa_o^2)
};

struct QuadratureOptions {
    int base_nodes = 512;
    double tolerance = 1e-10;
    int max_doublings = 8;
};

// theta(n, pol) = eta_pm |alpha|^2 * integral of |f|^2 * weight.
// Exactly linear in |alpha|^2 (the factor is applied analytically).
double backaction_phase(const BranchLabel& b, const DrivePulse& p,
                        const CavityPair& cav, const KerrCoupling& k,
                        BackactionWeight w = BackactionWeight::kappa_linear,
                        const QuadratureOptions& opt = {});

struct ScatterSet {
    std::vector<BranchLabel> branches;
    std::vector<std::complex<double>> O;  // overlap: integral |f|^2 conj(r_j)
    std::vector<double> W;                // weight:  integral |f|^2 |r_j|^2
    Eigen::MatrixXcd G;                   // Gram:    delta_{P_j P_k} integral |f|^2 conj(r_j) r_k
    std::vector<double> theta;            // backaction phase per branch
};

// O, W, G, theta for each branch. G is Hermitian by construction (upper
// triangle computed, mirrored) and positive semidefinite.
ScatterSet scatter_set(std::span<const BranchLabel> branches, const DrivePulse& p,
                       const CavityPair& cav, const KerrCoupling& k,
                       BackactionWeight w = BackactionWeight::kappa_linear,
                       const QuadratureOptions& opt = {});

}  // namespace kerrgate

#endif
