#ifndef KERRGATE_PARAMS_HPP
#define KERRGATE_PARAMS_HPP

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Physical parameters of the two-cavity system and the atomic ensemble
// mediating the cross-Kerr interaction, plus the closed-form strength
// estimates derived from them.
//
// Unit convention: rates and frequencies are stored as dimensionless
// multiples of the b-cavity design decay rate unless a loader converted
// them from explicit physical units (then they are rad/s, as documented
// per call site).

namespace kerrgate {

struct CavityPair {
    double omega_o = 0.0;    // b-cavity resonance
    double kappa_eo = 0.99;  // b-cavity external coupling rate
    double kappa_io = 0.01;  // b-cavity intrinsic loss rate
    double omega_mu = 0.0;   // g-cavity resonance
    double kappa_emu = 0.0;  // g-cavity external coupling rate
    double kappa_imu = 0.0;  // g-cavity intrinsic loss rate

    double kappa_o() const { return kappa_eo + kappa_io; }
    double kappa_mu() const { return kappa_emu + kappa_imu; }

    // Throws std::invalid_argument on negative rates or an all-zero b-cavity.
    // Returns a warning when the g-cavity is too lossy for the stationary
    // qubit assumption (kappa_mu > 0.01 * kappa_o).
    std::optional<std::string> validate() const;
};

struct AtomEnsemble {
    double N_a = 1.0;         // emitter count
    std::optional<double> rho_N;  // number density, 1/cm^3
    double V_a = 0.0;         // ensemble volume, cm^3
    double g_o = 0.0;         // single-emitter optical coupling
    double g_mu = 0.0;        // single-emitter g-cavity coupling
    double Omega_c = 0.0;     // classical drive Rabi rate
    double Delta = 0.0;       // g-cavity transition detuning
    double delta = 0.0;       // optical/drive detuning (documented, unused)
    double Gamma_1 = 0.0;     // |1> -> |3> decay
    double gamma_1 = 0.0;     // |2> branching decay (documented, unused)
    double gamma_2 = 0.0;     // |2> branching decay (documented, unused)
    double gamma_3 = 0.0;     // |4> -> |3> decay
    double d_21 = 0.0;        // optical transition dipole moment, C m
    double d_43 = 0.0;        // g-transition dipole moment, C m
    double n_mu_mean = 0.0;   // mean g-cavity photon number

    void validate() const;  // throws std::invalid_argument
};

struct KerrCoupling {
    double eta_plus = 0.0;   // interaction strength seen by the RCP mode
    double eta_minus = 0.0;  // always 0: the LCP mode reflects off an empty cavity
};

struct SusceptibilityResult {
    std::complex<double> chi3_cross;  // SI units, m^2/V^2 scale
};

// Photon-photon interaction strength from the adiabatic closed form:
//   eta = -2 N_a g_o^2 g_mu^2 Delta /
//         ([Delta^2 + (Gamma_1 + gamma_3)^2] (Omega_c^2 + g_mu^2 <n_mu>))
double eta_from_ensemble(const AtomEnsemble& ens);

// Cross third-order susceptibility:
//   chi3 = -2 N_a d21^2 d43^2 /
//          (hbar^3 eps0 V_a (Delta - i Gamma_1 - i gamma_3)
//                          (Omega_c^2 + g_mu^2 <n_mu>))
// V_a is taken in cm^3 and converted to m^3 internally.
SusceptibilityResult chi3_cross(const AtomEnsemble& ens);

struct Preset {
    std::string name;
    CavityPair cav;           // rates in rad/s
    AtomEnsemble ens;         // rates in rad/s
    double claimed_eta_norm;  // the published 4*eta/(2*pi*kappa_o) figure
    std::string note;
};

// Feasibility presets: "nv" (nanodiamond ensemble in a microwave cavity)
// and "cs" (cold-atom cloud, all-optical). Unknown name -> invalid_argument
// listing the valid choices.
Preset preset(std::string_view name);

// --- structured config files -------------------------------------------
//
// JSON with nested sections; every rate/frequency field is an object
// {"value": x, "unit": "MHz"}. Unit-less rate fields are rejected.
// Recognized units: Hz, kHz, MHz, GHz, rad_per_s, kappa_o_units,
// dimensionless (the last two only where a dimensionless number is legal).

struct PhysicalConfig {
    CavityPair cav;
    AtomEnsemble ens;
};

PhysicalConfig load_physical_config(const std::string& path);

}  // namespace kerrgate

#endif
