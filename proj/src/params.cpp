#include "kerrgate/params.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace kerrgate {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kHbar = 1.054571817e-34;     // J s
constexpr double kEpsilon0 = 8.8541878128e-12;  // F/m

void require_nonneg(double v, const char* name) {
    if (!(v >= 0.0) || !std::isfinite(v))
        throw std::invalid_argument(std::string(name) + " must be finite and >= 0");
}

}  // namespace

std::optional<std::string> CavityPair::validate() const {
    require_nonneg(kappa_eo, "kappa_eo");
    require_nonneg(kappa_io, "kappa_io");
    require_nonneg(kappa_emu, "kappa_emu");
    require_nonneg(kappa_imu, "kappa_imu");
    if (kappa_eo == 0.0 && kappa_io == 0.0)
        throw std::invalid_argument("b-cavity has zero total decay rate");
    if (kappa_mu() > 0.01 * kappa_o())
        return "kappa_mu exceeds 0.01 kappa_o: the stored photon decays "
               "appreciably during the gate; stationary-qubit assumption is strained";
    return std::nullopt;
}

void AtomEnsemble::validate() const {
    require_nonneg(g_o, "g_o");
    require_nonneg(g_mu, "g_mu");
    require_nonneg(Omega_c, "Omega_c");
    require_nonneg(Gamma_1, "Gamma_1");
    require_nonneg(gamma_1, "gamma_1");
    require_nonneg(gamma_2, "gamma_2");
    require_nonneg(gamma_3, "gamma_3");
    require_nonneg(n_mu_mean, "n_mu_mean");
    if (!(N_a >= 1.0)) throw std::invalid_argument("N_a must be >= 1");
    if (rho_N && V_a > 0.0) {
        const double implied = *rho_N * V_a;
        if (std::abs(implied - N_a) > 1e-9 * std::max(std::abs(implied), std::abs(N_a)))
            throw std::invalid_argument("N_a inconsistent with rho_N * V_a");
    }
}

double eta_from_ensemble(const AtomEnsemble& ens) {
    ens.validate();
    const double drive = ens.Omega_c * ens.Omega_c + ens.g_mu * ens.g_mu * ens.n_mu_mean;
    if (drive <= 0.0)
        throw std::domain_error("Omega_c^2 + g_mu^2 <n_mu> is zero: no drive saturating the ensemble");
    const double width = ens.Delta * ens.Delta +
                         (ens.Gamma_1 + ens.gamma_3) * (ens.Gamma_1 + ens.gamma_3);
    if (width <= 0.0)
        throw std::domain_error("Delta^2 + (Gamma_1 + gamma_3)^2 is zero");
    return -2.0 * ens.N_a * ens.g_o * ens.g_o * ens.g_mu * ens.g_mu * ens.Delta /
           (width * drive);
}

SusceptibilityResult chi3_cross(const AtomEnsemble& ens) {
    ens.validate();
    if (!(ens.d_21 > 0.0) || !(ens.d_43 > 0.0) || !(ens.V_a > 0.0))
        throw std::domain_error("chi3_cross requires d_21, d_43 and V_a > 0");
    const double drive = ens.Omega_c * ens.Omega_c + ens.g_mu * ens.g_mu * ens.n_mu_mean;
    if (drive <= 0.0)
        throw std::domain_error("Omega_c^2 + g_mu^2 <n_mu> is zero");
    const std::complex<double> pole(ens.Delta, -(ens.Gamma_1 + ens.gamma_3));
    if (pole == 0.0) throw std::domain_error("Delta - i Gamma_1 - i gamma_3 is zero");
    const double V_m3 = ens.V_a * 1e-6;  // cm^3 -> m^3
    const double num = -2.0 * ens.N_a * ens.d_21 * ens.d_21 * ens.d_43 * ens.d_43;
    const double den_re = kHbar * kHbar * kHbar * kEpsilon0 * V_m3;
    return {num / (den_re * pole * drive)};
}

Preset preset(std::string_view name) {
    Preset p;
    p.cav.kappa_eo = kTwoPi * 10e6 * 0.99;
    p.cav.kappa_io = kTwoPi * 10e6 * 0.01;
    p.cav.kappa_emu = kTwoPi * 10e3 / 2.0;
    p.cav.kappa_imu = kTwoPi * 10e3 / 2.0;
    // Omega_c = 10 g_o cancels g_o in the closed form once <n_mu> = 0, so a
    // nominal g_o = 1 rad/s stands in for the unpublished coupling.
    p.ens.g_o = 1.0;
    p.ens.Omega_c = 10.0;
    p.ens.n_mu_mean = 0.0;
    p.claimed_eta_norm = 2.2;
    if (name == "nv") {
        p.name = "nv";
        p.ens.rho_N = 5e18;      // cm^-3
        p.ens.V_a = 0.7e-6;      // cm^3
        p.ens.N_a = 3.5e12;
        p.ens.g_mu = kTwoPi * 10.0;
        p.ens.Delta = kTwoPi * 0.1e6;
        p.ens.Gamma_1 = kTwoPi * 3e3;
        p.ens.gamma_3 = kTwoPi * 3e3;
        p.note = "nanodiamond ensemble bridging a microwave cavity and an optical cavity";
    } else if (name == "cs") {
        p.name = "cs";
        p.ens.N_a = 6900;
        p.ens.g_mu = kTwoPi * 0.5e6;
        p.ens.Delta = kTwoPi * 50e6;
        p.ens.Gamma_1 = 0.0;
        p.ens.gamma_3 = kTwoPi * 5e6;
        p.note = "cold-atom cloud, all-optical configuration";
    } else {
        throw std::invalid_argument("unknown preset '" + std::string(name) +
                                    "'; valid presets: nv, cs");
    }
    return p;
}

namespace {

using nlohmann::json;

double unit_factor(const std::string& unit, bool rate_field) {
    if (unit == "Hz") return kTwoPi;
    if (unit == "kHz") return kTwoPi * 1e3;
    if (unit == "MHz") return kTwoPi * 1e6;
    if (unit == "GHz") return kTwoPi * 1e9;
    if (unit == "rad_per_s") return 1.0;
    if (!rate_field && (unit == "dimensionless" || unit == "kappa_o_units")) return 1.0;
    throw std::invalid_argument("unrecognized unit '" + unit + "'");
}

double read_quantity(const json& section, const std::string& key, bool rate_field,
                     double fallback = 0.0) {
    if (!section.contains(key)) return fallback;
    const json& q = section.at(key);
    if (q.is_number()) {
        if (rate_field)
            throw std::invalid_argument("field '" + key + "' is a rate and must carry a unit");
        return q.get<double>();
    }
    if (!q.is_object() || !q.contains("value") || !q.contains("unit"))
        throw std::invalid_argument("field '" + key + "' must be {\"value\":..., \"unit\":...}");
    return q.at("value").get<double>() * unit_factor(q.at("unit").get<std::string>(), rate_field);
}

}  // namespace

PhysicalConfig load_physical_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    json j = json::parse(in);
    PhysicalConfig cfg;
    if (j.contains("cavities")) {
        const json& c = j.at("cavities");
        cfg.cav.omega_o = read_quantity(c, "omega_o", true);
        cfg.cav.kappa_eo = read_quantity(c, "kappa_eo", true);
        cfg.cav.kappa_io = read_quantity(c, "kappa_io", true);
        cfg.cav.omega_mu = read_quantity(c, "omega_mu", true);
        cfg.cav.kappa_emu = read_quantity(c, "kappa_emu", true);
        cfg.cav.kappa_imu = read_quantity(c, "kappa_imu", true);
    }
    if (j.contains("ensemble")) {
        const json& e = j.at("ensemble");
        cfg.ens.N_a = read_quantity(e, "N_a", false, 1.0);
        if (e.contains("rho_N")) cfg.ens.rho_N = read_quantity(e, "rho_N", false);
        cfg.ens.V_a = read_quantity(e, "V_a", false);
        cfg.ens.g_o = read_quantity(e, "g_o", true);
        cfg.ens.g_mu = read_quantity(e, "g_mu", true);
        cfg.ens.Omega_c = read_quantity(e, "Omega_c", true);
        cfg.ens.Delta = read_quantity(e, "Delta", true);
        cfg.ens.delta = read_quantity(e, "delta", true);
        cfg.ens.Gamma_1 = read_quantity(e, "Gamma_1", true);
        cfg.ens.gamma_1 = read_quantity(e, "gamma_1", true);
        cfg.ens.gamma_2 = read_quantity(e, "gamma_2", true);
        cfg.ens.gamma_3 = read_quantity(e, "gamma_3", true);
        cfg.ens.d_21 = read_quantity(e, "d_21", false);
        cfg.ens.d_43 = read_quantity(e, "d_43", false);
        cfg.ens.n_mu_mean = read_quantity(e, "n_mu_mean", false);
        cfg.ens.validate();
    }
    cfg.cav.validate();
    return cfg;
}

}  // namespace kerrgate
