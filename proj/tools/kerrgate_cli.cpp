// Command-line front end: point evaluations, figure-reproduction sweeps,
// feasibility reports, CSV/JSON emission and reproducible manifests.

#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kerrgate/entangle.hpp"
#include "kerrgate/gate.hpp"
#include "kerrgate/manifest.hpp"
#include "kerrgate/params.hpp"

using nlohmann::json;
using namespace kerrgate;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct SweepSpec {
    std::string axis;
    double lo, hi, step;
};

SweepSpec parse_sweep(const std::string& s) {
    SweepSpec sp;
    const size_t a = s.find(':');
    if (a == std::string::npos) throw CLI::ValidationError("--sweep", "expected axis:lo:hi:step");
    sp.axis = s.substr(0, a);
    if (std::sscanf(s.c_str() + a + 1, "%lf:%lf:%lf", &sp.lo, &sp.hi, &sp.step) != 3 ||
        !(sp.step > 0.0) || !(sp.hi >= sp.lo))
        throw CLI::ValidationError("--sweep", "expected axis:lo:hi:step with step > 0");
    return sp;
}

std::vector<double> make_grid(double lo, double hi, double step) {
    std::vector<double> g;
    for (int i = 0;; ++i) {
        const double x = lo + i * step;
        if (x > hi + 0.5 * step) break;
        g.push_back(std::min(x, hi));
    }
    return g;
}

void emit(const CsvTable& table, const std::string& out_path) {
    if (out_path.empty())
        std::cout << table.to_string();
    else
        table.write(out_path);
}

GateConfig gate_config_from(const json& p) {
    GateConfig cfg;
    cfg.kappa_ratio = p.at("kappa_ratio").get<double>();
    cfg.kappa_io_ratio = p.at("kappa_io_ratio").get<double>();
    cfg.eta_norm = p.at("eta_norm").get<double>();
    cfg.sigma_omega = p.at("sigma_omega").get<double>();
    cfg.correct_backaction = p.at("correct_backaction").get<bool>();
    const std::string est = p.at("estimator").get<std::string>();
    if (est == "pure_choi") cfg.estimator = GateEstimator::pure_choi;
    else if (est == "leakage_resolved") cfg.estimator = GateEstimator::leakage_resolved;
    else if (est == "avg_output") cfg.estimator = GateEstimator::avg_output;
    else throw std::invalid_argument("unknown estimator: " + est);
    cfg.quad.base_nodes = p.at("quad_base_nodes").get<int>();
    cfg.quad.tolerance = p.at("quad_tolerance").get<double>();
    return cfg;
}

int run_gate(const json& p, const std::string& out_path) {
    const GateConfig cfg = gate_config_from(p);
    cfg.validate();
    if (p.contains("sweep")) {
        const json& s = p.at("sweep");
        if (s.at("axis").get<std::string>() != "kappa")
            throw std::invalid_argument("gate sweep supports only the 'kappa' axis");
        const auto grid =
            make_grid(s.at("lo").get<double>(), s.at("hi").get<double>(), s.at("step").get<double>());
        const auto rows = sweep_gate(cfg, grid);
        CsvTable t;
        t.header = {"kappa_ratio[kappa_o_units]", "eta_norm[dimensionless]",
                    "F_G[dimensionless]",         "D_G[dimensionless]",
                    "F_G_corrected[dimensionless]", "success_trace[dimensionless]",
                    "theta_mu[radians_over_2pi]"};
        for (const auto& r : rows)
            t.rows.push_back({format_csv_cell(r.kappa_ratio), format_csv_cell(r.eta_norm),
                              format_csv_cell(r.F_G), format_csv_cell(r.D_G),
                              format_csv_cell(r.F_G_corrected), format_csv_cell(r.success_trace),
                              format_csv_cell(r.theta_mu_over_2pi)});
        emit(t, out_path);
    } else {
        const GateMetrics m = process_metrics(cfg);
        json out = {{"F_G", m.F_G},
                    {"D_G", m.D_G},
                    {"success_trace", m.success_trace},
                    {"theta_mu_over_2pi", m.theta_mu / (2.0 * M_PI)},
                    {"estimator", p.at("estimator")},
                    {"correct_backaction", cfg.correct_backaction}};
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

EntConfig ent_config_from(const json& p) {
    EntConfig cfg;
    cfg.alpha = {p.at("alpha").get<double>(), 0.0};
    cfg.kappa_ratio = p.at("kappa_ratio").get<double>();
    if (p.contains("kappa_io_ratio") && !p.at("kappa_io_ratio").is_null())
        cfg.kappa_io_ratio = p.at("kappa_io_ratio").get<double>();
    cfg.eta_norm_alpha = p.at("eta_norm_alpha").get<double>();
    cfg.sigma_omega = p.at("sigma_omega").get<double>();
    cfg.formula = p.at("formula").get<std::string>() == "multimode" ? EntFormula::multimode
                                                                    : EntFormula::pointwise;
    cfg.quad.base_nodes = p.at("quad_base_nodes").get<int>();
    cfg.quad.tolerance = p.at("quad_tolerance").get<double>();
    return cfg;
}

int run_entangle(const json& p, const std::string& out_path) {
    const EntConfig cfg = ent_config_from(p);
    cfg.validate();
    const bool kitten = p.value("kitten", false);
    if (p.contains("sweep")) {
        const json& s = p.at("sweep");
        const std::string axis = s.at("axis").get<std::string>();
        EntSweepAxis ax;
        if (axis == "kappa") ax = EntSweepAxis::kappa_ratio;
        else if (axis == "eta-alpha") ax = EntSweepAxis::eta_norm_alpha;
        else throw std::invalid_argument("entangle sweep axis must be kappa or eta-alpha");
        const auto grid =
            make_grid(s.at("lo").get<double>(), s.at("hi").get<double>(), s.at("step").get<double>());
        const auto rows = sweep_ent(cfg, ax, grid);
        CsvTable t;
        t.header = {"x_name", "x_value[kappa_o_units_or_dimensionless]",
                    "theta[radians_over_2pi]", "F_ent_pointwise[dimensionless]",
                    "F_ent_multimode[dimensionless]"};
        if (kitten) {
            t.header.push_back("p_plus[dimensionless]");
            t.header.push_back("F_kitten_plus[dimensionless]");
        }
        for (const auto& r : rows) {
            std::vector<std::string> row = {r.x_name, format_csv_cell(r.x_value),
                                            format_csv_cell(r.theta_over_2pi),
                                            format_csv_cell(r.F_ent_pointwise),
                                            format_csv_cell(r.F_ent_multimode)};
            if (kitten) {
                row.push_back(format_csv_cell(r.p_plus));
                row.push_back(format_csv_cell(r.F_kitten_plus));
            }
            t.rows.push_back(std::move(row));
        }
        emit(t, out_path);
    } else {
        const EntMetrics m = entanglement_fidelity(cfg);
        json out = {{"F_ent", m.F_ent},
                    {"F_ent_other_formula", m.F_ent_other},
                    {"formula", p.at("formula")},
                    {"theta_over_2pi", m.theta / (2.0 * M_PI)}};
        if (kitten) {
            out["p_plus"] = m.p_plus;
            out["p_minus"] = m.p_minus;
            out["F_kitten_plus"] = m.F_kitten_plus;
            out["F_kitten_minus"] = m.F_kitten_minus;
        }
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int run_feasibility(const json& p) {
    const Preset pr = preset(p.at("preset").get<std::string>());
    const double eta_lit = eta_from_ensemble(pr.ens);
    const double kappa_o = pr.cav.kappa_o();
    const double eta_norm_lit = 4.0 * eta_lit / (2.0 * M_PI * kappa_o);
    const double ratio = std::abs(eta_norm_lit) / pr.claimed_eta_norm;
    const bool flagged = ratio > 3.0 || ratio < 1.0 / 3.0;

    GateConfig g;
    g.kappa_ratio = 0.99;
    g.kappa_io_ratio = 0.01;
    g.eta_norm = pr.claimed_eta_norm;
    const GateMetrics m = process_metrics(g);

    json out = {{"preset", pr.name},
                {"note", pr.note},
                {"eta_closed_form_rad_per_s", eta_lit},
                {"eta_norm_closed_form", eta_norm_lit},
                {"eta_norm_claimed", pr.claimed_eta_norm},
                {"closed_form_to_claimed_ratio", ratio},
                {"discrepancy_flagged", flagged},
                {"F_G_at_claimed_eta_norm", m.F_G},
                {"D_G_at_claimed_eta_norm", m.D_G},
                {"theta_mu_over_2pi", m.theta_mu / (2.0 * M_PI)}};
    if (flagged)
        out["discrepancy_note"] =
            "closed-form strength differs from the published figure by more than 3x; "
            "both values are reported, neither is reconciled";
    if (eta_norm_lit * pr.claimed_eta_norm < 0.0)
        out["sign_note"] = "closed-form eta is negative for this detuning; the published "
                           "figure quotes the magnitude";
    std::cout << out.dump(2) << "\n";
    return 0;
}

int dispatch(const RunManifest& man) {
    if (man.command == "gate") return run_gate(man.params, man.out_path);
    if (man.command == "entangle") return run_entangle(man.params, man.out_path);
    if (man.command == "feasibility") return run_feasibility(man.params);
    throw std::invalid_argument("manifest carries unknown command: " + man.command);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hybrid controlled-Z gate and entanglement simulator"};
    app.require_subcommand(1);

    // gate ---------------------------------------------------------------
    auto* gate_cmd = app.add_subcommand("gate", "controlled-Z gate metrics and sweeps");
    double g_kappa = 0.99, g_kio = 0.01, g_eta = 2.2, g_sigma = 0.2, g_qtol = 1e-10;
    int g_qnodes = 512;
    bool g_corr = false;
    std::string g_est = "pure_choi", g_sweep, g_out, g_man;
    gate_cmd->add_option("--kappa-ratio", g_kappa, "kappa_eo / kappa_o")
        ->check(CLI::Range(1e-9, 1.0));
    gate_cmd->add_option("--kappa-io-ratio", g_kio, "kappa_io / kappa_o");
    gate_cmd->add_option("--eta-norm", g_eta, "4 eta / (2 pi kappa_o)");
    gate_cmd->add_option("--sigma-omega", g_sigma, "pulse bandwidth, kappa_o units");
    gate_cmd->add_flag("--correct-backaction", g_corr, "report phase-corrected fidelity");
    gate_cmd->add_option("--estimator", g_est)
        ->check(CLI::IsMember({"pure_choi", "leakage_resolved", "avg_output"}));
    gate_cmd->add_option("--sweep", g_sweep, "kappa:lo:hi:step");
    gate_cmd->add_option("--out", g_out, "CSV output path");
    gate_cmd->add_option("--manifest", g_man, "write run manifest here");
    gate_cmd->add_option("--quad-nodes", g_qnodes);
    gate_cmd->add_option("--quad-tol", g_qtol);

    // entangle -----------------------------------------------------------
    auto* ent_cmd = app.add_subcommand("entangle", "hybrid entanglement metrics and sweeps");
    double e_kappa = 0.99, e_eta = 3.0, e_alpha = 1.0, e_sigma = 0.2, e_qtol = 1e-10;
    int e_qnodes = 512;
    std::optional<double> e_kio;
    bool e_kitten = false;
    std::string e_formula = "pointwise", e_sweep, e_out, e_man;
    ent_cmd->add_option("--kappa-ratio", e_kappa)->check(CLI::Range(1e-9, 1.0));
    ent_cmd->add_option("--kappa-io-ratio", e_kio,
                        "kappa_io / kappa_o (default: 1 - kappa_ratio)");
    ent_cmd->add_option("--eta-alpha", e_eta, "4 eta |alpha|^2 / (2 pi kappa_o)");
    ent_cmd->add_option("--alpha", e_alpha, "coherent amplitude of the incident pulse");
    ent_cmd->add_option("--sigma-omega", e_sigma);
    ent_cmd->add_flag("--kitten", e_kitten, "include kitten projection columns");
    ent_cmd->add_option("--formula", e_formula)->check(CLI::IsMember({"pointwise", "multimode"}));
    ent_cmd->add_option("--sweep", e_sweep, "kappa:lo:hi:step or eta-alpha:lo:hi:step");
    ent_cmd->add_option("--out", e_out, "CSV output path");
    ent_cmd->add_option("--manifest", e_man, "write run manifest here");
    ent_cmd->add_option("--quad-nodes", e_qnodes);
    ent_cmd->add_option("--quad-tol", e_qtol);

    // feasibility --------------------------------------------------------
    auto* feas_cmd = app.add_subcommand("feasibility", "published-parameter feasibility report");
    std::string f_preset;
    feas_cmd->add_option("preset", f_preset, "nv or cs")->required();

    // sweep (alias driver) ------------------------------------------------
    auto* sweep_cmd = app.add_subcommand("sweep", "run a sweep for a named target");
    std::string s_target, s_spec, s_out, s_man;
    sweep_cmd->add_option("--target", s_target)->required()->check(CLI::IsMember({"gate", "entangle"}));
    sweep_cmd->add_option("--axis", s_spec, "axis:lo:hi:step")->required();
    sweep_cmd->add_option("--out", s_out);
    sweep_cmd->add_option("--manifest", s_man);
    double s_kappa = 0.99, s_eta = 2.2, s_eta_alpha = 3.0, s_alpha = 1.0;
    sweep_cmd->add_option("--kappa-ratio", s_kappa)->check(CLI::Range(1e-9, 1.0));
    sweep_cmd->add_option("--eta-norm", s_eta);
    sweep_cmd->add_option("--eta-alpha", s_eta_alpha);
    sweep_cmd->add_option("--alpha", s_alpha);

    // rerun ---------------------------------------------------------------
    auto* rerun_cmd = app.add_subcommand("rerun", "replay a saved manifest byte-for-byte");
    std::string r_man;
    rerun_cmd->add_option("manifest", r_man)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        RunManifest man;
        if (gate_cmd->parsed()) {
            man.command = "gate";
            man.out_path = g_out;
            man.params = {{"kappa_ratio", g_kappa},     {"kappa_io_ratio", g_kio},
                          {"eta_norm", g_eta},          {"sigma_omega", g_sigma},
                          {"correct_backaction", g_corr}, {"estimator", g_est},
                          {"quad_base_nodes", g_qnodes}, {"quad_tolerance", g_qtol}};
            if (!g_sweep.empty()) {
                const SweepSpec sp = parse_sweep(g_sweep);
                if (sp.axis != "kappa") throw std::invalid_argument("gate sweep axis must be kappa");
                man.params["sweep"] = {{"axis", sp.axis}, {"lo", sp.lo}, {"hi", sp.hi}, {"step", sp.step}};
            }
            if (!g_man.empty()) { man.manifest_path = g_man; man.save(g_man); }
            return run_gate(man.params, man.out_path);
        }
        if (ent_cmd->parsed()) {
            man.command = "entangle";
            man.out_path = e_out;
            man.params = {{"kappa_ratio", e_kappa}, {"eta_norm_alpha", e_eta},
                          {"alpha", e_alpha},       {"sigma_omega", e_sigma},
                          {"kitten", e_kitten},     {"formula", e_formula},
                          {"quad_base_nodes", e_qnodes}, {"quad_tolerance", e_qtol}};
            man.params["kappa_io_ratio"] = e_kio ? json(*e_kio) : json(nullptr);
            if (!e_sweep.empty()) {
                const SweepSpec sp = parse_sweep(e_sweep);
                man.params["sweep"] = {{"axis", sp.axis}, {"lo", sp.lo}, {"hi", sp.hi}, {"step", sp.step}};
            }
            if (!e_man.empty()) { man.manifest_path = e_man; man.save(e_man); }
            return run_entangle(man.params, man.out_path);
        }
        if (feas_cmd->parsed()) {
            man.command = "feasibility";
            man.params = {{"preset", f_preset}};
            return run_feasibility(man.params);
        }
        if (sweep_cmd->parsed()) {
            const SweepSpec sp = parse_sweep(s_spec);
            man.out_path = s_out;
            if (s_target == "gate") {
                man.command = "gate";
                man.params = {{"kappa_ratio", s_kappa},   {"kappa_io_ratio", 0.01},
                              {"eta_norm", s_eta},        {"sigma_omega", 0.2},
                              {"correct_backaction", false}, {"estimator", "pure_choi"},
                              {"quad_base_nodes", 512},   {"quad_tolerance", 1e-10}};
            } else {
                man.command = "entangle";
                man.params = {{"kappa_ratio", s_kappa}, {"eta_norm_alpha", s_eta_alpha},
                              {"alpha", s_alpha},       {"sigma_omega", 0.2},
                              {"kitten", false},        {"formula", "pointwise"},
                              {"kappa_io_ratio", nullptr},
                              {"quad_base_nodes", 512}, {"quad_tolerance", 1e-10}};
            }
            man.params["sweep"] = {{"axis", sp.axis}, {"lo", sp.lo}, {"hi", sp.hi}, {"step", sp.step}};
            if (!s_man.empty()) { man.manifest_path = s_man; man.save(s_man); }
            return dispatch(man);
        }
        if (rerun_cmd->parsed()) {
            return dispatch(RunManifest::load(r_man));
        }
        return kExitUsage;
    } catch (const QuadratureError& e) {
        std::cerr << "numerical error: " << e.what() << " (estimates "
                  << e.previous_estimate << " vs " << e.last_estimate << ")\n";
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
