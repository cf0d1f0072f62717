#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "kerrgate/entangle.hpp"

using namespace kerrgate;
using cd = std::complex<double>;

namespace {

// eta_norm_alpha tuned so the backaction phase lands exactly on 2 pi m
// in a lossless, perfectly coupled, narrowband configuration.
EntConfig tuned_ideal(int m, double sigma_omega) {
    EntConfig probe;
    probe.kappa_ratio = 1.0;
    probe.kappa_io_ratio = 0.0;
    probe.sigma_omega = sigma_omega;
    probe.eta_norm_alpha = 1.0;
    const double theta1 = entanglement_fidelity(probe).theta;
    EntConfig cfg = probe;
    cfg.eta_norm_alpha = 2.0 * M_PI * m / theta1;
    return cfg;
}

}  // namespace

TEST_CASE("config validation and defaults") {
    EntConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    CHECK(cfg.kappa_io() == doctest::Approx(1.0 - cfg.kappa_ratio));  // total rate fixed
    cfg.kappa_io_ratio = 0.25;
    CHECK(cfg.kappa_io() == doctest::Approx(0.25));

    cfg = EntConfig{};
    cfg.kappa_ratio = 1.2;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = EntConfig{};
    cfg.eta_norm_alpha = -1.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = EntConfig{};
    cfg.sigma_omega = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("vacuum input: degenerate limit") {
    EntConfig cfg;
    cfg.alpha = 0.0;
    const EntMetrics m = entanglement_fidelity(cfg);
    CHECK(m.F_ent == doctest::Approx(1.0));
    CHECK(m.theta == doctest::Approx(0.0));
    CHECK(m.p_plus == doctest::Approx(1.0));
    CHECK(kitten_projection(cfg).F_kitten_plus == doctest::Approx(1.0));
}

TEST_CASE("tuned ideal configuration: unit fidelity in both formulas") {
    // the phase multiple must be large so eta dominates kappa_o and the
    // empty-cavity branch reflects as a hard mirror
    const EntConfig cfg = tuned_ideal(200, 0.01);
    EntConfig pw = cfg;
    pw.formula = EntFormula::pointwise;
    const EntMetrics m = entanglement_fidelity(pw);
    CHECK(m.theta / (2.0 * M_PI) == doctest::Approx(200.0).epsilon(1e-9));
    CHECK(m.F_ent > 0.999);        // pointwise
    CHECK(m.F_ent_other > 0.999);  // multimode
    // kitten targets are produced exactly in this limit
    CHECK(m.F_kitten_plus > 0.999);
    CHECK(m.F_kitten_minus > 0.999);
    // projection probabilities approach (1 +- e^{-2|alpha|^2}) / 2
    const double cat = std::exp(-2.0 * std::norm(cfg.alpha));
    CHECK(m.p_plus == doctest::Approx(0.5 * (1.0 + cat)).epsilon(1e-3));
    CHECK(m.p_minus == doctest::Approx(0.5 * (1.0 - cat)).epsilon(1e-3));
}

TEST_CASE("projection probabilities sum to one analytically") {
    for (double kr : {0.83, 0.99}) {
        for (double ea : {2.0, 3.19, 5.24}) {
            EntConfig cfg;
            cfg.kappa_ratio = kr;
            cfg.eta_norm_alpha = ea;
            const EntMetrics m = entanglement_fidelity(cfg);
            CHECK(m.p_plus + m.p_minus == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(m.p_plus >= 0.0);
            CHECK(m.p_minus >= 0.0);
        }
    }
}

TEST_CASE("fidelity invariant under a global phase of alpha") {
    for (EntFormula f : {EntFormula::pointwise, EntFormula::multimode}) {
        EntConfig cfg;
        cfg.formula = f;
        cfg.eta_norm_alpha = 3.19;
        const double base = entanglement_fidelity(cfg).F_ent;
        cfg.alpha = std::exp(cd(0.0, 0.7));  // same |alpha|
        CHECK(entanglement_fidelity(cfg).F_ent == doctest::Approx(base).epsilon(1e-10));
    }
}

TEST_CASE("operating points: phase and fidelity anchors") {
    EntConfig cfg;  // kappa 0.99, pointwise
    cfg.eta_norm_alpha = 3.19;
    EntMetrics m = entanglement_fidelity(cfg);
    CHECK(m.theta / (2.0 * M_PI) == doctest::Approx(3.07).epsilon(0.015));
    CHECK(m.F_ent == doctest::Approx(0.86).epsilon(0.03));

    cfg.eta_norm_alpha = 3.0;
    cfg.kappa_ratio = 0.83;  // kappa_io picks up the complement
    m = entanglement_fidelity(cfg);
    CHECK(m.theta / (2.0 * M_PI) == doctest::Approx(2.03).epsilon(0.02));
    CHECK(m.F_ent == doctest::Approx(0.83).epsilon(0.03));
}

TEST_CASE("the two formulas agree in the narrowband near-lossless regime") {
    for (double ea : {3.19, 4.21, 5.24}) {
        EntConfig cfg;
        cfg.eta_norm_alpha = ea;  // kappa 0.99 -> kappa_io 0.01
        const EntMetrics m = entanglement_fidelity(cfg);
        CHECK(std::abs(m.F_ent - m.F_ent_other) < 0.04);
    }
}

TEST_CASE("phase is exactly linear in the interaction axis") {
    EntConfig cfg;
    cfg.eta_norm_alpha = 2.0;
    const double t2 = entanglement_fidelity(cfg).theta;
    cfg.eta_norm_alpha = 4.0;
    const double t4 = entanglement_fidelity(cfg).theta;
    CHECK(t4 == doctest::Approx(2.0 * t2).epsilon(1e-9));
}

TEST_CASE("sweep: rows match direct evaluation on both axes") {
    EntConfig cfg;
    const std::vector<double> kgrid = {0.83, 0.9, 0.99};
    const auto krows = sweep_ent(cfg, EntSweepAxis::kappa_ratio, kgrid);
    REQUIRE(krows.size() == 3);
    for (size_t i = 0; i < kgrid.size(); ++i) {
        EntConfig point = cfg;
        point.kappa_ratio = kgrid[i];
        const EntMetrics m = entanglement_fidelity(point);
        CHECK(krows[i].x_name == "kappa_ratio");
        CHECK(krows[i].x_value == kgrid[i]);
        CHECK(krows[i].theta_over_2pi == m.theta / (2.0 * M_PI));
        CHECK(krows[i].F_ent_pointwise == m.F_ent);
        CHECK(krows[i].F_ent_multimode == m.F_ent_other);
        CHECK(krows[i].p_plus == m.p_plus);
    }

    const std::vector<double> egrid = {2.5, 3.19};
    const auto erows = sweep_ent(cfg, EntSweepAxis::eta_norm_alpha, egrid);
    REQUIRE(erows.size() == 2);
    CHECK(erows[0].x_name == "eta_norm_alpha");
    EntConfig point = cfg;
    point.eta_norm_alpha = 3.19;
    CHECK(erows[1].F_ent_pointwise == entanglement_fidelity(point).F_ent);

    CHECK(sweep_ent(cfg, EntSweepAxis::kappa_ratio, std::vector<double>{}).empty());
}

TEST_CASE("sweep: serial and parallel paths produce identical rows") {
    EntConfig cfg;
    const std::vector<double> grid = {0.8, 0.85, 0.9, 0.95, 1.0};
    const auto par = sweep_ent(cfg, EntSweepAxis::kappa_ratio, grid, true);
    const auto ser = sweep_ent(cfg, EntSweepAxis::kappa_ratio, grid, false);
    REQUIRE(par.size() == ser.size());
    for (size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].F_ent_pointwise == ser[i].F_ent_pointwise);
        CHECK(par[i].F_ent_multimode == ser[i].F_ent_multimode);
        CHECK(par[i].theta_over_2pi == ser[i].theta_over_2pi);
        CHECK(par[i].F_kitten_plus == ser[i].F_kitten_plus);
    }
}
