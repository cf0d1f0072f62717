#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <complex>

#include "kerrgate/scattering.hpp"

using namespace kerrgate;
using cd = std::complex<double>;

namespace {

CavityPair cavity(double keo, double kio) {
    CavityPair c;
    c.omega_o = 0.0;
    c.kappa_eo = keo;
    c.kappa_io = kio;
    return c;
}

const std::array<BranchLabel, 4> kCanonical = {{{0, Polarization::L},
                                                {0, Polarization::R},
                                                {1, Polarization::L},
                                                {1, Polarization::R}}};

}  // namespace

TEST_CASE("reflection: exact special points") {
    const KerrCoupling k{100.0, 0.0};

    SUBCASE("zero total detuning, lossless: perfect reflection") {
        const CavityPair c = cavity(1.0, 0.0);
        // pol R, n=1 at omega = eta: detuning = -eta + eta*1 = 0
        const cd r = reflection(k.eta_plus, {1, Polarization::R}, c, k);
        CHECK(r.real() == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(r.imag() == doctest::Approx(0.0));
    }
    SUBCASE("frozen complex-arithmetic oracle at detuning -100") {
        const CavityPair c = cavity(1.0, 0.0);
        const cd r = reflection(k.eta_plus, {0, Polarization::R}, c, k);
        CHECK(r.real() == doctest::Approx(-9999.0 / 10001.0).epsilon(1e-14));
        CHECK(r.imag() == doctest::Approx(200.0 / 10001.0).epsilon(1e-14));
    }
    SUBCASE("on-resonance lossy cavity") {
        const CavityPair c = cavity(0.99, 0.01);
        const cd r = reflection(0.0, {0, Polarization::L}, c, k);
        CHECK(r.real() == doctest::Approx(0.98).epsilon(1e-15));
    }
}

TEST_CASE("reflection: conditional pi phase in the strong-interaction limit") {
    const CavityPair c = cavity(1.0, 0.0);
    const KerrCoupling k{100.0, 0.0};
    const double w = k.eta_plus;  // carrier at omega_o + eta
    CHECK(std::abs(reflection(w, {1, Polarization::R}, c, k) - cd(1.0)) < 0.05);
    CHECK(std::abs(reflection(w, {0, Polarization::R}, c, k) + cd(1.0)) < 0.05);
    CHECK(std::abs(reflection(w, {0, Polarization::L}, c, k) + cd(1.0)) < 0.05);
    CHECK(std::abs(reflection(w, {1, Polarization::L}, c, k) + cd(1.0)) < 0.05);
}

TEST_CASE("reflection: passivity and far-detuned limit") {
    const KerrCoupling k{3.0, 0.0};
    for (double kio : {0.0, 0.01, 0.2}) {
        const CavityPair c = cavity(0.9, kio);
        for (double w = -30.0; w <= 30.0; w += 0.37) {
            const double mag = std::abs(reflection(w, {1, Polarization::R}, c, k));
            CHECK(mag <= 1.0 + 1e-14);
            if (kio == 0.0) CHECK(mag == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    // |r + 1| < 2 kappa_o / |detuning| asymptotically
    const CavityPair c = cavity(0.99, 0.01);
    for (double det : {1e2, 1e3, 1e4}) {
        const cd r = reflection(-det, {0, Polarization::L}, c, k);
        CHECK(std::abs(r + cd(1.0)) < 2.0 * c.kappa_o() / det);
    }
}

TEST_CASE("reflection: invariant under common rescaling of all rates") {
    const KerrCoupling k{3.0, 0.0};
    const CavityPair c = cavity(0.9, 0.05);
    for (double s : {2.0, 10.0}) {
        KerrCoupling ks{k.eta_plus * s, 0.0};
        const CavityPair cs = cavity(0.9 * s, 0.05 * s);
        for (double w : {-2.0, 0.3, 4.0}) {
            const cd a = reflection(w, {1, Polarization::R}, c, k);
            const cd b = reflection(w * s, {1, Polarization::R}, cs, ks);
            CHECK(std::abs(a - b) < 1e-12);
        }
    }
}

TEST_CASE("backaction phase: trivial zeros and exact intensity scaling") {
    const CavityPair c = cavity(0.99, 0.01);
    const KerrCoupling k{2.0, 0.0};
    DrivePulse p;
    p.omega_in = k.eta_plus;

    p.alpha = 0.0;
    CHECK(backaction_phase({1, Polarization::R}, p, c, k) == 0.0);

    p.alpha = 1.0;
    CHECK(backaction_phase({1, Polarization::L}, p, c, k) == 0.0);

    const double base = backaction_phase({1, Polarization::R}, p, c, k);
    CHECK(base > 0.0);
    p.alpha = cd(3.0, 0.0);
    CHECK(backaction_phase({1, Polarization::R}, p, c, k) == doctest::Approx(9.0 * base).epsilon(1e-15));
    p.alpha = cd(0.0, 2.0);  // phase of alpha is irrelevant
    CHECK(backaction_phase({1, Polarization::R}, p, c, k) == doctest::Approx(4.0 * base).epsilon(1e-15));
}

TEST_CASE("backaction phase: narrowband resonant limit and monotone convergence") {
    // target theta = 6 pi via 4 eta |alpha|^2 / kappa_o
    const double eta = 6.0 * M_PI / 4.0;
    const CavityPair c = cavity(1.0, 0.0);
    const KerrCoupling k{eta, 0.0};
    DrivePulse p;
    p.omega_in = eta;  // resonant with the n=1 branch

    double prev_err = 1e9;
    for (double sw : {0.4, 0.2, 0.1, 0.05, 0.01}) {
        p.sigma_omega = sw;
        const double theta = backaction_phase({1, Polarization::R}, p, c, k);
        const double err = std::abs(theta - 6.0 * M_PI);
        CHECK(err < prev_err + 1e-12);
        prev_err = err;
    }
    CHECK(prev_err < 1e-3 * 6.0 * M_PI);
}

TEST_CASE("backaction phase: the two intensity weights differ by kappa_eo") {
    const CavityPair c = cavity(0.83, 0.17);
    const KerrCoupling k{2.0, 0.0};
    DrivePulse p;
    p.omega_in = k.eta_plus;
    const double lin = backaction_phase({1, Polarization::R}, p, c, k, BackactionWeight::kappa_linear);
    const double sq = backaction_phase({1, Polarization::R}, p, c, k, BackactionWeight::kappa_squared);
    CHECK(sq == doctest::Approx(c.kappa_eo * lin).epsilon(1e-12));
}

TEST_CASE("scatter set: lossless weights, L-branch degeneracy, Gram structure") {
    const KerrCoupling k{3.0, 0.0};
    DrivePulse p;
    p.omega_in = k.eta_plus;

    SUBCASE("kappa_io = 0 gives unit reflected weight on every branch") {
        const ScatterSet s = scatter_set(kCanonical, p, cavity(1.0, 0.0), k);
        for (double w : s.W) CHECK(w == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("L branches are independent of the stored photon number") {
        const ScatterSet s = scatter_set(kCanonical, p, cavity(0.9, 0.1), k);
        CHECK(std::abs(s.O[0] - s.O[2]) < 1e-12);
        CHECK(std::abs(s.W[0] - s.W[2]) < 1e-12);
        CHECK(s.theta[0] == 0.0);
        CHECK(s.theta[2] == 0.0);
        // identical rows of the Gram matrix on the L block
        CHECK(std::abs(s.G(0, 0) - s.G(2, 2)) < 1e-12);
        CHECK(std::abs(s.G(0, 2) - s.G(0, 0)) < 1e-12);
    }
    SUBCASE("Gram matrix is Hermitian and positive semidefinite") {
        const ScatterSet s = scatter_set(kCanonical, p, cavity(0.9, 0.05), k);
        CHECK((s.G - s.G.adjoint()).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(s.G);
        CHECK(es.eigenvalues().minCoeff() >= -1e-12);
        for (int j = 0; j < 4; ++j)
            CHECK(s.W[j] == doctest::Approx(s.G(j, j).real()).epsilon(1e-15));
    }
    SUBCASE("duplicate branch labels rejected") {
        const std::array<BranchLabel, 2> dup = {{{0, Polarization::L}, {0, Polarization::L}}};
        CHECK_THROWS_AS(scatter_set(dup, p, cavity(0.9, 0.1), k), std::invalid_argument);
    }
}

TEST_CASE("scatter set: strong-interaction narrowband limit reproduces the sign pattern") {
    const KerrCoupling k{200.0, 0.0};
    DrivePulse p;
    p.omega_in = k.eta_plus;
    p.sigma_omega = 0.05;
    const ScatterSet s = scatter_set(kCanonical, p, cavity(1.0, 0.0), k);
    const double sign[] = {-1.0, -1.0, -1.0, 1.0};
    for (int j = 0; j < 4; ++j) CHECK(std::abs(s.O[j] - cd(sign[j])) < 0.02);
}
