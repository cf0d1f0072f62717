// Serial reference vs OpenMP sweep timing, plus a check that both paths
// produce identical rows.

#include <chrono>
#include <cstdio>
#include <vector>

#include "kerrgate/entangle.hpp"
#include "kerrgate/gate.hpp"

using namespace kerrgate;
using clk = std::chrono::steady_clock;

namespace {

double ms_since(clk::time_point t0) {
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

std::vector<double> grid(double lo, double hi, double step) {
    std::vector<double> g;
    for (int i = 0;; ++i) {
        const double x = lo + i * step;
        if (x > hi + 0.5 * step) break;
        g.push_back(x);
    }
    return g;
}

bool same_gate(const std::vector<GateSweepRow>& a, const std::vector<GateSweepRow>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].F_G != b[i].F_G || a[i].F_G_corrected != b[i].F_G_corrected ||
            a[i].theta_mu_over_2pi != b[i].theta_mu_over_2pi)
            return false;
    return true;
}

bool same_ent(const std::vector<EntSweepRow>& a, const std::vector<EntSweepRow>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].F_ent_pointwise != b[i].F_ent_pointwise ||
            a[i].theta_over_2pi != b[i].theta_over_2pi)
            return false;
    return true;
}

}  // namespace

int main() {
    const auto kgrid = grid(0.50, 1.00, 0.005);

    GateConfig gcfg;
    auto t0 = clk::now();
    const auto g_serial = sweep_gate(gcfg, kgrid, /*parallel=*/false);
    const double g_ser_ms = ms_since(t0);
    t0 = clk::now();
    const auto g_par = sweep_gate(gcfg, kgrid, /*parallel=*/true);
    const double g_par_ms = ms_since(t0);
    std::printf("gate sweep     %4zu pts  serial %8.1f ms  parallel %8.1f ms  speedup %.2fx  identical %s\n",
                kgrid.size(), g_ser_ms, g_par_ms, g_ser_ms / g_par_ms,
                same_gate(g_serial, g_par) ? "yes" : "NO");

    EntConfig ecfg;
    const auto egrid = grid(0.80, 1.00, 0.002);
    t0 = clk::now();
    const auto e_serial = sweep_ent(ecfg, EntSweepAxis::kappa_ratio, egrid, /*parallel=*/false);
    const double e_ser_ms = ms_since(t0);
    t0 = clk::now();
    const auto e_par = sweep_ent(ecfg, EntSweepAxis::kappa_ratio, egrid, /*parallel=*/true);
    const double e_par_ms = ms_since(t0);
    std::printf("entangle sweep %4zu pts  serial %8.1f ms  parallel %8.1f ms  speedup %.2fx  identical %s\n",
                egrid.size(), e_ser_ms, e_par_ms, e_ser_ms / e_par_ms,
                same_ent(e_serial, e_par) ? "yes" : "NO");

    const bool ok = same_gate(g_serial, g_par) && same_ent(e_serial, e_par);
    return ok ? 0 : 1;
}
