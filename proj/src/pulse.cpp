#include "kerrgate/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace kerrgate {

double spectrum(const DrivePulse& p, double omega) {
    if (!(p.sigma_omega > 0.0)) throw std::invalid_argument("sigma_omega must be > 0");
    const double x = (omega - p.omega_in) / p.sigma_omega;
    return std::exp(-0.5 * x * x) / (std::pow(M_PI, 0.25) * std::sqrt(p.sigma_omega));
}

double time_profile(const DrivePulse& p, double t) {
    const double sT = p.sigma_time();
    const double x = t / sT;
    return std::exp(-0.5 * x * x) / (std::pow(M_PI, 0.25) * std::sqrt(sT));
}

namespace {

struct GaussRule {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;
};

// Nodes via Newton iteration on P_n, seeded by the Chebyshev estimate.
GaussRule compute_rule(int n) {
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    return r;
}

const GaussRule& rule(int n) {
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

std::complex<double> panel_sum(double a, double b, int n,
                               const std::function<std::complex<double>(double)>& f) {
    const GaussRule& r = rule(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    std::complex<double> acc = 0.0;
    for (int i = 0; i < n; ++i) acc += r.weights[i] * f(mid + half * r.nodes[i]);
    return acc * half;
}

}  // namespace

std::complex<double> integrate(const Quadrature& q,
                               const std::function<std::complex<double>(double)>& f) {
    if (!(q.upper > q.lower)) throw std::invalid_argument("empty integration interval");
    std::vector<double> edges{q.lower, q.upper};
    for (double b : q.breakpoints)
        if (b > q.lower && b < q.upper) edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::complex<double> total = 0.0;
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        const double a = edges[i], b = edges[i + 1];
        int n = q.base_nodes;
        std::complex<double> prev = panel_sum(a, b, n, f);
        bool converged = false;
        std::complex<double> cur = prev;
        for (int d = 0; d < q.max_doublings; ++d) {
            n *= 2;
            cur = panel_sum(a, b, n, f);
            if (std::abs(cur - prev) <= q.tolerance * std::max(1.0, std::abs(cur))) {
                converged = true;
                break;
            }
            // keep the second-to-last estimate for the error report
            if (d + 1 < q.max_doublings) prev = cur;
        }
        if (!converged)
            throw QuadratureError("panel refinement did not converge", prev, cur);
        total += cur;
    }
    return total;
}

double integrate_real(const Quadrature& q, const std::function<double(double)>& f) {
    return integrate(q, [&f](double x) { return std::complex<double>(f(x), 0.0); }).real();
}

Quadrature pulse_window(const DrivePulse& p, const std::vector<double>& centers,
                        double linewidth) {
    Quadrature q;
    q.lower = p.omega_in - 8.0 * p.sigma_omega;
    q.upper = p.omega_in + 8.0 * p.sigma_omega;
    for (double c : centers) {
        q.lower = std::min(q.lower, c - 8.0 * linewidth);
        q.upper = std::max(q.upper, c + 8.0 * linewidth);
        q.breakpoints.push_back(c);
    }
    // keep the pulse core its own panel when the window got extended
    q.breakpoints.push_back(p.omega_in - 8.0 * p.sigma_omega);
    q.breakpoints.push_back(p.omega_in + 8.0 * p.sigma_omega);
    return q;
}

}  // namespace kerrgate
