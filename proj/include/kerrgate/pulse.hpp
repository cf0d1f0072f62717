#ifndef KERRGATE_PULSE_HPP
#define KERRGATE_PULSE_HPP

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace kerrgate {

// Gaussian wavepacket incident on the b-cavity. Frequencies in kappa_o
// units. sigma_omega * sigma_time == 1 by construction.
struct DrivePulse {
    double omega_in = 0.0;      // carrier frequency
    double sigma_omega = 0.2;   // spectral bandwidth
    std::complex<double> alpha{1.0, 0.0};  // coherent amplitude; |alpha|^2 = mean photon number

    double sigma_time() const { return 1.0 / sigma_omega; }
    // The g-cavity drive is tuned off in this protocol.
    static constexpr double beta_in = 0.0;
};

// Spectral amplitude f(omega) = (pi^(1/4) sqrt(sigma_omega))^-1
//                               * exp(-(omega - omega_in)^2 / (2 sigma_omega^2)).
// Normalized so that the integral of |f|^2 is 1.
double spectrum(const DrivePulse& p, double omega);

// Matching time profile s(t); used to check Parseval consistency.
double time_profile(const DrivePulse& p, double t);

// Thrown when panel refinement fails to reach tolerance. Carries the last
// two estimates so the caller can see how far apart they were.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what,
                    std::complex<double> previous, std::complex<double> last)
        : std::runtime_error(what), previous_estimate(previous), last_estimate(last) {}
    std::complex<double> previous_estimate;
    std::complex<double> last_estimate;
};

// Adaptive panel-based Gauss-Legendre rule. Panels are delimited by
// breakpoints (interior feature locations, e.g. Lorentzian centers);
// each panel doubles its node count until two successive estimates agree
// to the relative tolerance. Fixed summation order, so results are
// bitwise reproducible for a fixed configuration.
struct Quadrature {
    double lower = -1.0;
    double upper = 1.0;
    std::vector<double> breakpoints;  // interior panel splits, need not be sorted
    int base_nodes = 512;             // Gauss nodes per panel at the first pass
    double tolerance = 1e-10;         // relative refinement tolerance
    int max_doublings = 8;
};

std::complex<double> integrate(const Quadrature& q,
                               const std::function<std::complex<double>(double)>& integrand);

double integrate_real(const Quadrature& q, const std::function<double(double)>& integrand);

// Integration window for pulse-weighted integrands: omega_in +- 8 sigma,
// extended to cover each listed Lorentzian center (half-width `linewidth`)
// when one falls outside, with panel splits at every center.
Quadrature pulse_window(const DrivePulse& p,
                        const std::vector<double>& lorentzian_centers = {},
                        double linewidth = 1.0);

}  // namespace kerrgate

#endif
