#ifndef KERRGATE_HILBERT_HPP
#define KERRGATE_HILBERT_HPP

#include <complex>
#include <functional>
#include <string>

#include <Eigen/Dense>

#include "kerrgate/pulse.hpp"

// Small dense quantum-information numerics: density matrices, Uhlmann
// fidelity, trace distance, coherent-state overlaps.

namespace kerrgate {

// Hermitian, PSD (to tolerance), positive-trace matrix of dimension <= 32.
// Eigenvalues within -1e-10 of zero are clamped at construction; anything
// more negative is rejected.
class DensityMatrix {
public:
    explicit DensityMatrix(const Eigen::MatrixXcd& m);
    static DensityMatrix pure(const Eigen::VectorXcd& psi);

    const Eigen::MatrixXcd& matrix() const { return m_; }
    int dim() const { return static_cast<int>(m_.rows()); }
    double trace() const { return trace_; }
    DensityMatrix normalized() const;

private:
    Eigen::MatrixXcd m_;
    double trace_;
};

// F = [tr sqrt(sqrt(rho) sigma sqrt(rho))]^2. Requires unit trace (1e-9).
double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// D = (1/2) tr |rho - sigma|.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

struct CoherentAmplitude {
    std::complex<double> value;
    std::string mode = "wavepacket";  // spectral label
};

// <beta|gamma> = exp(-|beta|^2/2 - |gamma|^2/2 + conj(beta) gamma).
// Mode labels must match.
std::complex<double> coherent_overlap(const CoherentAmplitude& beta,
                                      const CoherentAmplitude& gamma);

// Overlap of two multimode coherent states with spectral amplitudes u, v:
// exp(-1/2 int |u|^2 - 1/2 int |v|^2 + int conj(u) v).
std::complex<double> multimode_coherent_overlap(
    const std::function<std::complex<double>(double)>& u,
    const std::function<std::complex<double>(double)>& v,
    const Quadrature& q);

}  // namespace kerrgate

#endif
