#include "kerrgate/hilbert.hpp"

#include <cmath>
#include <stdexcept>

namespace kerrgate {

namespace {

constexpr int kMaxDim = 32;
constexpr double kHermTol = 1e-12;
constexpr double kEigTol = 1e-10;

// Hermitian square root with eigenvalue clamping at zero. Drift below
// -kEigTol is treated as a genuinely non-PSD input.
Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    Eigen::VectorXd ev = es.eigenvalues();
    for (int i = 0; i < ev.size(); ++i) {
        if (ev[i] < -kEigTol) throw std::domain_error("matrix is not positive semidefinite");
        ev[i] = std::sqrt(std::max(ev[i], 0.0));
    }
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

void check_pair(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim()) throw std::domain_error("dimension mismatch");
    if (std::abs(a.trace() - 1.0) > 1e-9 || std::abs(b.trace() - 1.0) > 1e-9)
        throw std::domain_error("density matrices must be normalized to unit trace");
}

}  // namespace

DensityMatrix::DensityMatrix(const Eigen::MatrixXcd& m) : m_(m) {
    if (m.rows() != m.cols()) throw std::domain_error("density matrix must be square");
    if (m.rows() < 1 || m.rows() > kMaxDim)
        throw std::domain_error("density matrix dimension out of range");
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermTol * scale)
        throw std::domain_error("density matrix is not Hermitian");
    m_ = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_);
    Eigen::VectorXd ev = es.eigenvalues();
    for (int i = 0; i < ev.size(); ++i) {
        if (ev[i] < -kEigTol) throw std::domain_error("density matrix has a negative eigenvalue");
        ev[i] = std::max(ev[i], 0.0);
    }
    m_ = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
    trace_ = m_.trace().real();
    if (!(trace_ > 0.0) || trace_ > m.rows() + 1e-9)
        throw std::domain_error("density matrix trace out of range");
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
    const double n2 = psi.squaredNorm();
    if (!(n2 > 0.0)) throw std::domain_error("cannot form a state from the zero vector");
    Eigen::VectorXcd v = psi / std::sqrt(n2);
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::normalized() const {
    return DensityMatrix(m_ / trace_);
}

double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
    check_pair(rho, sigma);
    const Eigen::MatrixXcd sr = psd_sqrt(rho.matrix());
    const Eigen::MatrixXcd inner = sr * sigma.matrix() * sr;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (inner + inner.adjoint()));
    // drop eigenvalues at round-off scale: sqrt turns 1e-16 noise into 1e-8
    const double cutoff = 64.0 * 2.220446049250313e-16 *
                          std::max(es.eigenvalues().cwiseAbs().maxCoeff(), 0.0);
    double root_sum = 0.0;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()[i] > cutoff) root_sum += std::sqrt(es.eigenvalues()[i]);
    const double f = root_sum * root_sum;
    return std::min(f, 1.0);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
    check_pair(rho, sigma);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix() - sigma.matrix());
    double d = 0.0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) d += std::abs(es.eigenvalues()[i]);
    return std::min(0.5 * d, 1.0);
}

std::complex<double> coherent_overlap(const CoherentAmplitude& beta,
                                      const CoherentAmplitude& gamma) {
    if (beta.mode != gamma.mode)
        throw std::domain_error("coherent_overlap: mode mismatch ('" + beta.mode + "' vs '" +
                                gamma.mode + "')");
    return std::exp(-0.5 * std::norm(beta.value) - 0.5 * std::norm(gamma.value) +
                    std::conj(beta.value) * gamma.value);
}

std::complex<double> multimode_coherent_overlap(
    const std::function<std::complex<double>(double)>& u,
    const std::function<std::complex<double>(double)>& v, const Quadrature& q) {
    const std::complex<double> nu =
        integrate(q, [&](double w) { return std::complex<double>(std::norm(u(w)), 0.0); });
    const std::complex<double> nv =
        integrate(q, [&](double w) { return std::complex<double>(std::norm(v(w)), 0.0); });
    const std::complex<double> cross = integrate(q, [&](double w) { return std::conj(u(w)) * v(w); });
    return std::exp(-0.5 * nu - 0.5 * nv + cross);
}

}  // namespace kerrgate
