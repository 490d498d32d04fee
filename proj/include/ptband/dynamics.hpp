#pragma once

#include <vector>

#include "ptband/algebra.hpp"

namespace ptband {

/// Site amplitudes of the single-particle wavefunction (2N entries).
using StateVector = Vector;

/// <psi|psi> under the plain complex inner product.
double dirac_norm2(const Vector& psi);

/// |psi(t)> = sum_k e^{+i eps_k t} f_k alpha_bar_k + e^{-i eps_k t} g_k beta_bar_k.
/// (H alpha_bar = -eps alpha_bar, so the lower band rotates with +eps.)
Vector evolve_spectral(const ModeDecomposition& decomp,
                       const std::vector<BlochMode>& modes, double t);

/// exp(-i H t), any boundary, any phase.
Matrix propagator(const Matrix& hamiltonian, double t);

/// One-shot exp(-i H t) psi0.
Vector evolve_direct(const Matrix& hamiltonian, const Vector& psi0, double t);

/// Propagates through a time series; reuses one short-time step propagator
/// on uniformly spaced grids instead of re-exponentiating per sample.
class DirectEvolver {
public:
    explicit DirectEvolver(Matrix hamiltonian);

    Vector at(const Vector& psi0, double t) const;
    std::vector<Vector> series(const Vector& psi0, const std::vector<double>& times) const;

    const Matrix& hamiltonian() const { return h_; }

private:
    Matrix h_;
};

/// Closed-form Dirac norm squared:
///   P_D(t) = sum_k (|f_k|^2 + |g_k|^2) sqrt(1 + lambda_k^2)
///          + 2 sum_k lambda_k Im(conj(g_k) f_k e^{2 i eps_k t}),
/// the second sum being the sinusoidal term with phase varphi_k. Unbroken,
/// non-exceptional modes only.
double dirac_norm_closed(const ModeDecomposition& decomp,
                         const std::vector<BlochMode>& modes, double t);

/// Time-independent phase varphi_k of the sinusoidal term, defined where
/// |g_k f_k| > 0 by e^{i varphi_k} = conj(g_k) f_k / |g_k f_k|.
std::vector<double> cross_phases(const ModeDecomposition& decomp);

/// Peak-to-peak bound on the Dirac-norm fluctuation: 4 sum_k lambda_k |g_k f_k|.
double fluctuation_bound(const ModeDecomposition& decomp,
                         const std::vector<BlochMode>& modes);

/// Biorthogonal pairing of psi(t) with the evolved left state:
///   sum_k e^{-i eps_k t} conj(f_k) (alpha_k . psi) + e^{+i eps_k t} conj(g_k) (beta_k . psi).
/// Conserved; equals 1 for a biorthogonally normalized decomposition.
Complex biorthogonal_norm(const Vector& psi_t, const ModeDecomposition& decomp,
                          const std::vector<BlochMode>& modes, double t);

struct NormSeries {
    std::vector<double> times;
    std::vector<double> dirac;         ///< P_D(t)
    std::vector<double> biorthogonal;  ///< P_B(t) / P_B(0)
    Engine engine = Engine::Spectral;
};

/// P_D and P_B over a time grid. Spectral: closed-form P_D plus the pairing
/// on the reconstructed state. Direct: dense propagation of the
/// reconstructed initial state.
NormSeries norm_series(const ModelParams& params, const ModeDecomposition& decomp,
                       const std::vector<BlochMode>& modes,
                       const std::vector<double>& times, Engine engine);

} // namespace ptband
