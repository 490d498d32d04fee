#pragma once

#include <vector>

#include "ptband/dynamics.hpp"

namespace ptband {

/// Gaussian packet e^{-alpha^2 (l - N_A)^2 / 2} e^{i k0 l}, centered at site
/// N_A (1-based), central momentum k0 in [-pi, pi].
struct WavePacketSpec {
    double alpha = 0.1;
    double k0 = 0.0;
    int center_site = 1; ///< N_A
};

/// Normalization factor Omega_1 = sum_l envelope^2. On the ring the envelope
/// (and the momentum phase) use the minimal-image displacement from N_A.
double packet_normalization(const WavePacketSpec& spec, int num_cells, Boundary boundary);

/// Prefactor Lambda = e^{i N_A k0} sqrt(pi / (4 alpha^2 N Omega_1)) of the
/// momentum-space form.
Complex packet_prefactor(const WavePacketSpec& spec, int num_cells, Boundary boundary);

/// Dirac-normalized packet state. Rejects alpha <= 0.
Vector build_gaussian(const WavePacketSpec& spec, int num_cells,
                      Boundary boundary = Boundary::Periodic);

struct EtaCoefficients {
    Complex plus{};  ///< lower-band weight
    Complex minus{}; ///< upper-band weight; eta^-_k = -conj(eta^+_{2pi-k})
};

/// eta_k^{+-} = +-e^{i phi/2} e^{-i k/2} sqrt(1 +- i lambda) + e^{-i phi/2} sqrt(1 -+ i lambda),
/// evaluated on the winding sheet of k (same convention as solve_bloch).
EtaCoefficients eta_coefficients(const ModelParams& params, double k);

/// Analytic band decomposition of the packet:
///   f_k = Lambda gauss(k - 2 k0) e^{-i N_A k/2} eta_k^+   (g_k with eta^-),
/// each grid momentum evaluated on the sheet nearest 2 k0 and mapped back to
/// the grid-mode convention. Agrees with decompose(build_gaussian(...)) up
/// to the continuum approximation of the Gaussian sum.
ModeDecomposition packet_decomposition(const WavePacketSpec& spec, const ModelParams& params);

/// J_e = J sqrt(1 - delta^2), the hopping of the equivalent uniform ring.
double effective_hopping(const ModelParams& params);

/// T_rev = 2 N^2 / (pi J_e), from the curvature of the band bottom.
double revival_time(const ModelParams& params);

struct CirclingResult {
    double period = 0.0;   ///< T_cir = N / J_e
    double velocity = 0.0; ///< group velocity J_e at the linear point
};

CirclingResult circling_period(const ModelParams& params);

/// Dirac-weighted center of a state, in 1-based site units. Circular mean
/// on the ring, plain mean on the open chain.
double packet_center(const Vector& psi, Boundary boundary);

/// Dirac-weighted spread in sites (circular standard deviation on the ring).
double packet_width(const Vector& psi, Boundary boundary);

/// |<a|b>|^2 / (|a|^2 |b|^2).
double fidelity(const Vector& a, const Vector& b);

struct PacketObservables {
    std::vector<double> times, center, width, fidelity;
};

/// Center/width/revival-fidelity series; fidelity is taken against the first
/// state of the series.
PacketObservables packet_metrics(const std::vector<Vector>& states,
                                 const std::vector<double>& times, Boundary boundary);

} // namespace ptband
