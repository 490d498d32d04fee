#pragma once

#include <cmath>

#include "ptband/types.hpp"

namespace ptband {

/// Parameters of the dimerized two-band lattice with staggered imaginary
/// potentials. The lattice has 2N sites; with the 1-based site index l,
/// bond (l, l+1) carries hopping -J[1 + (-1)^l delta] and site l the
/// on-site potential i gamma (-1)^l. Internally sites are 0-based.
struct ModelParams {
    double J = 1.0;
    double delta = 0.0;
    double gamma = 0.0;
    int num_cells = 2; ///< N; the lattice has 2N sites
    Boundary boundary = Boundary::Periodic;

    int num_sites() const noexcept { return 2 * num_cells; }

    /// PT-breaking threshold gamma_c = 2 J |delta|.
    double gamma_critical() const noexcept { return 2.0 * J * std::abs(delta); }

    /// The spectrum is fully real iff 4 J^2 delta^2 >= gamma^2.
    bool is_unbroken() const noexcept {
        return 4.0 * J * J * delta * delta >= gamma * gamma;
    }

    /// Throws std::invalid_argument for N < 2, J <= 0, gamma < 0 or
    /// non-finite entries.
    void validate() const;
};

using HamiltonianMatrix = Matrix;

/// Dense single-particle matrix of the non-Hermitian chain/ring.
HamiltonianMatrix build_nonhermitian(const ModelParams& params);

/// Dense matrix of the Hermitian comparison chain: same bond pattern with
/// (Je, delta_e), real staggered potential Ve (-1)^l on the diagonal.
HamiltonianMatrix build_hermitian_counterpart(double Je, double delta_e, double Ve,
                                              int num_cells, Boundary boundary);

/// Cyclic shift by two sites (one unit cell); commutes with the periodic
/// Hamiltonian.
Matrix two_site_shift(int num_cells);

/// Site reflection l -> 2N+1-l, the parity operation of the PT check.
Matrix site_reflection(int num_cells);

/// || P conj(H) P - H ||_inf; zero (to roundoff) for every valid parameter
/// set, both boundaries.
double pt_symmetry_residual(const HamiltonianMatrix& H);

} // namespace ptband
