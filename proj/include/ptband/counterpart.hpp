#pragma once

#include "ptband/model.hpp"

namespace ptband {

/// Parameters of the Hermitian comparison chain.
struct CounterpartParams {
    double Je = 1.0;
    double delta_e = 0.0;
    double Ve = 0.0;
    int num_cells = 2;
    Boundary boundary = Boundary::Periodic;
};

/// eps_k = 2 Je sqrt[(1 - delta_e^2) cos^2(k/2) + delta_e^2 + (Ve/2Je)^2].
double counterpart_dispersion(const CounterpartParams& cp, double k);

/// Band gap 2 eps(pi) width: sqrt(4 Je^2 delta_e^2 + Ve^2).
double counterpart_gap(const CounterpartParams& cp);

/// Unitary eigenbasis of the 2x2 sector matrix; (zeta, xi) are the
/// components of the lower-band column, |zeta|^2 + |xi|^2 = 1.
struct CounterpartModes {
    double eps = 0.0;
    Eigen::Vector2cd lower, upper;
};

CounterpartModes counterpart_bloch(const CounterpartParams& cp, double k);

/// The one-parameter family of Hermitian chains sharing the spectrum of an
/// unbroken non-Hermitian chain. The matching condition fixes the gap ratio
///   R = (delta^2 - (gamma/2J)^2) / (1 - delta^2)
/// and the overall scale Je sqrt(1 - delta_e^2) = J sqrt(1 - delta^2)
/// (band-edge matching at k = 0).
struct CounterpartFamily {
    double ratio = 0.0; ///< R
    double scale = 0.0; ///< Je sqrt(1 - delta_e^2)
    int num_cells = 2;
    Boundary boundary = Boundary::Periodic;

    CounterpartParams canonical; ///< Ve = 0 representative
    CounterpartParams staggered; ///< delta_e = 0 representative

    /// Member with the given delta_e in [0, delta_e_max]; Ve >= 0 solves the
    /// matching condition.
    CounterpartParams at(double delta_e) const;
    double delta_e_max() const;
};

/// Throws NoCounterpartError when gamma > gamma_c.
CounterpartFamily equivalence_map(const ModelParams& params);

} // namespace ptband
