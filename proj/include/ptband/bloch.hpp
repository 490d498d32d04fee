#pragma once

#include <vector>

#include "ptband/model.hpp"
#include "ptband/types.hpp"

namespace ptband {

/// |eps_k| below this (in units of J) flags a mode as exceptional. Chosen
/// well under the smallest gap any supported run operates at (the near-EP
/// configurations still have |eps_pi| ~ 6e-5 J).
inline constexpr double exceptional_tol = 1e-8;

/// Analytic solution of one momentum sector: band energy, transformation
/// coefficients and the left/right mode vectors in site space.
///
/// Sign conventions: H alpha_bar = -eps alpha_bar, H beta_bar = +eps beta_bar.
/// The left rows pair bilinearly (no conjugation): alpha . alpha_bar = 1,
/// alpha . beta_bar = 0.
struct BlochMode {
    double k = 0.0;
    Complex eps{};    ///< band energy; real >= 0 in the unbroken phase
    Complex lambda{}; ///< gamma / eps
    double phi = 0.0; ///< phase of the off-diagonal Bloch element
    Complex mu{}, mu_bar{}, nu{}, nu_bar{};
    Vector alpha_bar, beta_bar; ///< right modes (columns), 2N entries
    Vector alpha, beta;         ///< left modes (rows, stored as vectors)
    bool is_exceptional = false;

    /// sqrt(1 + lambda^2): the Dirac norm squared of each mode vector.
    double quasi_norm() const { return std::sqrt(std::abs(1.0 + lambda * lambda)); }
};

/// k_n = 2 pi n / N, n = 0..N-1.
std::vector<double> momentum_grid(int num_cells);

/// Phase phi_k of the off-diagonal Bloch element, continued smoothly over
/// winding: phi(k + 2 pi m) = phi(k) + 2 pi m. On [0, 2ated pi) it equals the
/// piecewise k/2 + atan(delta tan(k/2)) (+ pi for k >= pi) form.
double bloch_phase(double k, double delta);

/// Band energy eps_k = 2J sqrt[(1-delta^2) cos^2(k/2) + delta^2 - (gamma/2J)^2].
Complex dispersion(const ModelParams& params, double k);

/// d^n eps/dk^n by central differences with one Richardson step (n = 1, 2).
double dispersion_derivative(const ModelParams& params, double k, int order,
                             double h = 1e-3);

/// The 2x2 momentum-sector matrix in the (A_k, B_k) basis.
Eigen::Matrix2cd bloch_matrix(const ModelParams& params, double k);

/// Solves one momentum sector. k must be a grid momentum up to 2 pi winding
/// (winding selects the sheet of the half-angle phases; mode vectors flip
/// sign per winding). Exceptional sectors come back flagged with empty mode
/// vectors. Requires the periodic boundary.
BlochMode solve_bloch(const ModelParams& params, double k);

/// All N grid modes.
std::vector<BlochMode> solve_grid(const ModelParams& params);

/// Throws ExceptionalModeError if the mode is flagged.
const BlochMode& require_regular(const BlochMode& mode);

struct SpectrumSummary {
    Complex gap{};   ///< sqrt(4 J^2 delta^2 - gamma^2); imaginary when broken
    double gamma_c = 0.0;
    std::vector<double> broken_ks;      ///< Im eps_k != 0 beyond tolerance
    std::vector<double> exceptional_ks; ///< |eps_k| < exceptional_tol * J
};

SpectrumSummary spectrum_summary(const ModelParams& params);

/// Defectiveness of the 2x2 sector matrix: at gamma = gamma_c, k = pi the
/// doubly degenerate eigenvalue 0 has a rank-one eigenspace (Jordan block).
struct DefectivenessReport {
    double k = 0.0;
    Complex eigenvalues[2]{};
    bool degenerate = false;
    int geometric_multiplicity = 2;
    bool defective = false;
};

DefectivenessReport verify_jordan_block(const ModelParams& params, double k = pi);

/// max_k sqrt(1 + lambda_k^2): conditioning of the biorthogonal basis;
/// large values amplify roundoff in spectral-path results.
double spectral_condition(const std::vector<BlochMode>& modes);

} // namespace ptband
