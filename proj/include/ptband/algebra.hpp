#pragma once

#include <string>
#include <vector>

#include "ptband/bloch.hpp"

namespace ptband {

/// One evaluated commutation relation. In the single-particle representation
/// every relation with matrix content is an inner product of mode vectors:
/// bilinear (row . col) for the canonical set, Dirac (conjugated) for the
/// quasi-canonical set. Relations pairing two annihilators or two creators
/// vanish identically by the canonical A/B algebra and carry no matrix
/// element to test.
struct CommutatorReport {
    std::string relation;
    double k = 0.0, kp = 0.0;
    Complex expected{};
    Complex measured{};
    double abs_error = 0.0;
};

struct CommutatorCheck {
    std::vector<CommutatorReport> reports;
    double max_abs_error = 0.0;
};

/// The canonical relations: [alpha_k, alpha_bar_k'] = [beta_k, beta_bar_k']
/// = delta_kk', all mixed pairings zero.
CommutatorCheck check_canonical(const std::vector<BlochMode>& modes);
CommutatorCheck check_canonical(const ModelParams& params);

/// The quasi-canonical relations: same-side Dirac Grams equal
/// sqrt(1+lambda^2) delta_kk', the mixed-band same-k values +-i lambda_k,
/// and every cross-momentum Dirac product zero.
CommutatorCheck check_quasi_canonical(const std::vector<BlochMode>& modes);
CommutatorCheck check_quasi_canonical(const ModelParams& params);

/// Biorthogonal expansion coefficients of a state: f_k on the lower band
/// (alpha_bar), g_k on the upper (beta_bar).
struct ModeDecomposition {
    std::vector<double> ks;
    Vector f, g;

    /// sum |f|^2 + |g|^2: the biorthogonal norm squared of the state.
    double biorthogonal_weight() const;
};

/// f_k = alpha_k . state, g_k = beta_k . state (bilinear projections).
/// Throws ExceptionalModeError if any grid mode is flagged.
ModeDecomposition decompose(const Vector& state, const std::vector<BlochMode>& modes);

/// sum_k f_k alpha_bar_k + g_k beta_bar_k.
Vector reconstruct(const ModeDecomposition& decomp, const std::vector<BlochMode>& modes);

/// Rescales so that sum |f|^2 + |g|^2 = 1.
ModeDecomposition normalized_biorthogonal(ModeDecomposition decomp);

/// || sum_k (alpha_bar_k alpha_k + beta_bar_k beta_k) - I ||_max.
double completeness_residual(const std::vector<BlochMode>& modes);

} // namespace ptband
