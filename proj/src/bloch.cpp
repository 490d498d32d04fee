#include "ptband/bloch.hpp"

#include <cmath>
#include <stdexcept>

namespace ptband {

std::vector<double> momentum_grid(int num_cells) {
    std::vector<double> ks(num_cells);
    for (int n = 0; n < num_cells; ++n)
        ks[n] = 2.0 * pi * n / num_cells;
    return ks;
}

double bloch_phase(double k, double delta) {
    // Reduce to [0, 2 pi); the phase winds by 2 pi per period so the
    // half-angle factors flip sign per winding.
    const double winding = std::floor(k / (2.0 * pi));
    const double kr = k - 2.0 * pi * winding;
    const double base =
        kr / 2.0 - std::atan2(-delta * std::sin(kr / 2.0), std::cos(kr / 2.0));
    return base + 2.0 * pi * winding;
}

namespace {

double bloch_radius2(const ModelParams& p, double k) {
    const double c = std::cos(k / 2.0);
    return (1.0 - p.delta * p.delta) * c * c + p.delta * p.delta;
}

bool on_grid(const ModelParams& p, double k) {
    const double steps = k * p.num_cells / (2.0 * pi);
    return std::abs(steps - std::round(steps)) < 1e-9;
}

} // namespace

Complex dispersion(const ModelParams& params, double k) {
    const double arg =
        4.0 * params.J * params.J * bloch_radius2(params, k) - params.gamma * params.gamma;
    return std::sqrt(Complex(arg, 0.0));
}

double dispersion_derivative(const ModelParams& params, double k, int order, double h) {
    if (order != 1 && order != 2)
        throw std::invalid_argument("dispersion_derivative: order must be 1 or 2");
    const auto eps = [&](double q) { return dispersion(params, q).real(); };
    const auto stencil = [&](double step) {
        if (order == 1)
            return (eps(k + step) - eps(k - step)) / (2.0 * step);
        return (eps(k + step) - 2.0 * eps(k) + eps(k - step)) / (step * step);
    };
    // One Richardson step on the O(h^2) central difference.
    const double coarse = stencil(h);
    const double fine = stencil(h / 2.0);
    return (4.0 * fine - coarse) / 3.0;
}

Eigen::Matrix2cd bloch_matrix(const ModelParams& params, double k) {
    const Complex off =
        -params.J * (1.0 - params.delta + (1.0 + params.delta) * std::exp(Complex(0.0, -k)));
    const Complex off_rev =
        -params.J * (1.0 - params.delta + (1.0 + params.delta) * std::exp(Complex(0.0, k)));
    Eigen::Matrix2cd h;
    h << Complex(0.0, -params.gamma), off, off_rev, Complex(0.0, params.gamma);
    return h;
}

BlochMode solve_bloch(const ModelParams& params, double k) {
    params.validate();
    if (params.boundary != Boundary::Periodic)
        throw std::invalid_argument("solve_bloch: requires the periodic boundary");
    if (!on_grid(params, k))
        throw std::invalid_argument("solve_bloch: k is not a grid momentum");

    BlochMode mode;
    mode.k = k;
    mode.eps = dispersion(params, k);
    if (std::abs(mode.eps) < exceptional_tol * params.J) {
        mode.is_exceptional = true;
        return mode;
    }
    mode.lambda = params.gamma / mode.eps;
    mode.phi = bloch_phase(k, params.delta);

    const Complex cos_theta = std::sqrt((1.0 + Complex(0.0, 1.0) * mode.lambda) / 2.0);
    Complex sin_theta = std::sqrt((1.0 - Complex(0.0, 1.0) * mode.lambda) / 2.0);
    const Complex half_phase = std::exp(Complex(0.0, mode.phi / 2.0));

    const Eigen::Matrix2cd hk = bloch_matrix(params, k);
    const double scale = std::abs(mode.eps) + hk.cwiseAbs().maxCoeff();

    // The principal square roots satisfy the eigen-equations in the unbroken
    // phase; across branch cuts (broken phase) the sign of sin(theta) may
    // need a flip. Validate and flip once if required.
    for (int attempt = 0; attempt < 2; ++attempt) {
        mode.mu = cos_theta * half_phase;
        mode.mu_bar = cos_theta / half_phase;
        mode.nu = sin_theta / half_phase;
        mode.nu_bar = sin_theta * half_phase;

        const Eigen::Vector2cd lower(mode.mu_bar, mode.nu_bar);
        const Eigen::Vector2cd upper(-mode.nu, mode.mu);
        const double residual = (hk * lower + mode.eps * lower).norm() +
                                (hk * upper - mode.eps * upper).norm();
        if (residual <= 1e-9 * scale)
            break;
        if (attempt == 1)
            throw std::runtime_error("solve_bloch: eigenvector validation failed");
        sin_theta = -sin_theta;
    }

    const int n_sites = params.num_sites();
    const double norm = 1.0 / std::sqrt(static_cast<double>(params.num_cells));
    mode.alpha_bar.resize(n_sites);
    mode.beta_bar.resize(n_sites);
    mode.alpha.resize(n_sites);
    mode.beta.resize(n_sites);
    for (int m = 0; m < n_sites; ++m) {
        const int cell = m / 2 + 1; // 1-based cell index l
        const Complex fwd = std::exp(Complex(0.0, k * cell)) * norm;
        const Complex bwd = std::exp(Complex(0.0, -k * cell)) * norm;
        if (m % 2 == 0) { // 1-based odd site 2l-1 (A sublattice)
            mode.alpha_bar(m) = mode.mu_bar * fwd;
            mode.beta_bar(m) = -mode.nu * fwd;
            mode.alpha(m) = mode.mu * bwd;
            mode.beta(m) = -mode.nu_bar * bwd;
        } else { // 1-based even site 2l (B sublattice)
            mode.alpha_bar(m) = mode.nu_bar * fwd;
            mode.beta_bar(m) = mode.mu * fwd;
            mode.alpha(m) = mode.nu * bwd;
            mode.beta(m) = mode.mu_bar * bwd;
        }
    }
    return mode;
}

std::vector<BlochMode> solve_grid(const ModelParams& params) {
    std::vector<BlochMode> modes;
    modes.reserve(params.num_cells);
    for (double k : momentum_grid(params.num_cells))
        modes.push_back(solve_bloch(params, k));
    return modes;
}

const BlochMode& require_regular(const BlochMode& mode) {
    if (mode.is_exceptional)
        throw ExceptionalModeError(mode.k, std::abs(mode.eps));
    return mode;
}

SpectrumSummary spectrum_summary(const ModelParams& params) {
    params.validate();
    SpectrumSummary summary;
    const double arg =
        4.0 * params.J * params.J * params.delta * params.delta - params.gamma * params.gamma;
    summary.gap = std::sqrt(Complex(arg, 0.0));
    summary.gamma_c = params.gamma_critical();
    for (double k : momentum_grid(params.num_cells)) {
        const Complex eps = dispersion(params, k);
        if (std::abs(eps.imag()) > 1e-12 * params.J)
            summary.broken_ks.push_back(k);
        if (std::abs(eps) < exceptional_tol * params.J)
            summary.exceptional_ks.push_back(k);
    }
    return summary;
}

DefectivenessReport verify_jordan_block(const ModelParams& params, double k) {
    params.validate();
    DefectivenessReport report;
    report.k = k;
    const Eigen::Matrix2cd hk = bloch_matrix(params, k);
    const Eigen::ComplexEigenSolver<Eigen::Matrix2cd> solver(hk);
    report.eigenvalues[0] = solver.eigenvalues()(0);
    report.eigenvalues[1] = solver.eigenvalues()(1);

    // A defective pair splits by O(sqrt(roundoff)) under perturbation, so the
    // degeneracy tolerance must sit well above that yet far below any
    // physical gap (the near-critical runs keep |2 eps_pi| >= 1e-4 J).
    const double scale = std::max(hk.cwiseAbs().maxCoeff(), params.J);
    const double tol = 1e-6 * scale;
    report.degenerate = std::abs(report.eigenvalues[0] - report.eigenvalues[1]) < tol;
    if (report.degenerate) {
        // Geometric multiplicity = dim ker(H - eps I) via singular values.
        const Complex eps = (report.eigenvalues[0] + report.eigenvalues[1]) / 2.0;
        const Eigen::Matrix2cd shifted = hk - eps * Eigen::Matrix2cd::Identity();
        const Eigen::JacobiSVD<Eigen::Matrix2cd> svd(shifted);
        int rank = 0;
        for (int i = 0; i < 2; ++i)
            if (svd.singularValues()(i) > tol)
                ++rank;
        report.geometric_multiplicity = 2 - rank;
    } else {
        report.geometric_multiplicity = 2;
    }
    report.defective = report.degenerate && report.geometric_multiplicity < 2;
    return report;
}

double spectral_condition(const std::vector<BlochMode>& modes) {
    double worst = 0.0;
    for (const auto& mode : modes)
        if (!mode.is_exceptional)
            worst = std::max(worst, mode.quasi_norm());
    return worst;
}

} // namespace ptband
