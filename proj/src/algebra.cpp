#include "ptband/algebra.hpp"

#include <cmath>

namespace ptband {

namespace {

void add_report(CommutatorCheck& check, std::string relation, double k, double kp,
                Complex expected, Complex measured) {
    const double err = std::abs(measured - expected);
    check.reports.push_back(
        {std::move(relation), k, kp, expected, measured, err});
    check.max_abs_error = std::max(check.max_abs_error, err);
}

Complex bilinear(const Vector& row, const Vector& col) {
    return row.transpose() * col;
}

Complex dirac(const Vector& left, const Vector& right) {
    return left.adjoint() * right;
}

} // namespace

CommutatorCheck check_canonical(const std::vector<BlochMode>& modes) {
    CommutatorCheck check;
    for (const auto& a : modes) {
        require_regular(a);
        for (const auto& b : modes) {
            const Complex kron = (&a == &b) ? 1.0 : 0.0;
            add_report(check, "[alpha_k, alpha_bar_k']", a.k, b.k, kron,
                       bilinear(a.alpha, b.alpha_bar));
            add_report(check, "[beta_k, beta_bar_k']", a.k, b.k, kron,
                       bilinear(a.beta, b.beta_bar));
            add_report(check, "[alpha_k, beta_bar_k']", a.k, b.k, 0.0,
                       bilinear(a.alpha, b.beta_bar));
            add_report(check, "[beta_k, alpha_bar_k']", a.k, b.k, 0.0,
                       bilinear(a.beta, b.alpha_bar));
        }
    }
    return check;
}

CommutatorCheck check_canonical(const ModelParams& params) {
    return check_canonical(solve_grid(params));
}

CommutatorCheck check_quasi_canonical(const std::vector<BlochMode>& modes) {
    CommutatorCheck check;
    for (const auto& a : modes) {
        require_regular(a);
        const Complex root = a.quasi_norm();
        const Complex ilambda = Complex(0.0, 1.0) * a.lambda;
        for (const auto& b : modes) {
            const bool same = (&a == &b);
            const Complex kron = same ? 1.0 : 0.0;
            // Left-mode Dirac Gram: [x_k, y_k'^dagger] = sum x_k conj(y_k').
            add_report(check, "[alpha_k, alpha_k'^+]", a.k, b.k, same ? root : kron,
                       bilinear(a.alpha, b.alpha.conjugate()));
            add_report(check, "[beta_k, beta_k'^+]", a.k, b.k, same ? root : kron,
                       bilinear(a.beta, b.beta.conjugate()));
            add_report(check, "[beta_k, alpha_k'^+]", a.k, b.k, same ? ilambda : kron,
                       bilinear(a.beta, b.alpha.conjugate()));
            add_report(check, "[alpha_k, beta_k'^+]", a.k, b.k, same ? -ilambda : kron,
                       bilinear(a.alpha, b.beta.conjugate()));
            // Right-mode Dirac Gram: [x_k^+, y_k'] = <x_k, y_k'>.
            add_report(check, "[alpha_bar_k^+, alpha_bar_k']", a.k, b.k,
                       same ? root : kron, dirac(a.alpha_bar, b.alpha_bar));
            add_report(check, "[beta_bar_k^+, beta_bar_k']", a.k, b.k,
                       same ? root : kron, dirac(a.beta_bar, b.beta_bar));
            add_report(check, "[alpha_bar_k^+, beta_bar_k']", a.k, b.k,
                       same ? ilambda : kron, dirac(a.alpha_bar, b.beta_bar));
            add_report(check, "[beta_bar_k^+, alpha_bar_k']", a.k, b.k,
                       same ? -ilambda : kron, dirac(a.beta_bar, b.alpha_bar));
        }
    }
    return check;
}

CommutatorCheck check_quasi_canonical(const ModelParams& params) {
    return check_quasi_canonical(solve_grid(params));
}

double ModeDecomposition::biorthogonal_weight() const {
    return f.squaredNorm() + g.squaredNorm();
}

ModeDecomposition decompose(const Vector& state, const std::vector<BlochMode>& modes) {
    ModeDecomposition decomp;
    const int count = static_cast<int>(modes.size());
    decomp.ks.resize(count);
    decomp.f.resize(count);
    decomp.g.resize(count);
    for (int i = 0; i < count; ++i) {
        const BlochMode& mode = require_regular(modes[i]);
        decomp.ks[i] = mode.k;
        decomp.f(i) = bilinear(mode.alpha, state);
        decomp.g(i) = bilinear(mode.beta, state);
    }
    return decomp;
}

Vector reconstruct(const ModeDecomposition& decomp, const std::vector<BlochMode>& modes) {
    Vector state = Vector::Zero(modes.front().alpha_bar.size());
    for (std::size_t i = 0; i < modes.size(); ++i) {
        const BlochMode& mode = require_regular(modes[i]);
        state += decomp.f(i) * mode.alpha_bar + decomp.g(i) * mode.beta_bar;
    }
    return state;
}

ModeDecomposition normalized_biorthogonal(ModeDecomposition decomp) {
    const double weight = decomp.biorthogonal_weight();
    if (weight <= 0.0)
        throw std::invalid_argument("normalized_biorthogonal: zero decomposition");
    const double scale = 1.0 / std::sqrt(weight);
    decomp.f *= scale;
    decomp.g *= scale;
    return decomp;
}

double completeness_residual(const std::vector<BlochMode>& modes) {
    const auto dim = modes.front().alpha_bar.size();
    Matrix sum = Matrix::Zero(dim, dim);
    for (const auto& mode : modes) {
        require_regular(mode);
        sum += mode.alpha_bar * mode.alpha.transpose();
        sum += mode.beta_bar * mode.beta.transpose();
    }
    return (sum - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
}

} // namespace ptband
