#include "ptband/model.hpp"

#include <cmath>
#include <stdexcept>

namespace ptband {

std::string to_string(Boundary b) {
    return b == Boundary::Periodic ? "periodic" : "open";
}

std::string to_string(Engine e) {
    return e == Engine::Spectral ? "spectral" : "direct";
}

ExceptionalModeError::ExceptionalModeError(double k, double eps_abs)
    : std::runtime_error("exceptional mode at k = " + std::to_string(k) +
                         " (|eps| = " + std::to_string(eps_abs) + ")"),
      k_(k) {}

void ModelParams::validate() const {
    if (num_cells < 2)
        throw std::invalid_argument("ModelParams: N must be >= 2");
    if (!(J > 0.0) || !std::isfinite(J))
        throw std::invalid_argument("ModelParams: J must be positive and finite");
    if (!(gamma >= 0.0) || !std::isfinite(gamma))
        throw std::invalid_argument("ModelParams: gamma must be >= 0 and finite");
    if (!std::isfinite(delta))
        throw std::invalid_argument("ModelParams: delta must be finite");
}

namespace {

// Bond (l, l+1) carries -J[1 + (-1)^l delta]; site l the potential
// i gamma (-1)^l. l is the 1-based site index, m = l - 1 the storage index.
Matrix build_chain(double J, double delta, Complex staggered, int num_cells,
                   Boundary boundary) {
    const int n = 2 * num_cells;
    Matrix h = Matrix::Zero(n, n);
    for (int m = 0; m < n; ++m) {
        const double parity = (m % 2 == 0) ? -1.0 : 1.0; // (-1)^(m+1)
        h(m, m) = parity * staggered;
        if (m + 1 < n || boundary == Boundary::Periodic) {
            const int next = (m + 1) % n;
            const Complex hop = -J * (1.0 + parity * delta);
            h(m, next) += hop;
            h(next, m) += hop;
        }
    }
    return h;
}

} // namespace

HamiltonianMatrix build_nonhermitian(const ModelParams& params) {
    params.validate();
    return build_chain(params.J, params.delta, Complex(0.0, params.gamma),
                       params.num_cells, params.boundary);
}

HamiltonianMatrix build_hermitian_counterpart(double Je, double delta_e, double Ve,
                                              int num_cells, Boundary boundary) {
    if (num_cells < 2)
        throw std::invalid_argument("build_hermitian_counterpart: N must be >= 2");
    if (!std::isfinite(Je) || !std::isfinite(delta_e) || !std::isfinite(Ve))
        throw std::invalid_argument("build_hermitian_counterpart: non-finite parameter");
    return build_chain(Je, delta_e, Complex(Ve, 0.0), num_cells, boundary);
}

Matrix two_site_shift(int num_cells) {
    const int n = 2 * num_cells;
    Matrix s = Matrix::Zero(n, n);
    for (int m = 0; m < n; ++m)
        s((m + 2) % n, m) = 1.0;
    return s;
}

Matrix site_reflection(int num_cells) {
    const int n = 2 * num_cells;
    Matrix p = Matrix::Zero(n, n);
    for (int m = 0; m < n; ++m)
        p(n - 1 - m, m) = 1.0;
    return p;
}

double pt_symmetry_residual(const HamiltonianMatrix& h) {
    const int cells = static_cast<int>(h.rows()) / 2;
    const Matrix p = site_reflection(cells);
    return (p * h.conjugate() * p - h).cwiseAbs().maxCoeff();
}

} // namespace ptband
