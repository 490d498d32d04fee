#include "ptband/counterpart.hpp"

#include <cmath>
#include <stdexcept>

namespace ptband {

double counterpart_dispersion(const CounterpartParams& cp, double k) {
    const double c = std::cos(k / 2.0);
    const double stagger = cp.Ve / (2.0 * cp.Je);
    return 2.0 * cp.Je *
           std::sqrt((1.0 - cp.delta_e * cp.delta_e) * c * c +
                     cp.delta_e * cp.delta_e + stagger * stagger);
}

double counterpart_gap(const CounterpartParams& cp) {
    return std::sqrt(4.0 * cp.Je * cp.Je * cp.delta_e * cp.delta_e + cp.Ve * cp.Ve);
}

CounterpartModes counterpart_bloch(const CounterpartParams& cp, double k) {
    const Complex off = -cp.Je * (1.0 - cp.delta_e +
                                  (1.0 + cp.delta_e) * std::exp(Complex(0.0, -k)));
    Eigen::Matrix2cd h;
    h << Complex(-cp.Ve, 0.0), off, std::conj(off), Complex(cp.Ve, 0.0);
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(h);
    CounterpartModes modes;
    modes.eps = solver.eigenvalues()(1); // +eps branch
    modes.lower = solver.eigenvectors().col(0);
    modes.upper = solver.eigenvectors().col(1);
    return modes;
}

CounterpartParams CounterpartFamily::at(double delta_e) const {
    if (delta_e < 0.0 || delta_e > delta_e_max() + 1e-15)
        throw std::invalid_argument("CounterpartFamily::at: delta_e out of range");
    CounterpartParams cp;
    cp.num_cells = num_cells;
    cp.boundary = boundary;
    cp.delta_e = delta_e;
    cp.Je = scale / std::sqrt(1.0 - delta_e * delta_e);
    const double residual = ratio * (1.0 - delta_e * delta_e) - delta_e * delta_e;
    cp.Ve = 2.0 * cp.Je * std::sqrt(std::max(0.0, residual));
    return cp;
}

double CounterpartFamily::delta_e_max() const {
    return std::sqrt(ratio / (1.0 + ratio));
}

CounterpartFamily equivalence_map(const ModelParams& params) {
    params.validate();
    const double half_gamma = params.gamma / (2.0 * params.J);
    const double numerator = params.delta * params.delta - half_gamma * half_gamma;
    if (numerator < 0.0)
        throw NoCounterpartError(
            "equivalence_map: gamma exceeds gamma_c; the matching condition has "
            "no real solution");

    CounterpartFamily family;
    family.num_cells = params.num_cells;
    family.boundary = params.boundary;
    family.ratio = numerator / (1.0 - params.delta * params.delta);
    family.scale = params.J * std::sqrt(1.0 - params.delta * params.delta);
    family.canonical = family.at(family.delta_e_max()); // Ve = 0
    family.canonical.Ve = 0.0;                          // clamp the sqrt residue
    family.staggered = family.at(0.0);                  // delta_e = 0
    return family;
}

} // namespace ptband
