#pragma once

// Shared test oracles: dense diagonalization, random parameter generators
// and small numeric helpers. Everything here is independent of the analytic
// solution paths it is used to check.

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "ptband/model.hpp"

namespace ptband::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline ModelParams random_unbroken(Rng& rng, int min_cells = 4, int max_cells = 12,
                                   double gamma_cap = 0.9) {
    ModelParams p;
    p.J = uniform(rng, 0.5, 2.0);
    p.delta = uniform(rng, 0.05, 0.5);
    p.gamma = uniform(rng, 0.0, gamma_cap) * p.gamma_critical();
    p.num_cells = std::uniform_int_distribution<int>(min_cells, max_cells)(rng);
    return p;
}

inline Vector random_state(Rng& rng, int dim) {
    Vector psi(dim);
    for (int i = 0; i < dim; ++i)
        psi(i) = Complex(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
    psi /= psi.norm();
    return psi;
}

inline std::vector<Complex> dense_eigenvalues(const Matrix& h) {
    const Eigen::ComplexEigenSolver<Matrix> solver(h);
    std::vector<Complex> values(solver.eigenvalues().data(),
                                solver.eigenvalues().data() +
                                    solver.eigenvalues().size());
    std::sort(values.begin(), values.end(), [](Complex a, Complex b) {
        if (a.real() != b.real())
            return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return values;
}

// Greedy nearest-neighbor matching; immune to sort-order flips between
// near-degenerate values (e.g. conjugate pairs whose real parts are
// roundoff-sized).
inline double multiset_distance(const std::vector<Complex>& a, std::vector<Complex> b) {
    double worst = 0.0;
    for (const Complex& value : a) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < b.size(); ++i)
            if (std::abs(b[i] - value) < std::abs(b[best] - value))
                best = i;
        worst = std::max(worst, std::abs(b[best] - value));
        b.erase(b.begin() + best);
    }
    return worst;
}

} // namespace ptband::testing
