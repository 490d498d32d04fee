#include "ptband/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "ptband/expm.hpp"

namespace ptband {

double dirac_norm2(const Vector& psi) {
    return psi.squaredNorm();
}

Vector evolve_spectral(const ModeDecomposition& decomp,
                       const std::vector<BlochMode>& modes, double t) {
    Vector state = Vector::Zero(modes.front().alpha_bar.size());
    for (std::size_t i = 0; i < modes.size(); ++i) {
        const BlochMode& mode = require_regular(modes[i]);
        const Complex rot = std::exp(Complex(0.0, 1.0) * mode.eps * t);
        state += (rot * decomp.f(i)) * mode.alpha_bar;
        state += (decomp.g(i) / rot) * mode.beta_bar;
    }
    return state;
}

Matrix propagator(const Matrix& hamiltonian, double t) {
    return matrix_exponential(Complex(0.0, -t) * hamiltonian);
}

Vector evolve_direct(const Matrix& hamiltonian, const Vector& psi0, double t) {
    if (t == 0.0)
        return psi0;
    return propagator(hamiltonian, t) * psi0;
}

DirectEvolver::DirectEvolver(Matrix hamiltonian) : h_(std::move(hamiltonian)) {
    if (h_.rows() != h_.cols())
        throw std::invalid_argument("DirectEvolver: matrix must be square");
}

Vector DirectEvolver::at(const Vector& psi0, double t) const {
    return evolve_direct(h_, psi0, t);
}

std::vector<Vector> DirectEvolver::series(const Vector& psi0,
                                          const std::vector<double>& times) const {
    std::vector<Vector> states;
    states.reserve(times.size());
    if (times.empty())
        return states;

    bool uniform_from_zero = times.size() >= 2;
    const double dt = times.size() >= 2 ? times[1] - times[0] : 0.0;
    for (std::size_t i = 0; i + 1 < times.size() && uniform_from_zero; ++i) {
        if (std::abs((times[i + 1] - times[i]) - dt) > 1e-9 * std::max(1.0, std::abs(dt)))
            uniform_from_zero = false;
    }
    if (!uniform_from_zero || dt <= 0.0) {
        for (double t : times)
            states.push_back(at(psi0, t));
        return states;
    }

    const Matrix step = propagator(h_, dt);
    Vector psi = times.front() == 0.0 ? psi0 : at(psi0, times.front());
    states.push_back(psi);
    for (std::size_t i = 1; i < times.size(); ++i) {
        psi = step * psi;
        states.push_back(psi);
    }
    return states;
}

double dirac_norm_closed(const ModeDecomposition& decomp,
                         const std::vector<BlochMode>& modes, double t) {
    double steady = 0.0;
    double oscillating = 0.0;
    for (std::size_t i = 0; i < modes.size(); ++i) {
        const BlochMode& mode = require_regular(modes[i]);
        const double lambda = mode.lambda.real();
        const double eps = mode.eps.real();
        steady += (std::norm(decomp.f(i)) + std::norm(decomp.g(i))) * mode.quasi_norm();
        const Complex cross = std::conj(decomp.g(i)) * decomp.f(i) *
                              std::exp(Complex(0.0, 2.0 * eps * t));
        oscillating += 2.0 * lambda * cross.imag();
    }
    return steady + oscillating;
}

std::vector<double> cross_phases(const ModeDecomposition& decomp) {
    std::vector<double> phases(decomp.ks.size(), 0.0);
    for (std::size_t i = 0; i < phases.size(); ++i) {
        const Complex cross = std::conj(decomp.g(i)) * decomp.f(i);
        phases[i] = std::abs(cross) > 0.0 ? std::arg(cross) : 0.0;
    }
    return phases;
}

double fluctuation_bound(const ModeDecomposition& decomp,
                         const std::vector<BlochMode>& modes) {
    double bound = 0.0;
    for (std::size_t i = 0; i < modes.size(); ++i) {
        const BlochMode& mode = require_regular(modes[i]);
        bound += 4.0 * std::abs(mode.lambda.real()) *
                 std::abs(decomp.g(i) * decomp.f(i));
    }
    return bound;
}

Complex biorthogonal_norm(const Vector& psi_t, const ModeDecomposition& decomp,
                          const std::vector<BlochMode>& modes, double t) {
    Complex total = 0.0;
    for (std::size_t i = 0; i < modes.size(); ++i) {
        const BlochMode& mode = require_regular(modes[i]);
        const Complex rot = std::exp(Complex(0.0, 1.0) * mode.eps * t);
        const Complex f_t = mode.alpha.transpose() * psi_t;
        const Complex g_t = mode.beta.transpose() * psi_t;
        total += std::conj(decomp.f(i)) * f_t / rot;
        total += std::conj(decomp.g(i)) * g_t * rot;
    }
    return total;
}

NormSeries norm_series(const ModelParams& params, const ModeDecomposition& decomp,
                       const std::vector<BlochMode>& modes,
                       const std::vector<double>& times, Engine engine) {
    NormSeries series;
    series.times = times;
    series.engine = engine;
    series.dirac.reserve(times.size());
    series.biorthogonal.reserve(times.size());

    const double pb0 = decomp.biorthogonal_weight();
    if (pb0 <= 0.0)
        throw std::invalid_argument("norm_series: empty decomposition");

    if (engine == Engine::Spectral) {
        for (double t : times) {
            series.dirac.push_back(dirac_norm_closed(decomp, modes, t));
            const Vector psi = evolve_spectral(decomp, modes, t);
            series.biorthogonal.push_back(
                biorthogonal_norm(psi, decomp, modes, t).real() / pb0);
        }
        return series;
    }

    const DirectEvolver evolver(build_nonhermitian(params));
    const Vector psi0 = reconstruct(decomp, modes);
    const auto states = evolver.series(psi0, times);
    for (std::size_t i = 0; i < times.size(); ++i) {
        series.dirac.push_back(dirac_norm2(states[i]));
        series.biorthogonal.push_back(
            biorthogonal_norm(states[i], decomp, modes, times[i]).real() / pb0);
    }
    return series;
}

} // namespace ptband
