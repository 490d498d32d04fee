#include "ptband/wavepacket.hpp"

#include <cmath>
#include <stdexcept>

namespace ptband {

namespace {

// Displacement of 1-based site l from the packet center: minimal image on
// the ring, plain difference on the open chain.
double displacement(int site, int center, int n_sites, Boundary boundary) {
    const int diff = site - center;
    if (boundary == Boundary::Open)
        return diff;
    int wrapped = (diff + n_sites / 2) % n_sites;
    if (wrapped < 0)
        wrapped += n_sites;
    return wrapped - n_sites / 2;
}

void check_spec(const WavePacketSpec& spec, int num_cells) {
    if (!(spec.alpha > 0.0) || !std::isfinite(spec.alpha))
        throw std::invalid_argument("WavePacketSpec: alpha must be positive");
    if (!std::isfinite(spec.k0))
        throw std::invalid_argument("WavePacketSpec: k0 must be finite");
    if (spec.center_site < 1 || spec.center_site > 2 * num_cells)
        throw std::invalid_argument("WavePacketSpec: center site out of range");
}

} // namespace

double packet_normalization(const WavePacketSpec& spec, int num_cells, Boundary boundary) {
    check_spec(spec, num_cells);
    const int n = 2 * num_cells;
    double omega = 0.0;
    for (int site = 1; site <= n; ++site) {
        const double d = displacement(site, spec.center_site, n, boundary);
        omega += std::exp(-spec.alpha * spec.alpha * d * d);
    }
    return omega;
}

Complex packet_prefactor(const WavePacketSpec& spec, int num_cells, Boundary boundary) {
    const double omega = packet_normalization(spec, num_cells, boundary);
    return std::exp(Complex(0.0, spec.center_site * spec.k0)) *
           std::sqrt(pi / (4.0 * spec.alpha * spec.alpha * num_cells * omega));
}

Vector build_gaussian(const WavePacketSpec& spec, int num_cells, Boundary boundary) {
    check_spec(spec, num_cells);
    const int n = 2 * num_cells;
    Vector psi(n);
    for (int site = 1; site <= n; ++site) {
        const double d = displacement(site, spec.center_site, n, boundary);
        // The momentum phase rides on the unwrapped coordinate N_A + d so the
        // packet stays coherent across the index seam for any k0.
        psi(site - 1) = std::exp(Complex(-spec.alpha * spec.alpha * d * d / 2.0,
                                         spec.k0 * (spec.center_site + d)));
    }
    psi /= psi.norm();
    return psi;
}

EtaCoefficients eta_coefficients(const ModelParams& params, double k) {
    const Complex eps = dispersion(params, k);
    if (std::abs(eps) < exceptional_tol * params.J)
        throw ExceptionalModeError(k, std::abs(eps));
    const Complex lambda = params.gamma / eps;
    const double phi = bloch_phase(k, params.delta);
    const Complex up = std::sqrt(1.0 + Complex(0.0, 1.0) * lambda);
    const Complex down = std::sqrt(1.0 - Complex(0.0, 1.0) * lambda);
    const Complex half_phi = std::exp(Complex(0.0, phi / 2.0));
    const Complex half_k = std::exp(Complex(0.0, -k / 2.0));
    EtaCoefficients eta;
    eta.plus = half_phi * half_k * up + down / half_phi;
    eta.minus = -half_phi * half_k * down + up / half_phi;
    return eta;
}

ModeDecomposition packet_decomposition(const WavePacketSpec& spec,
                                       const ModelParams& params) {
    check_spec(spec, params.num_cells);
    if (params.boundary != Boundary::Periodic)
        throw std::invalid_argument("packet_decomposition: requires the ring");
    const Complex prefactor = packet_prefactor(spec, params.num_cells, params.boundary);

    ModeDecomposition decomp;
    const int count = params.num_cells;
    decomp.ks.resize(count);
    decomp.f.resize(count);
    decomp.g.resize(count);
    for (int i = 0; i < count; ++i) {
        const double k = 2.0 * pi * i / count;
        decomp.ks[i] = k;
        // Evaluate on the winding sheet nearest the packet's cell momentum
        // 2 k0; the grid modes pick up (-1)^winding relative to that sheet.
        const double winding = std::round((2.0 * spec.k0 - k) / (2.0 * pi));
        const double kt = k + 2.0 * pi * winding;
        const EtaCoefficients eta = eta_coefficients(params, kt);
        const double detune = kt - 2.0 * spec.k0;
        const double gauss =
            std::exp(-detune * detune / (8.0 * spec.alpha * spec.alpha));
        const double sign = (static_cast<long long>(winding) % 2 == 0) ? 1.0 : -1.0;
        const Complex common = sign * prefactor * gauss *
                               std::exp(Complex(0.0, -spec.center_site * kt / 2.0));
        decomp.f(i) = common * eta.plus;
        decomp.g(i) = common * eta.minus;
    }
    return decomp;
}

double effective_hopping(const ModelParams& params) {
    return params.J * std::sqrt(1.0 - params.delta * params.delta);
}

double revival_time(const ModelParams& params) {
    const double n = params.num_cells;
    return 2.0 * n * n / (pi * effective_hopping(params));
}

CirclingResult circling_period(const ModelParams& params) {
    const double je = effective_hopping(params);
    return {params.num_cells / je, je};
}

double packet_center(const Vector& psi, Boundary boundary) {
    const int n = static_cast<int>(psi.size());
    const double total = psi.squaredNorm();
    if (boundary == Boundary::Open) {
        double mean = 0.0;
        for (int m = 0; m < n; ++m)
            mean += (m + 1) * std::norm(psi(m));
        return mean / total;
    }
    Complex z = 0.0;
    for (int m = 0; m < n; ++m)
        z += std::norm(psi(m)) * std::exp(Complex(0.0, 2.0 * pi * m / n));
    double site = std::arg(z) * n / (2.0 * pi); // 0-based angle -> site offset
    site = std::fmod(site + n, n);
    return site + 1.0;
}

double packet_width(const Vector& psi, Boundary boundary) {
    const int n = static_cast<int>(psi.size());
    const double total = psi.squaredNorm();
    if (boundary == Boundary::Open) {
        double mean = 0.0, mean2 = 0.0;
        for (int m = 0; m < n; ++m) {
            const double w = std::norm(psi(m)) / total;
            mean += (m + 1) * w;
            mean2 += (m + 1.0) * (m + 1.0) * w;
        }
        return std::sqrt(std::max(0.0, mean2 - mean * mean));
    }
    Complex z = 0.0;
    for (int m = 0; m < n; ++m)
        z += std::norm(psi(m)) / total * std::exp(Complex(0.0, 2.0 * pi * m / n));
    const double r = std::min(1.0, std::abs(z));
    if (r <= 0.0)
        return n / 2.0;
    // Circular standard deviation, converted from radians to sites.
    return std::sqrt(-2.0 * std::log(r)) * n / (2.0 * pi);
}

double fidelity(const Vector& a, const Vector& b) {
    const Complex overlap = a.adjoint() * b;
    return std::norm(overlap) / (a.squaredNorm() * b.squaredNorm());
}

PacketObservables packet_metrics(const std::vector<Vector>& states,
                                 const std::vector<double>& times, Boundary boundary) {
    if (states.size() != times.size())
        throw std::invalid_argument("packet_metrics: states/times size mismatch");
    PacketObservables obs;
    obs.times = times;
    obs.center.reserve(states.size());
    obs.width.reserve(states.size());
    obs.fidelity.reserve(states.size());
    for (const auto& psi : states) {
        obs.center.push_back(packet_center(psi, boundary));
        obs.width.push_back(packet_width(psi, boundary));
        obs.fidelity.push_back(fidelity(states.front(), psi));
    }
    return obs;
}

} // namespace ptband
