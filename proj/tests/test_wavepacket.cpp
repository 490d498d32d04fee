#include <doctest.h>

#include "oracles.hpp"
#include "ptband/dynamics.hpp"
#include "ptband/wavepacket.hpp"

using namespace ptband;

TEST_CASE("gaussian packet construction") {
    WavePacketSpec spec;
    spec.alpha = 0.1;
    spec.k0 = 0.0;
    spec.center_site = 100;
    SUBCASE("real positive envelope peaked at the center site") {
        const Vector psi = build_gaussian(spec, 100);
        int peak = 0;
        for (int m = 0; m < psi.size(); ++m) {
            CHECK(psi(m).imag() == 0.0);
            CHECK(psi(m).real() > 0.0);
            if (psi(m).real() > psi(peak).real())
                peak = m;
        }
        CHECK(peak == 99); // 1-based site 100
        CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
    }
    SUBCASE("large alpha approaches a single-site state with phase") {
        spec.alpha = 8.0;
        spec.k0 = 1.1;
        spec.center_site = 10;
        const Vector psi = build_gaussian(spec, 10);
        CHECK(std::abs(psi(9) - std::exp(Complex(0.0, 1.1 * 10))) < 1e-10);
    }
    SUBCASE("unit Dirac norm for random specs") {
        testing::Rng rng(301);
        for (int i = 0; i < 100; ++i) {
            WavePacketSpec s;
            s.alpha = testing::uniform(rng, 0.05, 2.0);
            s.k0 = testing::uniform(rng, -pi, pi);
            const int cells = 10 + int(testing::uniform(rng, 0, 40));
            s.center_site = 1 + int(testing::uniform(rng, 0, 2 * cells - 1));
            const auto boundary = i % 2 ? Boundary::Open : Boundary::Periodic;
            const Vector psi = build_gaussian(s, cells, boundary);
            CHECK(std::abs(psi.squaredNorm() - 1.0) < 1e-12);
            // direct-summation oracle for the normalization factor
            double omega = 0.0;
            for (int site = 1; site <= 2 * cells; ++site) {
                double d = site - s.center_site;
                if (boundary == Boundary::Periodic) {
                    while (d > cells)
                        d -= 2 * cells;
                    while (d < -cells)
                        d += 2 * cells;
                }
                omega += std::exp(-s.alpha * s.alpha * d * d);
            }
            CHECK(packet_normalization(s, cells, boundary) ==
                  doctest::Approx(omega).epsilon(1e-12));
        }
    }
    SUBCASE("alpha must be positive, center site in range") {
        spec.alpha = 0.0;
        spec.center_site = 10;
        CHECK_THROWS_AS(build_gaussian(spec, 10), std::invalid_argument);
        spec.alpha = 0.1;
        spec.center_site = 21;
        CHECK_THROWS_AS(build_gaussian(spec, 10), std::invalid_argument);
    }
}

TEST_CASE("eta coefficients") {
    SUBCASE("uniform hermitian ring at k = 0: pure lower band, eta+ = 2") {
        ModelParams p;
        p.delta = 0.0;
        p.gamma = 0.0;
        p.num_cells = 8;
        const auto eta = eta_coefficients(p, 0.0);
        CHECK(std::abs(eta.plus - 2.0) < 1e-14);
        CHECK(std::abs(eta.minus) < 1e-14);
    }
    SUBCASE("symmetry eta-_k = -conj(eta+_{2pi-k}) across the grid") {
        testing::Rng rng(303);
        for (int i = 0; i < 30; ++i) {
            const ModelParams p = testing::random_unbroken(rng);
            for (double k : momentum_grid(p.num_cells)) {
                const auto eta = eta_coefficients(p, k);
                const auto mirrored = eta_coefficients(p, 2.0 * pi - k);
                CHECK(std::abs(eta.minus + std::conj(mirrored.plus)) < 1e-12);
            }
        }
    }
    SUBCASE("exceptional momentum is rejected") {
        ModelParams p;
        p.delta = 0.1;
        p.gamma = 0.2;
        p.num_cells = 4;
        CHECK_THROWS_AS(eta_coefficients(p, pi), ExceptionalModeError);
    }
}

TEST_CASE("analytic packet decomposition against the projection oracle") {
    ModelParams p;
    p.delta = 0.1;
    p.gamma = 0.15;
    p.num_cells = 50;
    const auto modes = solve_grid(p);
    const auto compare = [&](double alpha, double k0, int cells) {
        ModelParams q = p;
        q.num_cells = cells;
        const auto grid_modes = cells == 50 ? modes : solve_grid(q);
        WavePacketSpec spec;
        spec.alpha = alpha;
        spec.k0 = k0;
        spec.center_site = 2 * cells;
        const auto numeric = decompose(build_gaussian(spec, cells), grid_modes);
        const auto analytic = packet_decomposition(spec, q);
        const double scale = std::sqrt(numeric.biorthogonal_weight());
        double err2 = 0.0;
        for (int i = 0; i < cells; ++i)
            err2 += std::norm(analytic.f(i) - numeric.f(i)) +
                    std::norm(analytic.g(i) - numeric.g(i));
        return std::sqrt(err2) / scale;
    };
    SUBCASE("tight agreement away from the wrap-tail limit") {
        CHECK(compare(0.15, 0.0, 50) < 1e-6);
        CHECK(compare(0.15, 3.0 * pi / 8.0, 50) < 1e-6);
        CHECK(compare(0.2, -pi / 2.0, 50) < 1e-6);
        CHECK(compare(0.1, pi / 2.0, 100) < 1e-6);
    }
    SUBCASE("documented tolerance over the supported domain") {
        for (double alpha : {0.1, 0.15, 0.2})
            for (double k0 : {0.0, 3.0 * pi / 8.0, pi / 2.0, -pi / 2.0, -3.0 * pi / 8.0})
                CHECK(compare(alpha, k0, 50) < 1e-3);
    }
}

TEST_CASE("band populations of the figure packets") {
    ModelParams p;
    p.delta = 0.1;
    p.gamma = 0.2 - 1e-8;
    p.num_cells = 100;
    WavePacketSpec spec;
    spec.alpha = 0.1;
    spec.center_site = 100;
    const auto band_fraction = [&](double k0) {
        spec.k0 = k0;
        const auto decomp = packet_decomposition(spec, p);
        const double f2 = decomp.f.squaredNorm();
        const double g2 = decomp.g.squaredNorm();
        return std::min(f2, g2) / (f2 + g2);
    };
    // single-band away from the straddling momentum
    CHECK(band_fraction(0.0) < 0.01);
    CHECK(band_fraction(3.0 * pi / 8.0) < 0.01);
    // k0 = pi/2 straddles the zone edge: both bands populated, yet per-k
    // products stay tiny (the quasi-hermitian condition)
    CHECK(band_fraction(pi / 2.0) > 0.2);
    // k0 = -pi/2 populates both bands with comparable weight per momentum
    // (|eta+/eta-| ~ 1 on that sheet)
    CHECK(band_fraction(-pi / 2.0) > 0.3);
    spec.k0 = pi / 2.0;
    const auto modes = solve_grid(p);
    const auto plus = packet_decomposition(spec, p);
    spec.k0 = -pi / 2.0;
    const auto minus = packet_decomposition(spec, p);
    CHECK(fluctuation_bound(minus, modes) > 10.0 * fluctuation_bound(plus, modes));
}

TEST_CASE("revival and circling constants") {
    ModelParams p;
    p.delta = 0.1;
    p.gamma = 0.2;
    p.num_cells = 100;
    CHECK(effective_hopping(p) == doctest::Approx(0.99498743710662).epsilon(1e-14));
    CHECK(revival_time(p) == doctest::Approx(6398.269451711309).epsilon(1e-12));
    const auto circ = circling_period(p);
    CHECK(circ.period == doctest::Approx(100.50378152592121).epsilon(1e-12));
    CHECK(circ.velocity == doctest::Approx(0.99498743710662).epsilon(1e-14));
    SUBCASE("delta = 0 gives Je = J and T_cir = N/J") {
        p.delta = 0.0;
        p.gamma = 0.0;
        CHECK(effective_hopping(p) == 1.0);
        CHECK(circling_period(p).period == doctest::Approx(100.0));
    }
    SUBCASE("finite differences of the gapless dispersion reproduce T_rev") {
        const double curvature = dispersion_derivative(p, 0.0, 2);
        const double t_rev =
            p.num_cells * p.num_cells / (pi * std::abs(curvature)) * 2.0 / 2.0;
        // T_rev = (N^2/pi) / |curvature| with curvature = -Je/2
        CHECK(p.num_cells * p.num_cells / (pi * std::abs(curvature)) ==
              doctest::Approx(revival_time(p)).epsilon(1e-6));
        (void)t_rev;
    }
}

TEST_CASE("packet center and width statistics") {
    WavePacketSpec spec;
    spec.alpha = 0.1;
    spec.k0 = pi / 2.0;
    spec.center_site = 100;
    SUBCASE("ring statistics at the seam do not jump") {
        const Vector psi = build_gaussian(spec, 100, Boundary::Periodic);
        CHECK(packet_center(psi, Boundary::Periodic) == doctest::Approx(100.0).epsilon(1e-9));
        // envelope sigma = 1/alpha... width of |psi|^2 is 1/(alpha sqrt(2))
        CHECK(packet_width(psi, Boundary::Periodic) ==
              doctest::Approx(1.0 / (0.1 * std::sqrt(2.0))).epsilon(1e-3));
        spec.center_site = 1; // straddles the seam
        const Vector seam = build_gaussian(spec, 100, Boundary::Periodic);
        CHECK(packet_center(seam, Boundary::Periodic) == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(packet_width(seam, Boundary::Periodic) ==
              doctest::Approx(packet_width(psi, Boundary::Periodic)).epsilon(1e-9));
    }
    SUBCASE("open chain uses plain statistics") {
        spec.center_site = 60;
        const Vector psi = build_gaussian(spec, 60, Boundary::Open);
        CHECK(packet_center(psi, Boundary::Open) == doctest::Approx(60.0).epsilon(1e-9));
        CHECK(packet_width(psi, Boundary::Open) ==
              doctest::Approx(1.0 / (0.1 * std::sqrt(2.0))).epsilon(1e-3));
    }
}

TEST_CASE("packet metrics series") {
    ModelParams p;
    p.delta = 0.1;
    p.gamma = 0.15;
    p.num_cells = 30;
    WavePacketSpec spec;
    spec.alpha = 0.15;
    spec.k0 = pi / 2.0;
    spec.center_site = 30;
    const Vector psi0 = build_gaussian(spec, p.num_cells);
    const DirectEvolver evolver(build_nonhermitian(p));
    const std::vector<double> times{0.0, 2.0, 4.0, 6.0};
    const auto states = evolver.series(psi0, times);
    const auto obs = packet_metrics(states, times, p.boundary);
    CHECK(obs.fidelity[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(obs.width[0] == doctest::Approx(packet_width(psi0, p.boundary)).epsilon(1e-12));
    // the packet moves: center drifts, fidelity decays
    CHECK(obs.center[3] != doctest::Approx(obs.center[0]).epsilon(1e-3));
    CHECK(obs.fidelity[3] < 0.9);
}
