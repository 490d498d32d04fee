#include <doctest.h>

#include "oracles.hpp"
#include "ptband/algebra.hpp"
#include "ptband/wavepacket.hpp"

using namespace ptband;

TEST_CASE("canonical relations on the N=10 grid") {
    ModelParams p;
    p.delta = 0.1;
    p.gamma = 0.1;
    p.num_cells = 10;
    const auto check = check_canonical(p);
    CHECK(check.max_abs_error < 1e-12);
    // one report per relation family per (k, k') pair
    CHECK(check.reports.size() == 4u * 10u * 10u);
}

TEST_CASE("canonical relations hold for random parameters") {
    testing::Rng rng(101);
    for (int i = 0; i < 100; ++i) {
        const ModelParams p = testing::random_unbroken(rng);
        CHECK(check_canonical(p).max_abs_error < 1e-12);
    }
}

TEST_CASE("quasi-canonical values at delta=0.1, gamma=0.1, k=pi") {
    ModelParams p;
    p.delta = 0.1;
    p.gamma = 0.1;
    p.num_cells = 10;
    const auto modes = solve_grid(p);
    const auto check = check_quasi_canonical(modes);
    CHECK(check.max_abs_error < 1e-12);

    // [alpha_pi, alpha_pi^dagger] = sqrt(1 + lambda_pi^2) = 2/sqrt(3)
    const BlochMode& at_pi = modes[5];
    REQUIRE(at_pi.k == doctest::Approx(pi));
    CHECK(at_pi.quasi_norm() == doctest::Approx(1.1547005383792515).epsilon(1e-14));
    const Complex measured = at_pi.alpha.transpose() * at_pi.alpha.conjugate();
    CHECK(std::abs(measured - Complex(1.1547005383792515, 0.0)) < 1e-13);
    // mixed band bracket = i lambda_pi
    const Complex mixed = at_pi.beta.transpose() * at_pi.alpha.conjugate();
    CHECK(std::abs(mixed - Complex(0.0, 0.5773502691896258)) < 1e-13);
}

TEST_CASE("gamma = 0 reduces the quasi relations to canonical ones") {
    ModelParams p;
    p.delta = 0.2;
    p.gamma = 0.0;
    p.num_cells = 8;
    for (const auto& report : check_quasi_canonical(p).reports) {
        const bool same = report.k == report.kp;
        const bool diagonal = report.relation.find("beta_k, alpha") == std::string::npos &&
                              report.relation.find("alpha_k, beta") == std::string::npos &&
                              report.relation.find("^+, beta_bar") == std::string::npos;
        if (same && diagonal && (report.relation.find("alpha_k, alpha") != std::string::npos ||
                                 report.relation.find("beta_k, beta") != std::string::npos))
            CHECK(std::abs(report.expected - 1.0) < 1e-15);
        CHECK(report.abs_error < 1e-12);
    }
}

TEST_CASE("quasi-canonical relations hold for random parameters") {
    testing::Rng rng(103);
    for (int i = 0; i < 100; ++i) {
        const ModelParams p = testing::random_unbroken(rng);
        CHECK(check_quasi_canonical(p).max_abs_error < 1e-12);
    }
}

TEST_CASE("decompose of a pure mode and of a site state") {
    ModelParams p;
    p.delta = 0.15;
    p.gamma = 0.12;
    p.num_cells = 8;
    const auto modes = solve_grid(p);
    SUBCASE("pure lower-band mode") {
        const auto decomp = decompose(modes[3].alpha_bar, modes);
        for (int i = 0; i < 8; ++i) {
            CHECK(std::abs(decomp.f(i) - (i == 3 ? 1.0 : 0.0)) < 1e-12);
            CHECK(std::abs(decomp.g(i)) < 1e-12);
        }
    }
    SUBCASE("site basis vector reconstructs exactly") {
        Vector site = Vector::Zero(p.num_sites());
        site(0) = 1.0;
        const auto decomp = decompose(site, modes);
        CHECK((reconstruct(decomp, modes) - site).norm() < 1e-12);
    }
}

TEST_CASE("decompose-reconstruct identity for random states") {
    testing::Rng rng(107);
    for (int i = 0; i < 50; ++i) {
        const ModelParams p = testing::random_unbroken(rng);
        const auto modes = solve_grid(p);
        const Vector psi = testing::random_state(rng, p.num_sites());
        const auto decomp = decompose(psi, modes);
        CHECK((reconstruct(decomp, modes) - psi).norm() < 1e-10);
    }
}

TEST_CASE("decompose rejects exceptional grids") {
    ModelParams p;
    p.delta = 0.1;
    p.gamma = 0.2; // gamma_c: k = pi is exceptional
    p.num_cells = 4;
    const auto modes = solve_grid(p);
    Vector site = Vector::Zero(p.num_sites());
    site(0) = 1.0;
    CHECK_THROWS_AS(decompose(site, modes), ExceptionalModeError);
}

TEST_CASE("k0 = 0 packet sits almost entirely on the lower band") {
    ModelParams p;
    p.delta = 0.1;
    p.gamma = 0.2 - 1e-8;
    p.num_cells = 100;
    WavePacketSpec spec;
    spec.alpha = 0.1;
    spec.k0 = 0.0;
    spec.center_site = 100;
    const auto modes = solve_grid(p);
    const auto decomp = decompose(build_gaussian(spec, p.num_cells), modes);
    // per-mode amplitude ratio ~ lambda_k/2 ~ gamma/(2 eps_0) near the band
    // bottom; the band weight ratio is its square
    for (int i = 0; i < p.num_cells; ++i) {
        if (std::abs(decomp.ks[i]) < 0.5 || std::abs(decomp.ks[i] - 2 * pi) < 0.5)
            CHECK(std::abs(decomp.g(i)) < 0.15 * std::abs(decomp.f(i)));
    }
    CHECK(decomp.g.squaredNorm() < 0.01 * decomp.f.squaredNorm());
}

TEST_CASE("cross-momentum Dirac orthogonality, same-k overlap magnitude") {
    testing::Rng rng(109);
    for (int i = 0; i < 20; ++i) {
        const ModelParams p = testing::random_unbroken(rng);
        const auto modes = solve_grid(p);
        for (std::size_t a = 0; a < modes.size(); ++a) {
            for (std::size_t b = 0; b < modes.size(); ++b) {
                if (a == b)
                    continue;
                CHECK(std::abs(Complex(modes[a].alpha_bar.adjoint() *
                                       modes[b].alpha_bar)) < 1e-12);
                CHECK(std::abs(Complex(modes[a].alpha_bar.adjoint() *
                                       modes[b].beta_bar)) < 1e-12);
            }
            const Complex same = modes[a].alpha_bar.adjoint() * modes[a].beta_bar;
            const double lambda = modes[a].lambda.real();
            const double expected = std::abs(lambda) / std::sqrt(1.0 + lambda * lambda);
            CHECK(std::abs(same) / modes[a].quasi_norm() ==
                  doctest::Approx(expected).epsilon(1e-10));
            if (p.gamma > 1e-3)
                CHECK(std::abs(same) > 0.0);
        }
    }
}

TEST_CASE("biorthogonal normalization helper") {
    ModelParams p;
    p.delta = 0.2;
    p.gamma = 0.15;
    p.num_cells = 6;
    const auto modes = solve_grid(p);
    testing::Rng rng(113);
    const auto decomp =
        decompose(testing::random_state(rng, p.num_sites()), modes);
    const auto normalized = normalized_biorthogonal(decomp);
    CHECK(normalized.biorthogonal_weight() == doctest::Approx(1.0).epsilon(1e-14));
}
