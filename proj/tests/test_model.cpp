#include <doctest.h>

#include "oracles.hpp"
#include "ptband/bloch.hpp"
#include "ptband/model.hpp"

using namespace ptband;

TEST_CASE("undistorted limit is the uniform four-site ring") {
    ModelParams p;
    p.J = 1.0;
    p.delta = 0.0;
    p.gamma = 0.0;
    p.num_cells = 2;
    const Matrix h = build_nonhermitian(p);
    REQUIRE(h.rows() == 4);
    for (int m = 0; m < 4; ++m) {
        CHECK(h(m, m) == Complex(0.0, 0.0));
        CHECK(h(m, (m + 1) % 4) == Complex(-1.0, 0.0));
        CHECK(h((m + 1) % 4, m) == Complex(-1.0, 0.0));
    }
}

TEST_CASE("ring entries alternate as -0.9/-1.1 bonds and -+0.2i potentials") {
    ModelParams p;
    p.delta = 0.1;
    p.gamma = 0.2;
    p.num_cells = 100;
    const Matrix h = build_nonhermitian(p);
    // 1-based site l = m+1: odd sites carry -i gamma, bond (1,2) is weak.
    CHECK(h(0, 0) == Complex(0.0, -0.2));
    CHECK(h(1, 1) == Complex(0.0, 0.2));
    CHECK(h(0, 1).real() == doctest::Approx(-0.9).epsilon(1e-15));
    CHECK(h(1, 2).real() == doctest::Approx(-1.1).epsilon(1e-15));
    // wrap bond l = 2N is strong
    CHECK(h(199, 0).real() == doctest::Approx(-1.1).epsilon(1e-15));
    SUBCASE("open boundary omits exactly the wrap bond") {
        p.boundary = Boundary::Open;
        const Matrix ho = build_nonhermitian(p);
        CHECK(ho(199, 0) == Complex(0.0, 0.0));
        CHECK(ho(0, 199) == Complex(0.0, 0.0));
        Matrix diff = h - ho;
        diff(199, 0) = diff(0, 199) = 0.0;
        CHECK(diff.cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("eigenvalues of the 8x8 ring match the analytic bands") {
    ModelParams p;
    p.delta = 0.1;
    p.gamma = 0.1;
    p.num_cells = 4;
    std::vector<Complex> analytic;
    for (double k : momentum_grid(4)) {
        analytic.push_back(dispersion(p, k));
        analytic.push_back(-dispersion(p, k));
    }
    const auto dense = testing::dense_eigenvalues(build_nonhermitian(p));
    CHECK(testing::multiset_distance(analytic, dense) < 1e-12);
}

TEST_CASE("parameter validation") {
    ModelParams p;
    p.num_cells = 1;
    CHECK_THROWS_AS(build_nonhermitian(p), std::invalid_argument);
    p.num_cells = 4;
    p.J = 0.0;
    CHECK_THROWS_AS(build_nonhermitian(p), std::invalid_argument);
    p.J = 1.0;
    p.gamma = -0.1;
    CHECK_THROWS_AS(build_nonhermitian(p), std::invalid_argument);
    p.gamma = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(build_nonhermitian(p), std::invalid_argument);
    CHECK_THROWS_AS(build_hermitian_counterpart(1.0, 0.1, 0.0, 1, Boundary::Periodic),
                    std::invalid_argument);
}

TEST_CASE("hermitian counterpart construction is exactly hermitian") {
    testing::Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        const double je = testing::uniform(rng, 0.5, 2.0);
        const double de = testing::uniform(rng, -0.5, 0.5);
        const double ve = testing::uniform(rng, -1.0, 1.0);
        const auto boundary = i % 2 ? Boundary::Open : Boundary::Periodic;
        const Matrix h = build_hermitian_counterpart(je, de, ve, 5, boundary);
        CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    }
    // Je = J sqrt(1-delta^2) at J=1, delta=0.1
    CHECK(std::sqrt(1.0 - 0.01) == doctest::Approx(0.99498743710662).epsilon(1e-12));
}

TEST_CASE("PT identity holds for both boundaries; P and T break separately") {
    testing::Rng rng(11);
    for (int i = 0; i < 30; ++i) {
        ModelParams p = testing::random_unbroken(rng);
        p.boundary = i % 2 ? Boundary::Open : Boundary::Periodic;
        const Matrix h = build_nonhermitian(p);
        CHECK(pt_symmetry_residual(h) == 0.0);
        if (p.gamma > 1e-3) {
            const Matrix parity = site_reflection(p.num_cells);
            CHECK((parity * h - h * parity).cwiseAbs().maxCoeff() > 1e-6);
            CHECK((parity * h.conjugate() * parity - h.conjugate())
                      .cwiseAbs()
                      .maxCoeff() > 1e-6);
        }
    }
}

TEST_CASE("translation by one cell commutes with the periodic matrix") {
    testing::Rng rng(13);
    for (int i = 0; i < 20; ++i) {
        const ModelParams p = testing::random_unbroken(rng);
        const Matrix h = build_nonhermitian(p);
        const Matrix s = two_site_shift(p.num_cells);
        CHECK((s * h * s.transpose() - h).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("open chain spectra: strong-bond termination stays real, weak-bond breaks") {
    // Cutting the ring at a weak bond (delta < 0 pattern) leaves strong bonds
    // at both ends and a fully real spectrum arbitrarily close to gamma_c.
    // Cutting at a strong bond leaves midgap boundary modes that break PT at
    // infinitesimal gamma with Im E ~ gamma.
    ModelParams p;
    p.delta = -0.1;
    p.gamma = 0.19;
    p.num_cells = 40;
    p.boundary = Boundary::Open;
    auto worst_imag = [](const Matrix& h) {
        double worst = 0.0;
        for (const auto& ev : testing::dense_eigenvalues(h))
            worst = std::max(worst, std::abs(ev.imag()));
        return worst;
    };
    CHECK(worst_imag(build_nonhermitian(p)) < 1e-10);
    p.delta = 0.1;
    CHECK(worst_imag(build_nonhermitian(p)) > 0.17);
}
