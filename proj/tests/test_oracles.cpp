#include <doctest.h>

#include <cmath>

#include "hb/errors.hpp"
#include "hb/oracles.hpp"
#include "hb/spectral.hpp"
#include "helpers.hpp"

using namespace hb;
using th::pi;

namespace {

double gaussian_cdf(double x, double mu, double sigma) {
    return 0.5 * std::erfc(-(x - mu) / (sigma * std::sqrt(2.0)));
}

// Trapezoid moments of a normalized grid density.
struct GridMoments {
    double mass, mean, var;
};

GridMoments grid_moments(const oracle::GridPosterior& g) {
    const double h = g.grid[1] - g.grid[0];
    double m0 = 0.0, m1 = 0.0, m2 = 0.0;
    for (std::size_t j = 0; j < g.grid.size(); ++j) {
        const double w =
            (j == 0 || j + 1 == g.grid.size()) ? 0.5 * h : h;
        m0 += w * g.density[j];
        m1 += w * g.grid[j] * g.density[j];
        m2 += w * g.grid[j] * g.grid[j] * g.density[j];
    }
    return {m0, m1 / m0, m2 / m0 - (m1 / m0) * (m1 / m0)};
}

} // namespace

TEST_SUITE("oracles") {

TEST_CASE("uniform times uniform grid posterior") {
    const auto u = [](double) { return 1.0 / (2 * pi); };
    const auto g = oracle::grid_posterior(u, u, -pi, pi, 10001);
    CHECK(g.evidence == doctest::Approx(1.0 / (2 * pi)).epsilon(1e-12));
    for (double v : g.density)
        CHECK(v == doctest::Approx(1.0 / (2 * pi)).epsilon(1e-12));
    CHECK(grid_moments(g).mass == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("Gaussian pair matches the conjugate closed form") {
    const auto g = oracle::grid_posterior(th::gaussian_fn(0.0, 0.5),
                                          th::gaussian_fn(0.3, 0.4), -pi, pi,
                                          100001);
    const auto conj = oracle::conjugate_gaussian_posterior(0.0, 0.25, 0.3, 0.16);
    const GridMoments m = grid_moments(g);
    CHECK(std::abs(m.mean - conj.mu_star) < 1e-9);
    CHECK(std::abs(m.var - conj.var_star) < 1e-9);
}

TEST_CASE("likelihood scaling rescales only the evidence") {
    const auto like = th::gaussian_fn(0.2, 0.6);
    const auto scaled = [&](double theta) { return 4.2 * like(theta); };
    const auto a =
        oracle::grid_posterior(th::gaussian_fn(0.0, 0.5), like, -pi, pi, 2001);
    const auto b =
        oracle::grid_posterior(th::gaussian_fn(0.0, 0.5), scaled, -pi, pi, 2001);
    CHECK(b.evidence == doctest::Approx(4.2 * a.evidence).epsilon(1e-12));
    for (std::size_t j = 0; j < a.density.size(); ++j)
        CHECK(b.density[j] == doctest::Approx(a.density[j]).epsilon(1e-12));
}

TEST_CASE("trapezoid evidence converges at second order") {
    // Likelihood with visible boundary slope so the h^2 term dominates.
    const auto prior = [](double) { return 1.0 / (2 * pi); };
    const auto like = th::gaussian_fn(1.0, 0.8);
    const double exact = (gaussian_cdf(pi, 1.0, 0.8) -
                          gaussian_cdf(-pi, 1.0, 0.8)) /
                         (2 * pi);
    const double e1 =
        std::abs(oracle::grid_posterior(prior, like, -pi, pi, 65).evidence - exact);
    const double e2 =
        std::abs(oracle::grid_posterior(prior, like, -pi, pi, 129).evidence - exact);
    const double e4 =
        std::abs(oracle::grid_posterior(prior, like, -pi, pi, 257).evidence - exact);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.25));
    CHECK(e2 / e4 == doctest::Approx(4.0).epsilon(0.25));
}

TEST_CASE("grid posterior input contracts") {
    const auto u = [](double) { return 1.0 / (2 * pi); };
    CHECK_THROWS_AS(oracle::grid_posterior(u, u, -pi, pi, 8), invalid_input);
    CHECK_THROWS_AS(oracle::grid_posterior(u, u, pi, -pi, 100), invalid_input);
    CHECK_THROWS_AS(
        oracle::grid_posterior([](double) { return -1.0; }, u, -pi, pi, 100),
        invalid_input);

    // Disjoint indicators: zero product everywhere.
    const auto left = [](double theta) { return theta < -1.0 ? 1.0 : 0.0; };
    const auto right = [](double theta) { return theta > 1.0 ? 1.0 : 0.0; };
    CHECK_THROWS_AS(oracle::grid_posterior(left, right, -pi, pi, 100),
                    numeric_error);
}

TEST_CASE("conjugate posterior closed form") {
    const auto r = oracle::conjugate_gaussian_posterior(0.0, 0.25, 0.3, 0.16);
    CHECK(r.var_star == doctest::Approx(0.0975609756097561).epsilon(1e-14));
    CHECK(r.mu_star == doctest::Approx(0.1829268292682927).epsilon(1e-14));

    // Flat-prior limit.
    const auto flat = oracle::conjugate_gaussian_posterior(5.0, 1e12, 0.3, 0.16);
    CHECK(std::abs(flat.mu_star - 0.3) < 1e-9);
    CHECK(flat.var_star == doctest::Approx(0.16).epsilon(1e-10));

    // Agreement case: prior mean equals the observation.
    for (double v0 : {0.1, 1.0, 7.0})
        CHECK(oracle::conjugate_gaussian_posterior(0.4, v0, 0.4, 0.3).mu_star ==
              doctest::Approx(0.4).epsilon(1e-14));

    CHECK_THROWS_AS(oracle::conjugate_gaussian_posterior(0.0, -1.0, 0.0, 1.0),
                    invalid_input);
    CHECK_THROWS_AS(oracle::conjugate_gaussian_posterior(0.0, 1.0, 0.0, 0.0),
                    invalid_input);
}

TEST_CASE("truncated Gaussian moments") {
    // Wide window: indistinguishable from the untruncated law.
    const auto wide = oracle::truncated_gaussian_moments(0.3, 0.25, -20.0, 20.0);
    CHECK(wide.mass == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(wide.mean == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(wide.variance == doctest::Approx(0.25).epsilon(1e-12));

    // Symmetric truncation keeps the mean and shrinks the variance.
    const auto sym = oracle::truncated_gaussian_moments(0.0, 1.0, -1.0, 1.0);
    CHECK(std::abs(sym.mean) < 1e-14);
    CHECK(sym.variance < 1.0);

    // Against a brute-force quadrature of the same integrals.
    const auto t = oracle::truncated_gaussian_moments(0.4, 0.36, -1.0, 2.0);
    const int M = 200001;
    const double h = 3.0 / (M - 1);
    double m0 = 0, m1 = 0, m2 = 0;
    for (int j = 0; j < M; ++j) {
        const double x = -1.0 + h * j;
        const double w = (j == 0 || j == M - 1) ? 0.5 * h : h;
        const double p = th::gaussian_pdf(x, 0.4, 0.6);
        m0 += w * p;
        m1 += w * x * p;
        m2 += w * x * x * p;
    }
    CHECK(t.mass == doctest::Approx(m0).epsilon(1e-10));
    CHECK(t.mean == doctest::Approx(m1 / m0).epsilon(1e-10));
    CHECK(t.variance ==
          doctest::Approx(m2 / m0 - (m1 / m0) * (m1 / m0)).epsilon(1e-9));

    CHECK_THROWS_AS(oracle::truncated_gaussian_moments(0.0, 0.0, -1.0, 1.0),
                    invalid_input);
    // Window far in the tail: retained mass underflows to zero.
    CHECK_THROWS_AS(oracle::truncated_gaussian_moments(0.0, 1.0, 50.0, 51.0),
                    numeric_error);
}

TEST_CASE("spectral posterior tracks the grid oracle in L1") {
    const CoefficientVector prior =
        project(th::fourier_spec(64), th::gaussian_fn(0.1, 0.3));
    const CoefficientVector like =
        project(th::fourier_spec(64), th::gaussian_fn(-0.1, 0.3));
    const UpdateResult res = bayes_update(prior, like);

    const auto g = oracle::grid_posterior(th::gaussian_fn(0.1, 0.3),
                                          th::gaussian_fn(-0.1, 0.3), -pi, pi,
                                          100001);
    const std::vector<double> spectral = reconstruct(res.posterior, g.grid);
    const double h = g.grid[1] - g.grid[0];
    double l1 = 0.0;
    for (std::size_t j = 0; j < g.grid.size(); ++j) {
        const double w = (j == 0 || j + 1 == g.grid.size()) ? 0.5 * h : h;
        l1 += w * std::abs(spectral[j] - g.density[j]);
    }
    CHECK(l1 < 1e-6);
}

} // TEST_SUITE
