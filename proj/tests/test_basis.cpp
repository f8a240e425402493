#include <doctest.h>

#include <cmath>
#include <random>

#include "hb/basis.hpp"
#include "hb/coefficients.hpp"
#include "hb/errors.hpp"
#include "hb/oracles.hpp"
#include "helpers.hpp"

using namespace hb;
using th::pi;

TEST_SUITE("basis") {

TEST_CASE("domain factories and validation") {
    const Domain d = Domain::periodic();
    CHECK(d.lo == doctest::Approx(-pi));
    CHECK(d.hi == doctest::Approx(pi));
    CHECK(d.length() == doctest::Approx(2 * pi));
    CHECK(d.contains(0.0));
    CHECK_FALSE(d.contains(4.0));
    CHECK(Domain::real_line().contains(1e9));
    CHECK_THROWS_AS(Domain::interval(1.0, 1.0), invalid_input);
    CHECK_THROWS_AS(Domain::periodic(2.0, -2.0), invalid_input);
    CHECK_THROWS_AS(Domain::real_line().length(), invalid_input);
}

TEST_CASE("spec mode counts and index ranges") {
    CHECK(th::fourier_spec(8).N() == 17);
    CHECK(th::fourier_spec(8).index_min() == -8);
    CHECK(th::cosine_spec(8).N() == 9);
    CHECK(th::cosine_spec(8).index_min() == 0);
    CHECK(th::hermite_spec(8).N() == 9);
}

TEST_CASE("spec validation enforces the basis/domain pairing") {
    CHECK_NOTHROW(th::fourier_spec(4).validate());
    CHECK_NOTHROW(th::cosine_spec(4).validate());
    CHECK_NOTHROW(th::hermite_spec(4).validate());

    BasisSpec bad{BasisKind::Fourier, Domain::interval(-1.0, 1.0), 4};
    CHECK_THROWS_AS(bad.validate(), invalid_input);
    bad = {BasisKind::Cosine, Domain::periodic(), 4};
    CHECK_THROWS_AS(bad.validate(), invalid_input);
    bad = {BasisKind::Hermite, Domain::interval(-1.0, 1.0), 4};
    CHECK_THROWS_AS(bad.validate(), invalid_input);
    bad = {BasisKind::Fourier, Domain::periodic(), -1};
    CHECK_THROWS_AS(bad.validate(), invalid_input);
}

TEST_CASE("eval_basis reference values") {
    // Fourier phi_0(1) = 1/sqrt(2*pi) on (-pi, pi).
    const cplx f0 = eval_basis(th::fourier_spec(4), 0, 1.0);
    CHECK(f0.real() == doctest::Approx(0.3989422804014327).epsilon(1e-14));
    CHECK(std::abs(f0.imag()) < 1e-15);

    // Fourier phi_2(0.7) = e^{2i*0.7}/sqrt(2*pi).
    const cplx f2 = eval_basis(th::fourier_spec(4), 2, 0.7);
    const cplx want = std::polar(0.3989422804014327, 1.4);
    CHECK(std::abs(f2 - want) < 1e-14);

    // Hermite psi_0(0) = pi^{-1/4}.
    const cplx h0 = eval_basis(th::hermite_spec(4), 0, 0.0);
    CHECK(h0.real() == doctest::Approx(0.7511255444649425).epsilon(1e-14));
    CHECK(h0.imag() == 0.0);

    // Cosine on [0,1]: phi_2(0.25) = sqrt(2)*cos(pi/2) = 0.
    const cplx c2 = eval_basis(th::cosine_spec(4, 0.0, 1.0), 2, 0.25);
    CHECK(std::abs(c2) < 1e-15);
    // and phi_0 = 1/sqrt(L).
    const cplx c0 = eval_basis(th::cosine_spec(4, 0.0, 1.0), 0, 0.9);
    CHECK(c0.real() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eval_basis rejects out-of-range input") {
    CHECK_THROWS_AS(eval_basis(th::fourier_spec(4), 5, 0.0), invalid_input);
    CHECK_THROWS_AS(eval_basis(th::cosine_spec(4), -1, 0.0), invalid_input);
    CHECK_THROWS_AS(eval_basis(th::fourier_spec(4), 0, 4.0), invalid_input);
    CHECK_NOTHROW(eval_basis(th::hermite_spec(4), 0, 1e6));
}

TEST_CASE("eval_basis_all agrees with eval_basis") {
    for (const BasisSpec& spec :
         {th::fourier_spec(6), th::cosine_spec(6), th::hermite_spec(6)}) {
        for (double theta : {-2.0, -0.3, 0.0, 1.7}) {
            const auto all = eval_basis_all(spec, theta);
            REQUIRE(static_cast<int>(all.size()) == spec.N());
            for (int k = spec.index_min(); k <= spec.K; ++k) {
                const cplx one = eval_basis(spec, k, theta);
                CHECK(std::abs(all[k - spec.index_min()] - one) < 1e-13);
            }
        }
    }
}

TEST_CASE("fourier quadrature: uniform nodes and weights") {
    const QuadratureRule rule = quadrature_for(th::fourier_spec(1), 4);
    REQUIRE(rule.nodes.size() == 4);
    const double want_nodes[4] = {-pi, -pi / 2, 0.0, pi / 2};
    for (int j = 0; j < 4; ++j) {
        CHECK(rule.nodes[j] == doctest::Approx(want_nodes[j]).epsilon(1e-15));
        CHECK(rule.weights[j] == doctest::Approx(pi / 2).epsilon(1e-15));
    }
}

TEST_CASE("quadrature refuses undersampling") {
    CHECK_THROWS_AS(quadrature_for(th::fourier_spec(4), 8), invalid_input);
    CHECK_NOTHROW(quadrature_for(th::fourier_spec(4), 9));
}

TEST_CASE("two-point Gauss-Hermite rule") {
    const QuadratureRule rule = quadrature_for(th::hermite_spec(1), 2);
    REQUIRE(rule.nodes.size() == 2);
    // Nodes come out largest first.
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(rule.nodes[0] == doctest::Approx(r).epsilon(1e-14));
    CHECK(rule.nodes[1] == doctest::Approx(-r).epsilon(1e-14));
    // Stored weights are the modified w_j*e^{x_j^2}; undoing the factor
    // recovers the textbook weights sqrt(pi)/2.
    for (int j = 0; j < 2; ++j) {
        const double wj = rule.weights[j] * std::exp(-rule.nodes[j] * rule.nodes[j]);
        CHECK(wj == doctest::Approx(std::sqrt(pi) / 2).epsilon(1e-14));
    }
}

TEST_CASE("orthonormality under the matched quadrature") {
    for (const BasisSpec& spec :
         {th::fourier_spec(8), th::cosine_spec(8, 0.0, 2.0), th::hermite_spec(8)}) {
        const QuadratureRule rule = quadrature_for(spec, 2 * spec.N());
        double worst = 0.0;
        for (int a = spec.index_min(); a <= spec.K; ++a)
            for (int b = spec.index_min(); b <= spec.K; ++b) {
                cplx s{0.0, 0.0};
                for (std::size_t j = 0; j < rule.nodes.size(); ++j)
                    s += rule.weights[j] * eval_basis(spec, a, rule.nodes[j]) *
                         std::conj(eval_basis(spec, b, rule.nodes[j]));
                worst = std::max(worst, std::abs(s - (a == b ? 1.0 : 0.0)));
            }
        CAPTURE(to_string(spec.kind));
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("cosine Gauss-Legendre rule is orthonormal too") {
    // Gauss-Legendre is exact for polynomials, only spectrally convergent for
    // cosines, so it needs more oversampling than the midpoint rule.
    const BasisSpec spec = th::cosine_spec(6, -1.0, 3.0);
    const QuadratureRule rule =
        quadrature_for(spec, 8 * spec.N(), CosineRule::GaussLegendre);
    double worst = 0.0;
    for (int a = 0; a <= spec.K; ++a)
        for (int b = 0; b <= spec.K; ++b) {
            cplx s{0.0, 0.0};
            for (std::size_t j = 0; j < rule.nodes.size(); ++j)
                s += rule.weights[j] * eval_basis(spec, a, rule.nodes[j]) *
                     std::conj(eval_basis(spec, b, rule.nodes[j]));
            worst = std::max(worst, std::abs(s - (a == b ? 1.0 : 0.0)));
        }
    CHECK(worst < 1e-10);
}

TEST_CASE("advise_basis table") {
    CHECK(advise_basis(Domain::periodic(), BoundaryHint::Periodic).kind ==
          BasisKind::Fourier);
    CHECK(advise_basis(Domain::interval(0.0, 1.0), BoundaryHint::Neumann).kind ==
          BasisKind::Cosine);
    CHECK(advise_basis(Domain::real_line(), BoundaryHint::Decaying).kind ==
          BasisKind::Hermite);
    const BasisAdvice unknown =
        advise_basis(Domain::periodic(), BoundaryHint::Unknown);
    CHECK(unknown.kind == BasisKind::Fourier);
    CHECK(unknown.warning);
    CHECK_FALSE(advise_basis(Domain::periodic(), BoundaryHint::Periodic).warning);
}

TEST_CASE("projecting the uniform density hits only a_0") {
    const BasisSpec spec = th::fourier_spec(8);
    const CoefficientVector c =
        project(spec, [](double) { return 1.0 / (2 * pi); });
    CHECK(c.at(0).real() == doctest::Approx(0.3989422804014327).epsilon(1e-13));
    for (int k = -8; k <= 8; ++k)
        if (k != 0) CHECK(std::abs(c.at(k)) < 1e-12);
}

TEST_CASE("projecting a basis function recovers a unit coefficient") {
    // Real representative of the k=3 Fourier pair.
    const BasisSpec fspec = th::fourier_spec(8);
    const CoefficientVector f = project(fspec, [](double theta) {
        return 2.0 * std::cos(3.0 * theta) / std::sqrt(2 * pi);
    });
    CHECK(std::abs(f.at(3) - cplx(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(f.at(-3) - cplx(1.0, 0.0)) < 1e-12);
    for (int k = -8; k <= 8; ++k)
        if (k != 3 && k != -3) CHECK(std::abs(f.at(k)) < 1e-12);

    const BasisSpec cspec = th::cosine_spec(8, 0.0, 2.0);
    const CoefficientVector c = project(cspec, [&](double theta) {
        return eval_basis(cspec, 3, theta).real();
    });
    CHECK(std::abs(c.at(3) - cplx(1.0, 0.0)) < 1e-12);

    const BasisSpec hspec = th::hermite_spec(8);
    const CoefficientVector h = project(hspec, [&](double theta) {
        return eval_basis(hspec, 2, theta).real();
    });
    CHECK(std::abs(h.at(2) - cplx(1.0, 0.0)) < 1e-12);
    for (int k = 0; k <= 8; ++k)
        if (k != 2) CHECK(std::abs(h.at(k)) < 1e-12);
}

TEST_CASE("projection rejects non-finite samples") {
    const BasisSpec spec = th::fourier_spec(4);
    CHECK_THROWS_AS(
        project(spec, [](double) { return std::nan(""); }),
        invalid_input);
}

TEST_CASE("projection is linear") {
    const BasisSpec spec = th::fourier_spec(8);
    const auto f = th::gaussian_fn(0.3, 0.7);
    const auto g = [](double theta) { return 0.1 + 0.05 * std::sin(theta); };
    const CoefficientVector cf = project(spec, f);
    const CoefficientVector cg = project(spec, g);
    const CoefficientVector mix = project(spec, [&](double theta) {
        return 2.0 * f(theta) + 3.0 * g(theta);
    });
    for (int k = -8; k <= 8; ++k)
        CHECK(std::abs(mix.at(k) - (2.0 * cf.at(k) + 3.0 * cg.at(k))) < 1e-12);
}

TEST_CASE("real densities give Hermitian (or real) coefficients") {
    const CoefficientVector f =
        project(th::fourier_spec(12), th::gaussian_fn(0.4, 0.6));
    for (int k = 1; k <= 12; ++k)
        CHECK(std::abs(f.at(-k) - std::conj(f.at(k))) < 1e-12);

    const CoefficientVector c =
        project(th::cosine_spec(12), th::gaussian_fn(0.4, 0.6));
    for (int k = 0; k <= 12; ++k) CHECK(std::abs(c.at(k).imag()) < 1e-12);

    const CoefficientVector h =
        project(th::hermite_spec(12), th::gaussian_fn(0.0, 1.2));
    for (int k = 0; k <= 12; ++k) CHECK(std::abs(h.at(k).imag()) < 1e-12);
}

TEST_CASE("projection matches a 10x finer quadrature rule") {
    // von Mises density: smooth and periodic, so the uniform rule
    // superconverges and the two resolutions must agree to roundoff. (A
    // gaussian would not do: its derivative jump at the seam caps uniform
    // quadrature at O(M^-2).)
    const BasisSpec spec = th::fourier_spec(32);
    const double i0 = std::cyl_bessel_i(0.0, 2.0);
    const auto f = [i0](double theta) {
        return std::exp(2.0 * std::cos(theta)) / (2 * pi * i0);
    };
    const CoefficientVector coarse = project(spec, f, 256);
    const CoefficientVector fine = project(spec, f, 2560);
    CHECK(th::max_abs_diff(coarse.entries, fine.entries) < 1e-10);
}

TEST_CASE("reconstructing the uniform density") {
    const CoefficientVector c =
        project(th::fourier_spec(8), [](double) { return 1.0 / (2 * pi); });
    const std::vector<double> thetas = {-3.0, -1.2, 0.0, 0.5, 2.9};
    for (double v : reconstruct(c, thetas))
        CHECK(v == doctest::Approx(1.0 / (2 * pi)).epsilon(1e-12));
}

TEST_CASE("reconstruct-after-project is the identity on bandlimited input") {
    const BasisSpec spec = th::fourier_spec(8);
    const auto f = [](double theta) {
        return 0.2 + 0.1 * std::cos(2 * theta) - 0.07 * std::sin(5 * theta) +
               0.03 * std::cos(8 * theta);
    };
    const CoefficientVector c = project(spec, f);
    const std::vector<double> thetas = {-2.7, -0.9, 0.1, 1.3, 3.0};
    const std::vector<double> values = reconstruct(c, thetas);
    for (std::size_t i = 0; i < thetas.size(); ++i)
        CHECK(values[i] == doctest::Approx(f(thetas[i])).epsilon(1e-12));
}

TEST_CASE("truncation error is bounded by the reference tail energy") {
    // Gaussian narrow enough that the K=32 tail is visible above noise.
    const auto f = th::gaussian_fn(0.0, 0.15);
    const CoefficientVector ref = project(th::fourier_spec(128), f, 1024);
    const CoefficientVector c32 = project(th::fourier_spec(32), f, 1024);

    double tail = 0.0;
    for (int k = 33; k <= 128; ++k)
        tail += std::norm(ref.at(k)) + std::norm(ref.at(-k));

    // L2 error of the K=32 reconstruction, on the projection quadrature.
    const QuadratureRule rule = quadrature_for(th::fourier_spec(128), 1024);
    const std::vector<double> recon = reconstruct(c32, rule.nodes);
    double err2 = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        const double d = f(rule.nodes[j]) - recon[j];
        err2 += rule.weights[j] * d * d;
    }
    CHECK(err2 == doctest::Approx(tail).epsilon(1e-6));
}

TEST_CASE("uniform-grid fourier reconstruction matches the direct sum") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    CoefficientVector c{th::fourier_spec(3), std::vector<cplx>(7)};
    c.at(0) = cplx(dist(rng), 0.0);
    for (int k = 1; k <= 3; ++k) {
        c.at(k) = cplx(dist(rng), dist(rng));
        c.at(-k) = std::conj(c.at(k));
    }
    const int M = 16;
    std::vector<double> grid(M);
    for (int j = 0; j < M; ++j) grid[j] = -pi + 2 * pi * j / M;
    const std::vector<double> direct = reconstruct(c, grid);
    const std::vector<double> fast = reconstruct_uniform_fourier(c, M);
    for (int j = 0; j < M; ++j)
        CHECK(fast[j] == doctest::Approx(direct[j]).epsilon(1e-12));
}

TEST_CASE("closed-form moments match the oracle") {
    const CoefficientVector u =
        project(th::fourier_spec(8), [](double) { return 1.0 / (2 * pi); });
    const Moments mu = moments(u);
    CHECK(mu.mass == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(mu.mean) < 1e-13);
    CHECK(mu.variance == doctest::Approx(pi * pi / 3).epsilon(1e-12));

    // Oversampled so quadrature error is negligible; what remains is the
    // K=64 truncation itself. The mean pairs theta's slowly decaying
    // coefficients (~1/k) against the gaussian's seam tail, leaving a
    // genuine ~2e-9 gap between series moments and true truncated moments.
    const Moments mg =
        moments(project(th::fourier_spec(64), th::gaussian_fn(0.3, 0.5), 4096));
    const auto want = oracle::truncated_gaussian_moments(0.3, 0.25, -pi, pi);
    CHECK(mg.mass == doctest::Approx(want.mass).epsilon(1e-9));
    CHECK(mg.mean == doctest::Approx(want.mean).epsilon(5e-8));
    CHECK(mg.variance == doctest::Approx(want.variance).epsilon(1e-8));

    const Moments mc =
        moments(project(th::cosine_spec(64), th::gaussian_fn(0.3, 0.5)));
    CHECK(mc.mean == doctest::Approx(want.mean).epsilon(1e-8));
    CHECK(mc.variance == doctest::Approx(want.variance).epsilon(1e-8));

    CHECK_THROWS_AS(
        moments(project(th::hermite_spec(8), th::gaussian_fn(0.0, 1.0))),
        invalid_input);
}

} // TEST_SUITE
