#pragma once

#include <functional>
#include <vector>

namespace hb::oracle {

// Independent ground truth for tests and --check runs. Deliberately shares
// no code with the spectral machinery: plain pointwise products and
// trapezoid sums only.

struct GridPosterior {
    std::vector<double> grid;
    std::vector<double> density; // normalized to unit trapezoid mass
    double evidence = 0.0;
};

// Pointwise prior·likelihood on a uniform M-point grid over [lo, hi],
// trapezoid evidence, normalized density. M >= 16; functions must be
// nonnegative on the grid.
GridPosterior grid_posterior(const std::function<double(double)>& prior_fn,
                             const std::function<double(double)>& like_fn,
                             double lo, double hi, int M);

struct ConjugatePosterior {
    double mu_star = 0.0;
    double var_star = 0.0;
};

// Gaussian prior N(mu0, var0) with Gaussian likelihood N(x; θ, var_l):
// var* = (1/var0 + 1/var_l)^{-1}, mu* = var*·(mu0/var0 + x/var_l).
ConjugatePosterior conjugate_gaussian_posterior(double mu0, double var0,
                                                double x, double var_l);

struct TruncatedGaussianMoments {
    double mass = 0.0; // Φ(β) - Φ(α), the retained probability
    double mean = 0.0;
    double variance = 0.0;
};

// Closed-form moments of N(mu, var) restricted to [lo, hi] and
// renormalized. This is the apples-to-apples companion of
// conjugate_gaussian_posterior when both sides of a comparison live on a
// bounded domain.
TruncatedGaussianMoments truncated_gaussian_moments(double mu, double var,
                                                    double lo, double hi);

} // namespace hb::oracle
