#include "hb/oracles.hpp"

#include <cmath>
#include <numbers>

#include "hb/errors.hpp"

namespace hb::oracle {

GridPosterior grid_posterior(const std::function<double(double)>& prior_fn,
                             const std::function<double(double)>& like_fn,
                             double lo, double hi, int M) {
    if (!(lo < hi)) throw invalid_input("grid oracle requires lo < hi");
    if (M < 16) throw invalid_input("grid oracle requires at least 16 nodes");

    GridPosterior out;
    out.grid.resize(static_cast<std::size_t>(M));
    out.density.resize(static_cast<std::size_t>(M));
    const double h = (hi - lo) / (M - 1);
    for (int i = 0; i < M; ++i) {
        const double theta = lo + i * h;
        const double p = prior_fn(theta);
        const double l = like_fn(theta);
        if (!std::isfinite(p) || !std::isfinite(l))
            throw invalid_input("non-finite density value on the oracle grid");
        if (p < 0.0 || l < 0.0)
            throw invalid_input("grid oracle requires nonnegative densities");
        out.grid[static_cast<std::size_t>(i)] = theta;
        out.density[static_cast<std::size_t>(i)] = p * l;
    }

    double z = 0.0;
    for (int i = 0; i < M; ++i) {
        const double w = (i == 0 || i == M - 1) ? 0.5 * h : h;
        z += w * out.density[static_cast<std::size_t>(i)];
    }
    if (!(z > 0.0)) throw numeric_error("degenerate prior/likelihood pair: zero evidence");

    out.evidence = z;
    for (double& d : out.density) d /= z;
    return out;
}

ConjugatePosterior conjugate_gaussian_posterior(double mu0, double var0,
                                                double x, double var_l) {
    if (!(var0 > 0.0) || !(var_l > 0.0))
        throw invalid_input("conjugate formula requires positive variances");
    ConjugatePosterior out;
    out.var_star = 1.0 / (1.0 / var0 + 1.0 / var_l);
    out.mu_star = out.var_star * (mu0 / var0 + x / var_l);
    return out;
}

TruncatedGaussianMoments truncated_gaussian_moments(double mu, double var,
                                                    double lo, double hi) {
    if (!(var > 0.0)) throw invalid_input("truncated moments require positive variance");
    if (!(lo < hi)) throw invalid_input("truncated moments require lo < hi");

    const double sigma = std::sqrt(var);
    const double alpha = (lo - mu) / sigma;
    const double beta = (hi - mu) / sigma;
    const auto Phi = [](double t) { return 0.5 * std::erfc(-t / std::sqrt(2.0)); };
    const auto phi = [](double t) {
        return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::numbers::pi);
    };

    TruncatedGaussianMoments out;
    out.mass = Phi(beta) - Phi(alpha);
    if (!(out.mass > 0.0))
        throw numeric_error("truncation removed essentially all probability mass");
    const double d = (phi(alpha) - phi(beta)) / out.mass;
    out.mean = mu + sigma * d;
    out.variance = var * (1.0 + (alpha * phi(alpha) - beta * phi(beta)) / out.mass - d * d);
    return out;
}

} // namespace hb::oracle
