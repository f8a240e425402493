#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hb/basis.hpp"

namespace hb {

// Densities arrive as evaluable handles. Unnormalized inputs are fine;
// only an update's normalization step enforces unit mass.
struct Density {
    std::string name;
    std::function<double(double)> fn;

    double operator()(double theta) const { return fn(theta); }
};

Density uniform_density(const Domain& domain); // 1/L on a bounded domain
Density gaussian_density(double mu, double sigma);
struct MixtureComponent {
    double weight;
    double mu;
    double sigma;
};
Density mixture_density(const std::vector<MixtureComponent>& components);
Density indicator_density(double a, double b); // 1/(b-a) on [a, b]

// Two-column samples (theta, value), linearly interpolated between nodes
// and zero outside their range. Interpolation limits projection accuracy
// to second order in the sample spacing.
Density grid_density(std::vector<double> thetas, std::vector<double> values,
                     std::string name = "grid");
Density grid_density_from_file(const std::string& path);

// CLI density syntax:
//   uniform
//   gaussian:MU,SIGMA
//   mixture:W,MU,SIGMA;W,MU,SIGMA;...
//   indicator:A,B
//   grid:PATH
Density parse_density(const std::string& text, const Domain& domain);

} // namespace hb
