#include "hb/densities.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "hb/errors.hpp"

namespace hb {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &pos);
        } catch (const std::exception&) {
            throw invalid_input("malformed number in density parameters: '" + tok + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size())
            throw invalid_input("malformed number in density parameters: '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

} // namespace

Density uniform_density(const Domain& domain) {
    if (!domain.bounded())
        throw invalid_input("uniform density needs a bounded domain");
    const double level = 1.0 / domain.length();
    return Density{"uniform", [level](double) { return level; }};
}

Density gaussian_density(double mu, double sigma) {
    if (!(sigma > 0.0)) throw invalid_input("gaussian density requires sigma > 0");
    const double norm = 1.0 / (sigma * std::sqrt(2.0 * kPi));
    return Density{"gaussian(" + std::to_string(mu) + "," + std::to_string(sigma) + ")",
                   [mu, sigma, norm](double t) {
                       const double z = (t - mu) / sigma;
                       return norm * std::exp(-0.5 * z * z);
                   }};
}

Density mixture_density(const std::vector<MixtureComponent>& components) {
    if (components.empty()) throw invalid_input("mixture needs at least one component");
    for (const MixtureComponent& c : components) {
        if (!(c.sigma > 0.0)) throw invalid_input("mixture component requires sigma > 0");
        if (c.weight < 0.0) throw invalid_input("mixture weights must be nonnegative");
    }
    std::vector<MixtureComponent> comps = components;
    return Density{"mixture", [comps](double t) {
                       double s = 0.0;
                       for (const MixtureComponent& c : comps) {
                           const double z = (t - c.mu) / c.sigma;
                           s += c.weight * std::exp(-0.5 * z * z) /
                                (c.sigma * std::sqrt(2.0 * kPi));
                       }
                       return s;
                   }};
}

Density indicator_density(double a, double b) {
    if (!(a < b)) throw invalid_input("indicator density requires a < b");
    const double level = 1.0 / (b - a);
    return Density{"indicator(" + std::to_string(a) + "," + std::to_string(b) + ")",
                   [a, b, level](double t) { return (t >= a && t <= b) ? level : 0.0; }};
}

Density grid_density(std::vector<double> thetas, std::vector<double> values,
                     std::string name) {
    if (thetas.size() != values.size() || thetas.size() < 2)
        throw invalid_input("grid density needs at least two (theta, value) samples");
    for (std::size_t i = 0; i < thetas.size(); ++i)
        if (!std::isfinite(thetas[i]) || !std::isfinite(values[i]))
            throw invalid_input("non-finite grid density sample");

    std::vector<std::size_t> order(thetas.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return thetas[a] < thetas[b]; });
    std::vector<double> xs, ys;
    xs.reserve(order.size());
    ys.reserve(order.size());
    for (std::size_t i : order) {
        xs.push_back(thetas[i]);
        ys.push_back(values[i]);
    }
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i] == xs[i - 1]) throw invalid_input("duplicate theta in grid density");

    return Density{std::move(name), [xs, ys](double t) {
                       if (t <= xs.front()) return t == xs.front() ? ys.front() : 0.0;
                       if (t >= xs.back()) return t == xs.back() ? ys.back() : 0.0;
                       const auto it = std::upper_bound(xs.begin(), xs.end(), t);
                       const std::size_t hi = static_cast<std::size_t>(it - xs.begin());
                       const std::size_t lo = hi - 1;
                       const double w = (t - xs[lo]) / (xs[hi] - xs[lo]);
                       return (1.0 - w) * ys[lo] + w * ys[hi];
                   }};
}

Density grid_density_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open grid density file: " + path);
    std::vector<double> xs, ys;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        double x = 0.0, y = 0.0;
        if (!(ls >> x >> y))
            throw invalid_input("malformed grid density row: '" + line + "'");
        xs.push_back(x);
        ys.push_back(y);
    }
    if (in.bad()) throw io_error("read failure on grid density file: " + path);
    return grid_density(std::move(xs), std::move(ys), "grid:" + path);
}

Density parse_density(const std::string& text, const Domain& domain) {
    const std::size_t colon = text.find(':');
    const std::string family = text.substr(0, colon);
    const std::string args =
        colon == std::string::npos ? std::string{} : text.substr(colon + 1);

    if (family == "uniform") {
        if (!args.empty()) throw invalid_input("uniform takes no parameters");
        return uniform_density(domain);
    }
    if (family == "gaussian") {
        const std::vector<double> p = parse_number_list(args);
        if (p.size() != 2) throw invalid_input("gaussian needs MU,SIGMA");
        return gaussian_density(p[0], p[1]);
    }
    if (family == "mixture") {
        std::vector<MixtureComponent> comps;
        std::stringstream ss(args);
        std::string part;
        while (std::getline(ss, part, ';')) {
            const std::vector<double> p = parse_number_list(part);
            if (p.size() != 3)
                throw invalid_input("each mixture component needs WEIGHT,MU,SIGMA");
            comps.push_back({p[0], p[1], p[2]});
        }
        return mixture_density(comps);
    }
    if (family == "indicator") {
        const std::vector<double> p = parse_number_list(args);
        if (p.size() != 2) throw invalid_input("indicator needs A,B");
        return indicator_density(p[0], p[1]);
    }
    if (family == "grid") {
        if (args.empty()) throw invalid_input("grid needs a file path");
        return grid_density_from_file(args);
    }
    throw invalid_input("unknown density family: '" + family + "'");
}

} // namespace hb
