#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "hb/basis.hpp"
#include "hb/coefficients.hpp"

namespace th {

inline constexpr double pi = std::numbers::pi;

inline hb::BasisSpec fourier_spec(int K) {
    return hb::BasisSpec{hb::BasisKind::Fourier, hb::Domain::periodic(), K};
}

inline hb::BasisSpec cosine_spec(int K, double lo = -pi, double hi = pi) {
    return hb::BasisSpec{hb::BasisKind::Cosine, hb::Domain::interval(lo, hi), K};
}

inline hb::BasisSpec hermite_spec(int K) {
    return hb::BasisSpec{hb::BasisKind::Hermite, hb::Domain::real_line(), K};
}

inline double max_abs_diff(const std::vector<hb::cplx>& a,
                           const std::vector<hb::cplx>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline double max_abs(const std::vector<hb::cplx>& a) {
    double m = 0.0;
    for (const hb::cplx& v : a) m = std::max(m, std::abs(v));
    return m;
}

// Relative max-norm distance, the yardstick of the equivalence checks.
inline double rel_max_diff(const std::vector<hb::cplx>& a,
                           const std::vector<hb::cplx>& b) {
    return max_abs_diff(a, b) / max_abs(b);
}

inline double gaussian_pdf(double theta, double mu, double sigma) {
    const double z = (theta - mu) / sigma;
    return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * pi));
}

// N(mu, sigma²) as a θ-density handle; projection truncates it to the
// domain implicitly.
inline std::function<double(double)> gaussian_fn(double mu, double sigma) {
    return [mu, sigma](double theta) { return gaussian_pdf(theta, mu, sigma); };
}

} // namespace th
