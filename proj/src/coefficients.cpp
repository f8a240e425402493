#include "hb/coefficients.hpp"

#include <cmath>
#include <numbers>

#include "hb/errors.hpp"
#include "hb/fft.hpp"

namespace hb {

namespace {
constexpr double kPi = std::numbers::pi;
}

CoefficientVector::CoefficientVector(BasisSpec s, std::vector<cplx> e)
    : spec(std::move(s)), entries(std::move(e)) {
    validate();
}

cplx& CoefficientVector::at(int k) {
    if (k < spec.index_min() || k > spec.K)
        throw invalid_input("coefficient index out of range");
    return entries[static_cast<std::size_t>(k - spec.index_min())];
}

const cplx& CoefficientVector::at(int k) const {
    return const_cast<CoefficientVector*>(this)->at(k);
}

void CoefficientVector::validate() const {
    spec.validate();
    if (static_cast<int>(entries.size()) != spec.N())
        throw invalid_input("coefficient count does not match the basis order");
    for (const cplx& v : entries)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw invalid_input("non-finite coefficient entry");
}

CoefficientVector project(const BasisSpec& spec,
                          const std::function<double(double)>& f,
                          const QuadratureRule& rule) {
    spec.validate();
    if (rule.nodes.size() != rule.weights.size() ||
        static_cast<int>(rule.nodes.size()) < spec.N())
        throw invalid_input("quadrature rule too short for this basis");

    std::vector<cplx> acc(static_cast<std::size_t>(spec.N()), cplx(0.0, 0.0));
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        const double fx = f(rule.nodes[j]);
        if (!std::isfinite(fx))
            throw invalid_input("density evaluated to a non-finite value at a quadrature node");
        const double wf = rule.weights[j] * fx;
        const std::vector<cplx> phi = eval_basis_all(spec, rule.nodes[j]);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += wf * std::conj(phi[i]);
    }
    return CoefficientVector(spec, std::move(acc));
}

CoefficientVector project(const BasisSpec& spec,
                          const std::function<double(double)>& f, int M) {
    if (M == 0) M = 2 * spec.N(); // default oversampling against aliasing
    return project(spec, f, quadrature_for(spec, M));
}

Reconstruction reconstruct_full(const CoefficientVector& coeffs,
                                const std::vector<double>& thetas) {
    coeffs.validate();
    Reconstruction rec;
    rec.values.reserve(thetas.size());
    for (double theta : thetas) {
        const std::vector<cplx> phi = eval_basis_all(coeffs.spec, theta);
        cplx s(0.0, 0.0);
        for (std::size_t i = 0; i < phi.size(); ++i) s += coeffs.entries[i] * phi[i];
        rec.values.push_back(s.real());
        rec.max_abs_imag = std::max(rec.max_abs_imag, std::abs(s.imag()));
    }
    return rec;
}

std::vector<double> reconstruct(const CoefficientVector& coeffs,
                                const std::vector<double>& thetas) {
    return reconstruct_full(coeffs, thetas).values;
}

std::vector<double> reconstruct_uniform_fourier(const CoefficientVector& coeffs,
                                                int M) {
    coeffs.validate();
    if (coeffs.spec.kind != BasisKind::Fourier)
        throw invalid_input("uniform fast reconstruction is Fourier-only");
    const int K = coeffs.spec.K;
    if (M <= 2 * K) throw invalid_input("probe grid must resolve all retained modes");

    // With θ_j = lo + jL/M and c the midpoint, φ_k(θ_j) contributes
    // (-1)^k e^{2πikj/M}/√L, so the values are M·idft of the sign-flipped
    // spectrum laid out in standard order of length M.
    const double L = coeffs.spec.domain.length();
    std::vector<cplx> spec_std(static_cast<std::size_t>(M), cplx(0.0, 0.0));
    for (int k = -K; k <= K; ++k) {
        const cplx v = coeffs.entries[static_cast<std::size_t>(k + K)];
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        spec_std[static_cast<std::size_t>((k + M) % M)] = sign * v;
    }
    std::vector<cplx> vals = fft::idft(spec_std);
    std::vector<double> out(static_cast<std::size_t>(M));
    const double scale = static_cast<double>(M) / std::sqrt(L);
    for (int j = 0; j < M; ++j) out[static_cast<std::size_t>(j)] = vals[static_cast<std::size_t>(j)].real() * scale;
    return out;
}

Moments moments(const CoefficientVector& coeffs) {
    coeffs.validate();
    const BasisSpec& spec = coeffs.spec;
    if (spec.kind == BasisKind::Hermite)
        throw invalid_input("closed-form moments are available for Fourier and cosine only");

    const double L = spec.domain.length();
    const double lo = spec.domain.lo;
    const double sqrtL = std::sqrt(L);
    double m0 = 0.0, m1 = 0.0, m2 = 0.0;

    if (spec.kind == BasisKind::Fourier) {
        // ∫θ^m φ_k dθ in closed form: with s = θ - c and ω = 2π/L,
        // ∫e^{ikωs}ds = L·δ_k0, ∫s·e^{ikωs}ds = -iL(-1)^k/(kω),
        // ∫s²·e^{ikωs}ds = 2L(-1)^k/(kω)² (and L³/12 at k = 0).
        const double c = 0.5 * (spec.domain.lo + spec.domain.hi);
        const double omega = 2.0 * kPi / L;
        for (int k = -spec.K; k <= spec.K; ++k) {
            const cplx a = coeffs.entries[static_cast<std::size_t>(k + spec.K)];
            if (k == 0) {
                m0 += a.real() * L / sqrtL;
                m1 += a.real() * (c * L) / sqrtL;
                m2 += a.real() * (c * c * L + L * L * L / 12.0) / sqrtL;
            } else {
                const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
                const cplx i1(0.0, -L * sgn / (k * omega)); // ∫s e^{ikωs}
                const double i2 = 2.0 * L * sgn / (k * omega * k * omega);
                m1 += (a * i1).real() / sqrtL;
                m2 += (a * (2.0 * c * i1 + i2)).real() / sqrtL;
            }
        }
    } else {
        // With u = θ - lo and kω = kπ/L: ∫cos(kωu)du = 0,
        // ∫u·cos(kωu)du = ((-1)^k - 1)/(kω)², ∫u²·cos(kωu)du = 2L(-1)^k/(kω)².
        for (int k = 0; k <= spec.K; ++k) {
            const double a = coeffs.entries[static_cast<std::size_t>(k)].real();
            if (k == 0) {
                m0 += a * sqrtL;
                m1 += a * sqrtL * (lo + L / 2.0);
                m2 += a * sqrtL * (lo * lo + lo * L + L * L / 3.0);
            } else {
                const double kw = k * kPi / L;
                const double iu = (((k % 2 == 0) ? 1.0 : -1.0) - 1.0) / (kw * kw); // ∫u cos
                const double iu2 = 2.0 * L * ((k % 2 == 0) ? 1.0 : -1.0) / (kw * kw); // ∫u² cos
                const double r = std::sqrt(2.0 / L);
                m1 += a * r * iu;
                m2 += a * r * (2.0 * lo * iu + iu2);
            }
        }
    }

    Moments out;
    out.mass = m0;
    if (m0 == 0.0) throw numeric_error("zero-mass coefficient vector has no moments");
    out.mean = m1 / m0;
    out.variance = m2 / m0 - out.mean * out.mean;
    return out;
}

} // namespace hb
