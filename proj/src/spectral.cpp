#include "hb/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "hb/errors.hpp"
#include "hb/fft.hpp"

namespace hb {

namespace {

void require_same_spec(const CoefficientVector& a, const CoefficientVector& b) {
    a.validate();
    b.validate();
    if (!(a.spec == b.spec))
        throw invalid_input("coefficient vectors live on different bases");
}

void require_fourier(const CoefficientVector& a) {
    if (a.spec.kind != BasisKind::Fourier)
        throw invalid_input("convolution is defined on the Fourier basis");
}

// <n> = ((n + K) mod N) - K, the centered wrap.
int wrap_centered(int n, int K, int N) {
    int m = (n + K) % N;
    if (m < 0) m += N;
    return m - K;
}

// Raw centered circular convolution via the FFT kernel. The centered
// labels -K..K are representatives of the residue classes mod N, so the
// reorder to standard DFT layout changes nothing about the cyclic product:
// convolve in standard order, relabel back.
std::vector<cplx> circular_fft_centered(const std::vector<cplx>& a,
                                        const std::vector<cplx>& b) {
    const std::vector<cplx> sa = fft::center_to_standard(a);
    const std::vector<cplx> sb = fft::center_to_standard(b);
    return fft::standard_to_center(fft::fast_circular_convolve(sa, sb));
}

} // namespace

CoefficientVector circular_convolve_direct(const CoefficientVector& a,
                                           const CoefficientVector& b) {
    require_same_spec(a, b);
    require_fourier(a);
    const int K = a.spec.K;
    const int N = a.spec.N();
    std::vector<cplx> out(static_cast<std::size_t>(N), cplx(0.0, 0.0));
    for (int k = -K; k <= K; ++k) {
        cplx s(0.0, 0.0);
        for (int m = -K; m <= K; ++m) {
            const int j = wrap_centered(k - m, K, N);
            s += a.entries[static_cast<std::size_t>(m + K)] *
                 b.entries[static_cast<std::size_t>(j + K)];
        }
        out[static_cast<std::size_t>(k + K)] = s;
    }
    return CoefficientVector(a.spec, std::move(out));
}

std::vector<cplx> linear_convolve_direct(const CoefficientVector& a,
                                         const CoefficientVector& b) {
    require_same_spec(a, b);
    require_fourier(a);
    const int N = a.spec.N();
    std::vector<cplx> out(static_cast<std::size_t>(2 * N - 1), cplx(0.0, 0.0));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            out[static_cast<std::size_t>(i + j)] += a.entries[static_cast<std::size_t>(i)] *
                                                    b.entries[static_cast<std::size_t>(j)];
    return out;
}

namespace {

// Bare convolution of centered Fourier entries, truncated back to -K..K.
// Circular: the wrap-around product on N points. Padded: the zero-extended
// linear product with out-of-range modes dropped.
std::vector<cplx> convolve_truncated(const CoefficientVector& a,
                                     const CoefficientVector& b, ConvMode mode,
                                     Engine engine) {
    const int K = a.spec.K;
    const int N = a.spec.N();
    if (mode == ConvMode::Circular) {
        if (engine == Engine::Direct) return circular_convolve_direct(a, b).entries;
        return circular_fft_centered(a.entries, b.entries);
    }
    std::vector<cplx> lin;
    if (engine == Engine::Direct) {
        lin = linear_convolve_direct(a, b);
    } else {
        lin = fft::fast_linear_convolve(a.entries, b.entries);
    }
    // lin index i corresponds to wavenumber i - 2K; keep -K..K.
    std::vector<cplx> out(static_cast<std::size_t>(N));
    for (int k = -K; k <= K; ++k) out[static_cast<std::size_t>(k + K)] = lin[static_cast<std::size_t>(k + 2 * K)];
    return out;
}

// Even extension of a cosine vector onto the doubled periodic domain
// [lo - L, lo + L]: A_0 = √2·a_0 and A_{±k} = a_k. Cosine products then
// ride the one verified Fourier convolution kernel and map back by the
// inverse scaling.
BasisSpec extension_spec(const BasisSpec& cosine) {
    BasisSpec ext;
    ext.kind = BasisKind::Fourier;
    ext.domain = Domain::periodic(cosine.domain.lo - cosine.domain.length(),
                                  cosine.domain.lo + cosine.domain.length());
    ext.K = cosine.K;
    return ext;
}

CoefficientVector extend_even(const CoefficientVector& c, const BasisSpec& ext) {
    const int K = c.spec.K;
    std::vector<cplx> out(static_cast<std::size_t>(2 * K + 1), cplx(0.0, 0.0));
    out[static_cast<std::size_t>(K)] = std::sqrt(2.0) * c.entries[0];
    for (int k = 1; k <= K; ++k) {
        out[static_cast<std::size_t>(K + k)] = c.entries[static_cast<std::size_t>(k)];
        out[static_cast<std::size_t>(K - k)] = c.entries[static_cast<std::size_t>(k)];
    }
    return CoefficientVector(ext, std::move(out));
}

std::vector<cplx> restrict_even(const std::vector<cplx>& ext_entries, int K) {
    std::vector<cplx> out(static_cast<std::size_t>(K + 1));
    out[0] = ext_entries[static_cast<std::size_t>(K)] / std::sqrt(2.0);
    for (int k = 1; k <= K; ++k) out[static_cast<std::size_t>(k)] = ext_entries[static_cast<std::size_t>(K + k)];
    return out;
}

double probe_min_density(const CoefficientVector& posterior) {
    if (posterior.spec.kind == BasisKind::Fourier) {
        const int M = std::max(512, 2 * posterior.spec.N());
        const std::vector<double> vals = reconstruct_uniform_fourier(posterior, M);
        double mn = vals[0];
        for (double v : vals) mn = std::min(mn, v);
        return mn;
    }
    const int M = std::max(512, 2 * posterior.spec.N());
    const double L = posterior.spec.domain.length();
    std::vector<double> grid(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j)
        grid[static_cast<std::size_t>(j)] = posterior.spec.domain.lo + (j + 0.5) * L / M;
    const std::vector<double> vals = reconstruct(posterior, grid);
    double mn = vals[0];
    for (double v : vals) mn = std::min(mn, v);
    return mn;
}

UpdateResult finalize_update(const BasisSpec& spec, std::vector<cplx> product_coeffs) {
    // product_coeffs are the coefficients of prior·likelihood in spec's own
    // basis (the 1/√L product constant already applied).
    const double L = spec.domain.length();
    const double sqrtL = std::sqrt(L);
    const std::size_t zero_index =
        static_cast<std::size_t>(spec.kind == BasisKind::Fourier ? spec.K : 0);
    const cplx c0 = product_coeffs[zero_index];
    if (std::abs(c0.imag()) > 1e-8 * std::abs(c0))
        throw numeric_error("invalid posterior: product coefficient c_0 is not real");
    const double Z = sqrtL * c0.real();
    if (!(Z > 0.0) || !std::isfinite(Z))
        throw numeric_error("invalid posterior: evidence is not positive");

    for (cplx& v : product_coeffs) v /= Z;
    UpdateResult result;
    result.posterior = CoefficientVector(spec, std::move(product_coeffs));
    result.evidence_Z = Z;
    result.raw_c0 = c0;
    result.min_density = probe_min_density(result.posterior);

    // Probe-grid unit mass; for these bases the probe quadrature resolves
    // the reconstruction exactly, so failure means numerical breakdown.
    const double mass = sqrtL * result.posterior.entries[zero_index].real();
    if (std::abs(mass - 1.0) > 1e-8)
        throw numeric_error("posterior failed the unit-mass check");
    return result;
}

} // namespace

UpdateResult bayes_update(const CoefficientVector& prior,
                          const CoefficientVector& likelihood, ConvMode mode,
                          Engine engine) {
    require_same_spec(prior, likelihood);
    if (prior.spec.kind == BasisKind::Hermite)
        throw invalid_input(
            "the Hermite basis supports projection and diagnostics only; "
            "no product rule is implemented for updates");

    if (prior.spec.kind == BasisKind::Fourier) {
        std::vector<cplx> bare = convolve_truncated(prior, likelihood, mode, engine);
        const double sqrtL = std::sqrt(prior.spec.domain.length());
        for (cplx& v : bare) v /= sqrtL;
        return finalize_update(prior.spec, std::move(bare));
    }

    // Cosine path through the even Fourier extension (doubled domain).
    const BasisSpec ext = extension_spec(prior.spec);
    const CoefficientVector pa = extend_even(prior, ext);
    const CoefficientVector pb = extend_even(likelihood, ext);
    std::vector<cplx> bare = convolve_truncated(pa, pb, mode, engine);
    const double sqrt2L = std::sqrt(ext.domain.length());
    for (cplx& v : bare) v /= sqrt2L;
    return finalize_update(prior.spec, restrict_even(bare, prior.spec.K));
}

UpdateResult bayes_update_checked(const CoefficientVector& prior,
                                  const CoefficientVector& likelihood,
                                  ConvMode mode, Engine engine) {
    UpdateResult padded = bayes_update(prior, likelihood, ConvMode::Padded, engine);
    UpdateResult circular = bayes_update(prior, likelihood, ConvMode::Circular, engine);
    double worst = 0.0;
    for (std::size_t i = 0; i < padded.posterior.entries.size(); ++i)
        worst = std::max(worst, std::abs(padded.posterior.entries[i] -
                                         circular.posterior.entries[i]));
    UpdateResult& chosen = (mode == ConvMode::Padded) ? padded : circular;
    chosen.aliasing_estimate = worst;
    return chosen;
}

double evidence(const CoefficientVector& coeffs) {
    coeffs.validate();
    if (coeffs.spec.kind == BasisKind::Hermite)
        throw invalid_input(
            "evidence needs the constant function in the basis span; "
            "the Hermite family does not contain it");
    const double sqrtL = std::sqrt(coeffs.spec.domain.length());
    const std::size_t zero_index =
        static_cast<std::size_t>(coeffs.spec.kind == BasisKind::Fourier ? coeffs.spec.K : 0);
    return sqrtL * coeffs.entries[zero_index].real();
}

double l2_norm(const CoefficientVector& coeffs) {
    coeffs.validate();
    double s = 0.0;
    for (const cplx& v : coeffs.entries) s += std::norm(v);
    return std::sqrt(s);
}

} // namespace hb
