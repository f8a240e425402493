#pragma once

#include <functional>
#include <vector>

#include "hb/basis.hpp"

namespace hb {

// Spectral coefficients a_k = <f, φ_k>, the central currency. Entries are
// stored from index spec.index_min() upward and must stay finite.
struct CoefficientVector {
    BasisSpec spec;
    std::vector<cplx> entries;

    CoefficientVector() = default;
    CoefficientVector(BasisSpec s, std::vector<cplx> e);

    int K() const { return spec.K; }
    int size() const { return static_cast<int>(entries.size()); }

    // Access by wavenumber k (centered for Fourier, 0-based otherwise).
    cplx& at(int k);
    const cplx& at(int k) const;

    void validate() const; // length and finiteness
};

// a_k ≈ Σ_j w_j f(x_j) conj(φ_k(x_j)). Rejects non-finite f values.
CoefficientVector project(const BasisSpec& spec,
                          const std::function<double(double)>& f,
                          const QuadratureRule& rule);

// Convenience: builds the default rule with M nodes (M = 2N when M == 0).
CoefficientVector project(const BasisSpec& spec,
                          const std::function<double(double)>& f, int M = 0);

struct Reconstruction {
    std::vector<double> values;
    double max_abs_imag = 0.0; // imaginary residual of Σ a_k φ_k
};

// Re(Σ_k a_k φ_k(θ)) per point; the imaginary residual is reported so a
// caller can detect non-Hermitian input.
Reconstruction reconstruct_full(const CoefficientVector& coeffs,
                                const std::vector<double>& thetas);
std::vector<double> reconstruct(const CoefficientVector& coeffs,
                                const std::vector<double>& thetas);

// Reconstruction of a Fourier vector on the M-point uniform grid
// lo + jL/M in O(M log M) via a zero-padded inverse DFT. Used by the
// probe-grid checks so an update stays O(N log N) end to end.
std::vector<double> reconstruct_uniform_fourier(const CoefficientVector& coeffs,
                                                int M);

struct Moments {
    double mass = 0.0;
    double mean = 0.0;
    double variance = 0.0;
};

// Exact integrals of {1, θ, θ²} against the reconstruction, evaluated from
// the coefficients in closed form (Fourier and Cosine only).
Moments moments(const CoefficientVector& coeffs);

} // namespace hb
