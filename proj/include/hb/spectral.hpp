#pragma once

#include <optional>

#include "hb/coefficients.hpp"

namespace hb {

enum class ConvMode { Circular, Padded };
enum class Engine { Direct, FFT };

// Posterior with bookkeeping. `posterior` is normalized so its
// reconstruction integrates to 1; evidence_Z is the actual integral
// ∫ prior·likelihood dθ; raw_c0 is the product-density coefficient c̃_0
// before normalization; min_density is the minimum of the posterior
// reconstruction on a probe grid (Gibbs undershoot shows up here, never
// clipped); aliasing_estimate = max_k |c_Padded - c_Circular| is present
// only when both modes were computed.
struct UpdateResult {
    CoefficientVector posterior;
    double evidence_Z = 0.0;
    cplx raw_c0{0.0, 0.0};
    double min_density = 0.0;
    std::optional<double> aliasing_estimate;
};

// Reference O(N²) circular convolution over centered indices:
// c̃_k = Σ_m a_m b_{<k-m>} with <n> = ((n + K) mod N) - K. Fourier only.
CoefficientVector circular_convolve_direct(const CoefficientVector& a,
                                           const CoefficientVector& b);

// Full non-wrapped convolution, indices -2K..2K (length 2N-1). Fourier only.
std::vector<cplx> linear_convolve_direct(const CoefficientVector& a,
                                         const CoefficientVector& b);

// The spectral Bayesian update: convolve prior and likelihood coefficients,
// extract the evidence from the 0th product coefficient, normalize.
// Circular is the wrap-around product on N points; Padded zero-pads to the
// full linear convolution and truncates back to -K..K (alias-free for
// bandlimited inputs) and is the default elsewhere in the project.
// Cosine vectors ride through the even Fourier extension on a doubled
// domain; Hermite is rejected (no product rule in this representation).
UpdateResult bayes_update(const CoefficientVector& prior,
                          const CoefficientVector& likelihood,
                          ConvMode mode = ConvMode::Padded,
                          Engine engine = Engine::FFT);

// Runs both modes, returns the requested one with aliasing_estimate filled.
UpdateResult bayes_update_checked(const CoefficientVector& prior,
                                  const CoefficientVector& likelihood,
                                  ConvMode mode = ConvMode::Padded,
                                  Engine engine = Engine::FFT);

// Z = s_0·Re(c_0) with s_0 = <1, φ_0>: √L for Fourier (√(2π) on (-π,π))
// and √L for Cosine. Hermite has no constant function in its span.
double evidence(const CoefficientVector& coeffs);

// √(Σ|a_k|²); equals the L² norm of the reconstruction (Parseval).
double l2_norm(const CoefficientVector& coeffs);

} // namespace hb
