#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hb/coefficients.hpp"

namespace hb {

enum class DecayClass { Exponential, Algebraic, Flat };

std::string to_string(DecayClass c); // "exponential", "algebraic", "flat/undecided"

struct DecayReport {
    DecayClass decay_class = DecayClass::Flat;
    double gamma = 0.0;       // fitted rate of |a_k| ~ C·e^{-γ|k|}, >= 0
    double alpha = 0.0;       // fitted exponent of |a_k| ~ C·|k|^{-α}
    double fit_quality = 0.0; // R² of the selected model, clamped to [0,1]
    double tail_energy_at_K = 0.0; // inner-tail energy beyond K/2
};

struct SuitabilityVerdict {
    enum class Level { Ideal, Usable, Challenging };
    Level verdict = Level::Challenging;
    std::vector<std::string> reasons;
};

std::string to_string(SuitabilityVerdict::Level v);

// Σ_{|k|>Kp, |k|<=K} |a_k|²: the computable inner tail. It lower-bounds the
// true tail Σ_{|k|>Kp} |a_k|² of the underlying function.
double tail_energy(const CoefficientVector& coeffs, int Kp);

// Least-squares fits of log|a_k| against k (exponential model) and log k
// (algebraic model) over the window |k| in [K/4, K], with near-noise
// magnitudes excluded and a trailing rounding plateau trimmed. The class is
// chosen by residual comparison with a 10% margin; within the margin the
// report stays Flat rather than guessing. Requires K >= 8.
DecayReport fit_decay(const CoefficientVector& coeffs);

// Variant for tests and synthetic controls: fit directly on magnitudes
// mu_j = |a_j|, j = 0..K.
DecayReport fit_decay_magnitudes(const std::vector<double>& mu, int K);

// Smallest K <= K_max whose relative inner-tail energy at a 2·K_max
// reference projection is <= ε²; nullopt when not reached.
std::optional<int> recommend_K(const std::function<double(double)>& f,
                               const BasisSpec& spec_template, double epsilon,
                               int K_max);

// Ideal iff both inputs decay exponentially; Usable when both are at least
// algebraic with α > 1; Challenging otherwise (Gibbs risk, heavy tails).
SuitabilityVerdict suitability(const DecayReport& prior_report,
                               const DecayReport& like_report);

} // namespace hb
