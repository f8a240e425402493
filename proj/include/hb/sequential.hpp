#pragma once

#include "hb/spectral.hpp"

namespace hb {

// Posterior-becomes-prior chaining. States are values; step returns a new
// one. The current coefficients are renormalized every step so the c_0
// scale cannot drift across long chains.
struct FilterState {
    CoefficientVector current; // always unit mass
    int step_count = 0;
    double log_evidence_sum = 0.0;
};

// Renormalizes the prior (rejecting zero mass) and starts the chain.
FilterState filter_init(const CoefficientVector& prior);

FilterState filter_step(const FilterState& state,
                        const CoefficientVector& likelihood,
                        ConvMode mode = ConvMode::Padded,
                        Engine engine = Engine::FFT);

struct SeparableDimension {
    BasisSpec spec;
    CoefficientVector prior;
    CoefficientVector likelihood;
};

// p(θ) ≈ Π_j p_j(θ_j): per-dimension independent factors. The
// factorization itself is the caller's assertion and is not verified.
struct SeparableModel {
    std::vector<SeparableDimension> dims;
};

// One bayes_update per dimension; errors are annotated with the dimension
// index. Joint evidence is the product of the per-dimension evidences.
std::vector<UpdateResult> separable_update(const SeparableModel& model,
                                           ConvMode mode = ConvMode::Padded,
                                           Engine engine = Engine::FFT);

double joint_evidence(const std::vector<UpdateResult>& results);

} // namespace hb
