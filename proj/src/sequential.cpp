#include "hb/sequential.hpp"

#include <cmath>

#include "hb/errors.hpp"

namespace hb {

FilterState filter_init(const CoefficientVector& prior) {
    prior.validate();
    if (prior.spec.kind == BasisKind::Hermite)
        throw invalid_input("sequential filtering requires an updatable basis");

    const double mass = evidence(prior);
    if (!(mass > 0.0) || !std::isfinite(mass))
        throw invalid_input("prior has zero or negative mass; cannot normalize");

    FilterState state;
    state.current = prior;
    for (cplx& v : state.current.entries) v /= mass;
    state.step_count = 0;
    state.log_evidence_sum = 0.0;

    if (std::abs(evidence(state.current) - 1.0) > 1e-7)
        throw numeric_error("normalized prior failed the unit-mass check");
    return state;
}

FilterState filter_step(const FilterState& state,
                        const CoefficientVector& likelihood, ConvMode mode,
                        Engine engine) {
    UpdateResult r = bayes_update(state.current, likelihood, mode, engine);
    FilterState next;
    next.current = std::move(r.posterior);
    next.step_count = state.step_count + 1;
    next.log_evidence_sum = state.log_evidence_sum + std::log(r.evidence_Z);
    return next;
}

std::vector<UpdateResult> separable_update(const SeparableModel& model,
                                           ConvMode mode, Engine engine) {
    if (model.dims.empty())
        throw invalid_input("separable model needs at least one dimension");

    std::vector<UpdateResult> results;
    results.reserve(model.dims.size());
    for (std::size_t d = 0; d < model.dims.size(); ++d) {
        const SeparableDimension& dim = model.dims[d];
        try {
            if (!(dim.prior.spec == dim.spec) || !(dim.likelihood.spec == dim.spec))
                throw invalid_input("declared spec disagrees with the coefficient vectors");
            results.push_back(bayes_update(dim.prior, dim.likelihood, mode, engine));
        } catch (const invalid_input& e) {
            throw invalid_input("dimension " + std::to_string(d) + ": " + e.what());
        } catch (const numeric_error& e) {
            throw numeric_error("dimension " + std::to_string(d) + ": " + e.what());
        }
    }
    return results;
}

double joint_evidence(const std::vector<UpdateResult>& results) {
    double z = 1.0;
    for (const UpdateResult& r : results) z *= r.evidence_Z;
    return z;
}

} // namespace hb
