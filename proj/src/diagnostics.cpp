#include "hb/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "hb/errors.hpp"
#include "hb/spectral.hpp"

namespace hb {

std::string to_string(DecayClass c) {
    switch (c) {
        case DecayClass::Exponential: return "exponential";
        case DecayClass::Algebraic: return "algebraic";
        case DecayClass::Flat: return "flat/undecided";
    }
    return "?";
}

std::string to_string(SuitabilityVerdict::Level v) {
    switch (v) {
        case SuitabilityVerdict::Level::Ideal: return "ideal";
        case SuitabilityVerdict::Level::Usable: return "usable";
        case SuitabilityVerdict::Level::Challenging: return "challenging";
    }
    return "?";
}

double tail_energy(const CoefficientVector& coeffs, int Kp) {
    coeffs.validate();
    if (Kp < 0 || Kp > coeffs.spec.K)
        throw invalid_input("tail cut must lie within 0..K");
    double s = 0.0;
    for (int k = coeffs.spec.index_min(); k <= coeffs.spec.K; ++k)
        if (std::abs(k) > Kp) s += std::norm(coeffs.at(k));
    return s;
}

namespace {

struct LineFit {
    double slope = 0.0;
    double rms_residual = 0.0;
    double r_squared = 0.0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double xm = 0.0, ym = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        xm += x[i];
        ym += y[i];
    }
    xm /= n;
    ym /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - xm) * (x[i] - xm);
        sxy += (x[i] - xm) * (y[i] - ym);
        syy += (y[i] - ym) * (y[i] - ym);
    }
    LineFit fit;
    fit.slope = sxy / sxx;
    const double intercept = ym - fit.slope * xm;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (intercept + fit.slope * x[i]);
        ss_res += r * r;
    }
    fit.rms_residual = std::sqrt(ss_res / n);
    fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 0.0;
    return fit;
}

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

} // namespace

DecayReport fit_decay_magnitudes(const std::vector<double>& mu, int K) {
    if (K < 8) throw invalid_input("decay fitting needs K >= 8");
    if (static_cast<int>(mu.size()) < K + 1)
        throw invalid_input("magnitude sequence shorter than K");

    // Asymptotics live in the outer window [K/4, K]; low modes carry bulk
    // shape, not decay.
    const int j_lo = std::max(1, K / 4);
    std::vector<double> js, m;
    for (int j = j_lo; j <= K; ++j) {
        if (mu[static_cast<std::size_t>(j)] > 0.0) {
            js.push_back(static_cast<double>(j));
            m.push_back(mu[static_cast<std::size_t>(j)]);
        }
    }

    DecayReport report;
    auto flat_report = [&]() {
        report.decay_class = DecayClass::Flat;
        report.gamma = 0.0;
        report.alpha = 0.0;
        report.fit_quality = 0.0;
        return report;
    };
    if (m.empty()) return flat_report();

    // Near machine noise relative to the window scale carries no decay
    // information.
    const double wmax = *std::max_element(m.begin(), m.end());
    {
        std::vector<double> js2, m2;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] >= 1e-14 * wmax) {
                js2.push_back(js[i]);
                m2.push_back(m[i]);
            }
        js = std::move(js2);
        m = std::move(m2);
    }

    // Fast-decaying sequences bottom out on a rounding plateau well above
    // the relative cutoff; trim it so the plateau cannot masquerade as an
    // algebraic tail. (Plateau detection in the chebfun tradition.)
    if (m.size() >= 8) {
        const double mmax = *std::max_element(m.begin(), m.end());
        const double mmin = *std::min_element(m.begin(), m.end());
        if (mmax / mmin > 1e8) {
            const std::size_t tail_n = std::max<std::size_t>(3, m.size() / 8);
            std::vector<double> tail(m.end() - static_cast<std::ptrdiff_t>(tail_n), m.end());
            std::sort(tail.begin(), tail.end());
            const double floor = tail[tail.size() / 2];
            std::vector<double> js2, m2;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] >= 10.0 * floor) {
                    js2.push_back(js[i]);
                    m2.push_back(m[i]);
                }
            if (js2.size() >= 4) {
                js = std::move(js2);
                m = std::move(m2);
            }
        }
    }

    if (m.size() < 4) return flat_report();

    // Bin-average before fitting: oscillatory magnitude patterns (zeros of
    // sin-like coefficient sequences) otherwise swamp the residual
    // comparison.
    std::vector<double> fit_j = js, fit_m = m;
    if (m.size() >= 12) {
        const std::size_t nb = std::min<std::size_t>(12, std::max<std::size_t>(4, m.size() / 2));
        const double j0 = js.front(), j1 = js.back() + 1e-9;
        std::vector<double> bj(nb, 0.0), bm(nb, 0.0);
        std::vector<int> bc(nb, 0);
        for (std::size_t i = 0; i < js.size(); ++i) {
            std::size_t bin = static_cast<std::size_t>((js[i] - j0) / (j1 - j0) * static_cast<double>(nb));
            bin = std::min(bin, nb - 1);
            bj[bin] += js[i];
            bm[bin] += m[i];
            bc[bin] += 1;
        }
        fit_j.clear();
        fit_m.clear();
        for (std::size_t i = 0; i < nb; ++i)
            if (bc[i] > 0) {
                fit_j.push_back(bj[i] / bc[i]);
                fit_m.push_back(bm[i] / bc[i]);
            }
    }

    std::vector<double> log_m(fit_m.size()), log_j(fit_j.size());
    for (std::size_t i = 0; i < fit_m.size(); ++i) {
        log_m[i] = std::log(fit_m[i]);
        log_j[i] = std::log(fit_j[i]);
    }

    // A window whose magnitudes all agree to one part in 1e9 carries no decay
    // signal; without this guard the model comparison below is decided by
    // rounding noise.
    const auto [lm_min, lm_max] = std::minmax_element(log_m.begin(), log_m.end());
    if (*lm_max - *lm_min < 1e-9) return flat_report();

    const LineFit exp_fit = least_squares(fit_j, log_m); // log|a| ~ -γ·j
    const LineFit alg_fit = least_squares(log_j, log_m); // log|a| ~ -α·log j

    report.gamma = std::max(0.0, -exp_fit.slope);
    report.alpha = -alg_fit.slope;

    // Residual comparison with a 10% margin; within the margin the class
    // stays undecided rather than flipping on noise.
    constexpr double margin = 0.10;
    if (exp_fit.rms_residual < (1.0 - margin) * alg_fit.rms_residual &&
        -exp_fit.slope > 0.0) {
        report.decay_class = DecayClass::Exponential;
        report.fit_quality = clamp01(exp_fit.r_squared);
    } else if (alg_fit.rms_residual < (1.0 - margin) * exp_fit.rms_residual) {
        report.decay_class = DecayClass::Algebraic;
        report.fit_quality = clamp01(alg_fit.r_squared);
    } else {
        report.decay_class = DecayClass::Flat;
        report.fit_quality = clamp01(std::max(exp_fit.r_squared, alg_fit.r_squared));
    }
    return report;
}

DecayReport fit_decay(const CoefficientVector& coeffs) {
    coeffs.validate();
    const int K = coeffs.spec.K;
    if (K < 8) throw invalid_input("decay fitting needs K >= 8");

    std::vector<double> mu(static_cast<std::size_t>(K) + 1, 0.0);
    if (coeffs.spec.kind == BasisKind::Fourier) {
        for (int j = 0; j <= K; ++j)
            mu[static_cast<std::size_t>(j)] =
                j == 0 ? std::abs(coeffs.at(0))
                       : 0.5 * (std::abs(coeffs.at(j)) + std::abs(coeffs.at(-j)));
    } else {
        for (int j = 0; j <= K; ++j) mu[static_cast<std::size_t>(j)] = std::abs(coeffs.at(j));
    }

    DecayReport report = fit_decay_magnitudes(mu, K);
    report.tail_energy_at_K = tail_energy(coeffs, K / 2);
    return report;
}

std::optional<int> recommend_K(const std::function<double(double)>& f,
                               const BasisSpec& spec_template, double epsilon,
                               int K_max) {
    if (!(epsilon > 0.0)) throw invalid_input("epsilon must be positive");
    if (K_max < 0) throw invalid_input("K_max must be nonnegative");

    BasisSpec ref = spec_template;
    ref.K = 2 * K_max;
    const CoefficientVector coeffs = project(ref, f); // default 2N oversampling

    const double total = l2_norm(coeffs);
    if (total == 0.0) throw invalid_input("cannot recommend K for an all-zero projection");
    const double budget = epsilon * epsilon * total * total;

    // tail_at[j] = Σ_{|k|>j} |a_k|², accumulated from the outside in; it is
    // monotone decreasing in j, so the first K under budget is the smallest.
    std::vector<double> tail_at(static_cast<std::size_t>(ref.K) + 1, 0.0);
    double tail = 0.0;
    for (int j = ref.K; j >= 0; --j) {
        tail_at[static_cast<std::size_t>(j)] = tail;
        if (j >= 1) {
            tail += std::norm(coeffs.at(j));
            if (ref.kind == BasisKind::Fourier) tail += std::norm(coeffs.at(-j));
        }
    }
    for (int K = 0; K <= K_max; ++K)
        if (tail_at[static_cast<std::size_t>(K)] <= budget) return K;
    return std::nullopt;
}

SuitabilityVerdict suitability(const DecayReport& prior_report,
                               const DecayReport& like_report) {
    SuitabilityVerdict verdict;
    const DecayReport* reports[2] = {&prior_report, &like_report};
    const char* names[2] = {"prior", "likelihood"};

    bool all_exponential = true, all_usable = true;
    for (int i = 0; i < 2; ++i) {
        const DecayReport& r = *reports[i];
        if (r.decay_class != DecayClass::Exponential) all_exponential = false;
        if (r.decay_class == DecayClass::Flat) {
            all_usable = false;
            verdict.reasons.push_back(std::string(names[i]) +
                                      ": no measurable coefficient decay (heavy "
                                      "spectral tails; truncation untrustworthy)");
        } else if (r.decay_class == DecayClass::Algebraic && r.alpha <= 1.0) {
            all_usable = false;
            verdict.reasons.push_back(std::string(names[i]) +
                                      ": algebraic decay with exponent <= 1 "
                                      "(discontinuity-grade tails, Gibbs oscillation risk)");
        }
    }

    if (all_exponential) {
        verdict.verdict = SuitabilityVerdict::Level::Ideal;
        verdict.reasons.push_back("both inputs decay exponentially (analytic-grade smoothness)");
    } else if (all_usable) {
        verdict.verdict = SuitabilityVerdict::Level::Usable;
        verdict.reasons.push_back(
            "both inputs decay at least algebraically with exponent > 1; expect "
            "polynomial truncation error and mild Gibbs artifacts");
    } else {
        verdict.verdict = SuitabilityVerdict::Level::Challenging;
    }
    return verdict;
}

} // namespace hb
