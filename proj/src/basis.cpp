#include "hb/basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hb/errors.hpp"

namespace hb {

namespace {

constexpr double kPi = std::numbers::pi;

} // namespace

Domain Domain::periodic(double lo, double hi) {
    if (!(lo < hi)) throw invalid_input("domain requires lo < hi");
    return Domain{Kind::PeriodicInterval, lo, hi};
}

Domain Domain::periodic() { return periodic(-kPi, kPi); }

Domain Domain::interval(double lo, double hi) {
    if (!(lo < hi)) throw invalid_input("domain requires lo < hi");
    return Domain{Kind::Interval, lo, hi};
}

Domain Domain::real_line() { return Domain{Kind::RealLine, 0.0, 0.0}; }

double Domain::length() const {
    if (!bounded()) throw invalid_input("real-line domain has no finite length");
    return hi - lo;
}

bool Domain::contains(double theta) const {
    if (!bounded()) return std::isfinite(theta);
    return theta >= lo && theta <= hi;
}

bool operator==(const Domain& a, const Domain& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Domain::Kind::RealLine) return true;
    return a.lo == b.lo && a.hi == b.hi;
}

std::string to_string(BasisKind kind) {
    switch (kind) {
        case BasisKind::Fourier: return "fourier";
        case BasisKind::Cosine: return "cosine";
        case BasisKind::Hermite: return "hermite";
    }
    return "?";
}

int BasisSpec::N() const {
    return kind == BasisKind::Fourier ? 2 * K + 1 : K + 1;
}

void BasisSpec::validate() const {
    if (K < 0) throw invalid_input("basis order K must be nonnegative");
    switch (kind) {
        case BasisKind::Fourier:
            if (domain.kind != Domain::Kind::PeriodicInterval)
                throw invalid_input("Fourier basis requires a periodic interval");
            break;
        case BasisKind::Cosine:
            if (domain.kind != Domain::Kind::Interval)
                throw invalid_input("cosine basis requires a bounded interval");
            break;
        case BasisKind::Hermite:
            if (domain.kind != Domain::Kind::RealLine)
                throw invalid_input("Hermite basis requires the real line");
            break;
    }
}

bool operator==(const BasisSpec& a, const BasisSpec& b) {
    return a.kind == b.kind && a.domain == b.domain && a.K == b.K;
}

namespace {

void check_theta(const BasisSpec& spec, double theta) {
    if (!spec.domain.contains(theta))
        throw invalid_input("evaluation point outside the basis domain");
}

// ψ_0 = π^{-1/4} e^{-θ²/2}, ψ_1 = √2·θ·ψ_0,
// ψ_{k+1} = √(2/(k+1))·θ·ψ_k - √(k/(k+1))·ψ_{k-1}.
// Equivalent to (2^k k! √π)^{-1/2} H_k(θ) e^{-θ²/2} but each iterate stays
// O(1), so no factorial overflow at any K.
void hermite_psi_all(int K, double theta, std::vector<double>& out) {
    out.resize(static_cast<std::size_t>(K) + 1);
    const double psi0 = std::pow(kPi, -0.25) * std::exp(-0.5 * theta * theta);
    out[0] = psi0;
    if (K == 0) return;
    out[1] = std::sqrt(2.0) * theta * psi0;
    for (int k = 1; k < K; ++k) {
        out[k + 1] = std::sqrt(2.0 / (k + 1)) * theta * out[k] -
                     std::sqrt(static_cast<double>(k) / (k + 1)) * out[k - 1];
    }
}

} // namespace

cplx eval_basis(const BasisSpec& spec, int k, double theta) {
    spec.validate();
    if (k < spec.index_min() || k > spec.K)
        throw invalid_input("basis index out of range");
    check_theta(spec, theta);

    switch (spec.kind) {
        case BasisKind::Fourier: {
            const double L = spec.domain.length();
            const double omega = 2.0 * kPi / L;
            const double c = 0.5 * (spec.domain.lo + spec.domain.hi);
            return std::polar(1.0 / std::sqrt(L), k * omega * (theta - c));
        }
        case BasisKind::Cosine: {
            const double L = spec.domain.length();
            if (k == 0) return cplx(1.0 / std::sqrt(L), 0.0);
            const double u = theta - spec.domain.lo;
            return cplx(std::sqrt(2.0 / L) * std::cos(k * kPi * u / L), 0.0);
        }
        case BasisKind::Hermite: {
            std::vector<double> psi;
            hermite_psi_all(k, theta, psi);
            return cplx(psi[static_cast<std::size_t>(k)], 0.0);
        }
    }
    throw invalid_input("unknown basis kind");
}

std::vector<cplx> eval_basis_all(const BasisSpec& spec, double theta) {
    spec.validate();
    check_theta(spec, theta);
    std::vector<cplx> out(static_cast<std::size_t>(spec.N()));

    switch (spec.kind) {
        case BasisKind::Fourier: {
            const double L = spec.domain.length();
            const double omega = 2.0 * kPi / L;
            const double c = 0.5 * (spec.domain.lo + spec.domain.hi);
            const cplx step = std::polar(1.0, omega * (theta - c));
            cplx cur = std::polar(1.0 / std::sqrt(L), -spec.K * omega * (theta - c));
            for (int k = -spec.K; k <= spec.K; ++k) {
                out[static_cast<std::size_t>(k + spec.K)] = cur;
                cur *= step;
            }
            break;
        }
        case BasisKind::Cosine: {
            const double L = spec.domain.length();
            const double u = theta - spec.domain.lo;
            out[0] = cplx(1.0 / std::sqrt(L), 0.0);
            for (int k = 1; k <= spec.K; ++k)
                out[static_cast<std::size_t>(k)] =
                    cplx(std::sqrt(2.0 / L) * std::cos(k * kPi * u / L), 0.0);
            break;
        }
        case BasisKind::Hermite: {
            std::vector<double> psi;
            hermite_psi_all(spec.K, theta, psi);
            for (int k = 0; k <= spec.K; ++k)
                out[static_cast<std::size_t>(k)] = cplx(psi[static_cast<std::size_t>(k)], 0.0);
            break;
        }
    }
    return out;
}

namespace {

// Roots of ψ_M by Newton iteration, largest first, with the classic
// asymptotic initial guesses. ψ_M'(x) = √(2M)·ψ_{M-1}(x) - x·ψ_M(x).
std::vector<double> gauss_hermite_nodes(int M) {
    std::vector<double> roots(static_cast<std::size_t>(M));
    std::vector<double> psi;
    const int half = (M + 1) / 2;
    double z = 0.0, z_prev = 0.0, z_prev2 = 0.0;
    for (int i = 0; i < half; ++i) {
        if (i == 0) {
            z = std::sqrt(2.0 * M + 1.0) -
                1.85575 * std::pow(2.0 * M + 1.0, -1.0 / 6.0);
        } else if (i == 1) {
            z -= 1.14 * std::pow(static_cast<double>(M), 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * z_prev2;
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * z_prev2;
        } else {
            z = 2.0 * z - z_prev2;
        }
        for (int it = 0; it < 100; ++it) {
            hermite_psi_all(M, z, psi);
            const double pM = psi[static_cast<std::size_t>(M)];
            const double dM = std::sqrt(2.0 * M) * psi[static_cast<std::size_t>(M - 1)] - z * pM;
            const double dz = pM / dM;
            z -= dz;
            if (std::abs(dz) <= 1e-15 * std::max(1.0, std::abs(z))) break;
        }
        z_prev2 = z_prev;
        z_prev = z;
        roots[static_cast<std::size_t>(i)] = z;
        roots[static_cast<std::size_t>(M - 1 - i)] = -z;
    }
    if (M % 2 == 1) roots[static_cast<std::size_t>(half - 1)] = 0.0;
    return roots;
}

} // namespace

QuadratureRule quadrature_for(const BasisSpec& spec, int M, CosineRule cosine_rule) {
    spec.validate();
    if (M < spec.N())
        throw invalid_input("quadrature needs at least N nodes (oversampling mandatory)");

    QuadratureRule rule;
    rule.nodes.reserve(static_cast<std::size_t>(M));
    rule.weights.reserve(static_cast<std::size_t>(M));

    switch (spec.kind) {
        case BasisKind::Fourier: {
            const double L = spec.domain.length();
            for (int j = 0; j < M; ++j) {
                rule.nodes.push_back(spec.domain.lo + j * L / M);
                rule.weights.push_back(L / M);
            }
            rule.exactness_note =
                "uniform rule on [lo, hi): exact for trigonometric polynomials of degree < " +
                std::to_string(M);
            break;
        }
        case BasisKind::Cosine: {
            const double L = spec.domain.length();
            if (cosine_rule == CosineRule::Midpoint) {
                for (int j = 0; j < M; ++j) {
                    rule.nodes.push_back(spec.domain.lo + (j + 0.5) * L / M);
                    rule.weights.push_back(L / M);
                }
                rule.exactness_note =
                    "midpoint rule: exact for cos(k pi u/L) with k < " + std::to_string(2 * M);
            } else {
                // Gauss-Legendre on [-1, 1], mapped to [lo, hi]. Newton on the
                // Legendre recurrence.
                for (int i = 0; i < (M + 1) / 2; ++i) {
                    double x = std::cos(kPi * (i + 0.75) / (M + 0.5));
                    double p0 = 0.0, p1 = 0.0;
                    for (int it = 0; it < 100; ++it) {
                        p0 = 1.0;
                        p1 = x;
                        for (int n = 2; n <= M; ++n) {
                            const double p2 = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
                            p0 = p1;
                            p1 = p2;
                        }
                        const double dp = M * (x * p1 - p0) / (x * x - 1.0);
                        const double dx = p1 / dp;
                        x -= dx;
                        if (std::abs(dx) <= 1e-15) break;
                    }
                    p0 = 1.0;
                    p1 = x;
                    for (int n = 2; n <= M; ++n) {
                        const double p2 = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
                        p0 = p1;
                        p1 = p2;
                    }
                    const double dp = M * (x * p1 - p0) / (x * x - 1.0);
                    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
                    const double mid = 0.5 * (spec.domain.lo + spec.domain.hi);
                    const double halfL = 0.5 * L;
                    // store symmetric pair positions; fill then sort below
                    rule.nodes.push_back(mid - halfL * x);
                    rule.weights.push_back(halfL * w);
                    if (2 * i + 1 < M) {
                        rule.nodes.push_back(mid + halfL * x);
                        rule.weights.push_back(halfL * w);
                    }
                }
                // keep nodes ascending for readability
                std::vector<std::size_t> idx(rule.nodes.size());
                for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
                std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
                    return rule.nodes[a] < rule.nodes[b];
                });
                QuadratureRule sorted;
                for (std::size_t i : idx) {
                    sorted.nodes.push_back(rule.nodes[i]);
                    sorted.weights.push_back(rule.weights[i]);
                }
                rule.nodes = std::move(sorted.nodes);
                rule.weights = std::move(sorted.weights);
                rule.exactness_note =
                    "Gauss-Legendre: exact for polynomials of degree < " + std::to_string(2 * M);
            }
            break;
        }
        case BasisKind::Hermite: {
            // Modified weights w~_j = w_j·e^{x_j²} = 1/Σ_{k<M} ψ_k(x_j)²; the
            // Gaussian factor lives inside ψ_k, so these are the weights that
            // make Σ_j w~_j ψ_a(x_j) ψ_b(x_j) = δ_ab without ever forming
            // e^{x²} explicitly.
            rule.nodes = gauss_hermite_nodes(M);
            std::vector<double> psi;
            for (double x : rule.nodes) {
                hermite_psi_all(M - 1, x, psi);
                double s = 0.0;
                for (int k = 0; k < M; ++k) s += psi[static_cast<std::size_t>(k)] * psi[static_cast<std::size_t>(k)];
                rule.weights.push_back(1.0 / s);
            }
            rule.exactness_note =
                "Gauss-Hermite (weights pre-multiplied by e^{x²}): exact for "
                "ψ_a ψ_b with a + b < " + std::to_string(2 * M);
            break;
        }
    }
    return rule;
}

BasisAdvice advise_basis(const Domain& domain, BoundaryHint hint) {
    switch (hint) {
        case BoundaryHint::Periodic:
            return {BasisKind::Fourier,
                    "periodic boundary conditions: the Fourier basis is the natural and "
                    "optimal choice",
                    false};
        case BoundaryHint::Neumann:
            return {BasisKind::Cosine,
                    "bounded interval with Neumann (zero-derivative) boundaries: the cosine "
                    "basis imposes exactly that condition",
                    false};
        case BoundaryHint::Decaying:
            return {BasisKind::Hermite,
                    "decaying density on the real line: Hermite functions share the "
                    "Gaussian-type decay",
                    false};
        case BoundaryHint::Unknown:
        default:
            break;
    }
    std::string note =
        "boundary behavior unknown: defaulting to Fourier; expect slow coefficient "
        "decay if the density is not periodic on this domain";
    if (domain.kind == Domain::Kind::RealLine)
        note += " (a real-line domain with decaying tails would prefer Hermite)";
    return {BasisKind::Fourier, note, true};
}

} // namespace hb
