#pragma once

#include <complex>
#include <string>
#include <vector>

namespace hb {

using cplx = std::complex<double>;

// Ω: the support a basis lives on.
struct Domain {
    enum class Kind { PeriodicInterval, Interval, RealLine };

    Kind kind = Kind::PeriodicInterval;
    double lo = 0.0; // unused for RealLine
    double hi = 0.0;

    static Domain periodic(double lo, double hi);
    static Domain periodic(); // (-pi, pi), the Fourier default
    static Domain interval(double lo, double hi);
    static Domain real_line();

    bool bounded() const { return kind != Kind::RealLine; }
    double length() const; // hi - lo; error for RealLine
    bool contains(double theta) const;
};

bool operator==(const Domain& a, const Domain& b);

enum class BasisKind { Fourier, Cosine, Hermite };

std::string to_string(BasisKind kind);

// Basis family + domain + truncation order. Fourier retains wavenumbers
// -K..K (N = 2K+1); Cosine and Hermite retain 0..K (N = K+1).
struct BasisSpec {
    BasisKind kind = BasisKind::Fourier;
    Domain domain = Domain::periodic();
    int K = 0;

    int N() const;
    int index_min() const { return kind == BasisKind::Fourier ? -K : 0; }

    // Enforces the basis/domain pairing rules; throws invalid_input.
    void validate() const;
};

bool operator==(const BasisSpec& a, const BasisSpec& b);

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::string exactness_note;
};

// φ_k(θ). Fourier: e^{ikω(θ-c)}/√L with ω = 2π/L and c the midpoint, which
// reduces to e^{ikθ}/√(2π) on (-π, π). Cosine: 1/√L for k = 0 and
// √(2/L)·cos(kπ(θ-lo)/L) otherwise. Hermite: ψ_k(θ) evaluated by the
// normalized three-term recurrence.
cplx eval_basis(const BasisSpec& spec, int k, double theta);

// All retained φ_k(θ) at once, indexed from spec.index_min(). One recurrence
// pass per point; this is what project/reconstruct use internally.
std::vector<cplx> eval_basis_all(const BasisSpec& spec, double theta);

enum class CosineRule { Midpoint, GaussLegendre };

// Quadrature matched to the basis: Fourier -> uniform rule on [lo, hi);
// Cosine -> uniform midpoint by default (Gauss-Legendre on request);
// Hermite -> Gauss-Hermite with modified weights w_j·e^{x_j²} so that the
// Gaussian factor stays inside ψ_k and nothing under- or overflows.
// Requires M >= spec.N().
QuadratureRule quadrature_for(const BasisSpec& spec, int M,
                              CosineRule cosine_rule = CosineRule::Midpoint);

enum class BoundaryHint { Periodic, Neumann, Decaying, Unknown };

struct BasisAdvice {
    BasisKind kind;
    std::string rationale;
    bool warning = false;
};

// Deterministic table from boundary behavior to basis family.
BasisAdvice advise_basis(const Domain& domain, BoundaryHint hint);

} // namespace hb
