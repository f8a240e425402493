// hb: spectral Bayesian inference on orthogonal-basis coefficients.
//
// Exit codes are a stable contract: 0 success, 2 input contract violation
// (including flag parse errors), 3 file I/O failure, 4 numerical degeneracy.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hb/bench.hpp"
#include "hb/coefficient_io.hpp"
#include "hb/coefficients.hpp"
#include "hb/densities.hpp"
#include "hb/diagnostics.hpp"
#include "hb/errors.hpp"
#include "hb/oracles.hpp"
#include "hb/sequential.hpp"
#include "hb/spectral.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double parse_num(const std::string& text, const char* what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw hb::invalid_input(std::string(what) + ": expected a number, got '" +
                                text + "'");
    }
}

hb::BasisKind parse_basis(const std::string& name) {
    if (name == "fourier") return hb::BasisKind::Fourier;
    if (name == "cosine") return hb::BasisKind::Cosine;
    if (name == "hermite") return hb::BasisKind::Hermite;
    throw hb::invalid_input("unknown basis '" + name + "'");
}

// "lo,hi", "real-line", or "" for the basis default.
hb::Domain parse_domain(const std::string& text, hb::BasisKind kind) {
    if (text.empty()) {
        switch (kind) {
            case hb::BasisKind::Fourier: return hb::Domain::periodic();
            case hb::BasisKind::Cosine: return hb::Domain::interval(-kPi, kPi);
            case hb::BasisKind::Hermite: return hb::Domain::real_line();
        }
    }
    if (text == "real-line") return hb::Domain::real_line();
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw hb::invalid_input("--domain expects 'lo,hi' or 'real-line'");
    const double lo = parse_num(text.substr(0, comma), "--domain lo");
    const double hi = parse_num(text.substr(comma + 1), "--domain hi");
    return kind == hb::BasisKind::Fourier ? hb::Domain::periodic(lo, hi)
                                          : hb::Domain::interval(lo, hi);
}

hb::ConvMode parse_mode(const std::string& name) {
    return name == "circular" ? hb::ConvMode::Circular : hb::ConvMode::Padded;
}

hb::Engine parse_engine(const std::string& name) {
    return name == "direct" ? hb::Engine::Direct : hb::Engine::FFT;
}

// CSV lands in --out when given, else on stdout.
struct OutputTarget {
    std::ofstream file;
    std::ostream* os = &std::cout;
    bool to_file = false;

    explicit OutputTarget(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw hb::io_error("cannot open '" + path + "' for writing");
        os = &file;
        to_file = true;
    }
};

std::uint64_t env_seed() {
    const char* s = std::getenv("HB_SEED");
    if (s == nullptr || *s == '\0') return 42;
    try {
        std::size_t pos = 0;
        const auto v = std::stoull(s, &pos);
        if (pos != std::string(s).size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw hb::invalid_input(std::string("HB_SEED must be an integer, got '") +
                                s + "'");
    }
}

void print_decay(const hb::DecayReport& report) {
    std::cout << "decay class: " << hb::to_string(report.decay_class) << "\n";
    if (report.decay_class == hb::DecayClass::Exponential)
        std::cout << "gamma: " << g12(report.gamma) << "\n";
    else if (report.decay_class == hb::DecayClass::Algebraic)
        std::cout << "alpha: " << g12(report.alpha) << "\n";
    std::cout << "fit quality: " << g12(report.fit_quality) << "\n";
}

int run_project(const std::string& density_text, const std::string& basis_name,
                const std::string& domain_text, int K, int M, double epsilon,
                const std::string& out_path) {
    hb::BasisSpec spec{parse_basis(basis_name), hb::Domain{}, K};
    spec.domain = parse_domain(domain_text, spec.kind);
    spec.validate();

    const hb::Density density = hb::parse_density(density_text, spec.domain);
    const hb::CoefficientVector coeffs = hb::project(spec, density.fn, M);
    hb::write_coefficients(out_path, coeffs);

    std::cout << "wrote " << out_path << " (" << hb::to_string(spec.kind)
              << ", K=" << K << ", N=" << spec.N() << ")\n";
    std::cout << "density: " << density.name << "\n";
    std::cout << "l2 norm: " << g12(hb::l2_norm(coeffs)) << "\n";
    if (K >= 1)
        std::cout << "tail energy at |k| > " << K / 2 << ": "
                  << g12(hb::tail_energy(coeffs, K / 2)) << "\n";

    if (K >= 8) {
        const hb::DecayReport report = hb::fit_decay(coeffs);
        print_decay(report);
        if (report.decay_class == hb::DecayClass::Algebraic)
            std::cout << "warning: algebraic coefficient decay; truncation "
                         "converges slowly and Gibbs oscillations are likely\n";
        else if (report.decay_class == hb::DecayClass::Flat)
            std::cout << "warning: no measurable coefficient decay; this basis "
                         "represents the density poorly\n";
    } else {
        std::cout << "decay class: not classified (needs K >= 8)\n";
    }

    if (epsilon > 0.0) {
        const int k_max = std::max(256, 4 * K);
        const auto rec = hb::recommend_K(density.fn, spec, epsilon, k_max);
        if (rec.has_value())
            std::cout << "recommended K for epsilon=" << g12(epsilon) << ": "
                      << *rec << "\n";
        else
            std::cout << "no K <= " << k_max << " reaches epsilon="
                      << g12(epsilon) << "\n";
    }
    return 0;
}

// Trapezoid evidence oracle on the reconstructed densities; the table lookup
// keeps grid_posterior's M evaluations O(1) each after two O(M·N) passes.
double grid_oracle_evidence(const hb::CoefficientVector& prior,
                            const hb::CoefficientVector& like) {
    const double lo = prior.spec.domain.lo;
    const double hi = prior.spec.domain.hi;
    const int M = 100001;
    std::vector<double> grid(M);
    const double h = (hi - lo) / (M - 1);
    for (int j = 0; j < M; ++j) grid[j] = lo + h * j;

    const std::vector<double> pv = hb::reconstruct(prior, grid);
    const std::vector<double> lv = hb::reconstruct(like, grid);
    const auto table = [lo, h](const std::vector<double>& vals) {
        return [&vals, lo, h](double theta) {
            const auto j = static_cast<std::size_t>(std::lround((theta - lo) / h));
            // Gibbs undershoot can dip below zero; the oracle demands
            // nonnegative inputs, so clamp the probe (evidence error is
            // bounded by the undershoot mass, far below the check tolerance).
            return std::max(vals[j], 0.0);
        };
    };
    return hb::oracle::grid_posterior(table(pv), table(lv), lo, hi, M).evidence;
}

int run_update(const std::string& prior_path, const std::string& like_path,
               const std::string& mode_name, const std::string& engine_name,
               bool check, const std::string& out_path) {
    const hb::CoefficientVector prior = hb::read_coefficients(prior_path);
    const hb::CoefficientVector like = hb::read_coefficients(like_path);
    const hb::ConvMode mode = parse_mode(mode_name);
    const hb::Engine engine = parse_engine(engine_name);

    const hb::UpdateResult result =
        check ? hb::bayes_update_checked(prior, like, mode, engine)
              : hb::bayes_update(prior, like, mode, engine);

    if (!out_path.empty()) {
        hb::write_coefficients(out_path, result.posterior);
        std::cout << "wrote " << out_path << "\n";
    }
    std::cout << "evidence Z: " << g12(result.evidence_Z) << "\n";
    std::cout << "min reconstructed density: " << g12(result.min_density) << "\n";
    if (result.aliasing_estimate.has_value())
        std::cout << "aliasing estimate (max |padded - circular|): "
                  << g12(*result.aliasing_estimate) << "\n";
    if (check) {
        const double z_grid = grid_oracle_evidence(prior, like);
        const double rel = std::abs(result.evidence_Z - z_grid) / std::abs(z_grid);
        std::cout << "grid oracle Z: " << g12(z_grid) << "\n";
        std::cout << "evidence relative difference: " << g12(rel) << "\n";
    }
    return 0;
}

int run_sequential(const std::string& prior_path,
                   const std::vector<std::string>& like_paths,
                   const std::string& mode_name, const std::string& engine_name,
                   const std::string& out_path, const std::string& post_path) {
    const hb::ConvMode mode = parse_mode(mode_name);
    const hb::Engine engine = parse_engine(engine_name);

    hb::FilterState state = hb::filter_init(hb::read_coefficients(prior_path));
    OutputTarget csv(out_path);
    *csv.os << "step,Z,log_evidence_cum\n";
    for (const std::string& path : like_paths) {
        const double before = state.log_evidence_sum;
        state = hb::filter_step(state, hb::read_coefficients(path), mode, engine);
        const double z_step = std::exp(state.log_evidence_sum - before);
        *csv.os << state.step_count << "," << hb::format_double17(z_step) << ","
                << hb::format_double17(state.log_evidence_sum) << "\n";
    }
    if (csv.to_file && !csv.file) throw hb::io_error("write failed: " + out_path);

    std::cout << "steps: " << state.step_count << "\n";
    std::cout << "cumulative log evidence: " << g12(state.log_evidence_sum)
              << "\n";
    const hb::Moments m = hb::moments(state.current);
    std::cout << "final mean: " << g12(m.mean) << "\n";
    std::cout << "final variance: " << g12(m.variance) << "\n";
    if (!post_path.empty()) {
        hb::write_coefficients(post_path, state.current);
        std::cout << "wrote " << post_path << "\n";
    }
    return 0;
}

int run_diagnose(const std::string& coeffs_path) {
    const hb::CoefficientVector coeffs = hb::read_coefficients(coeffs_path);
    const hb::DecayReport report = hb::fit_decay(coeffs);
    print_decay(report);
    std::cout << "tail energy at |k| > " << coeffs.K() / 2 << ": "
              << g12(report.tail_energy_at_K) << "\n";

    // Verdict for using this vector on either side of an update.
    const hb::SuitabilityVerdict verdict = hb::suitability(report, report);
    std::cout << "suitability: " << hb::to_string(verdict.verdict) << "\n";
    switch (report.decay_class) {
        case hb::DecayClass::Exponential:
            std::cout << "note: exponential decay (analytic-grade smoothness)\n";
            break;
        case hb::DecayClass::Algebraic:
            std::cout << (report.alpha > 1.0
                              ? "note: algebraic decay; expect polynomial "
                                "truncation error and mild Gibbs artifacts\n"
                              : "note: algebraic decay with exponent <= 1 "
                                "(discontinuity-grade tails, Gibbs risk)\n");
            break;
        case hb::DecayClass::Flat:
            std::cout << "note: no measurable coefficient decay; truncation "
                         "untrustworthy\n";
            break;
    }
    return 0;
}

int run_bench(std::vector<int> sizes, int repeats, bool force,
              const std::string& out_path) {
    if (sizes.empty()) sizes = {257, 1025, 4097};
    const hb::BenchReport report =
        hb::run_bench(sizes, repeats, env_seed(), force, true);

    OutputTarget csv(out_path);
    *csv.os << "N,engine,wall_time_s,repeats\n";
    for (const hb::BenchRecord& r : report.records)
        *csv.os << r.N << "," << r.engine << "," << hb::format_double17(r.wall_time_s)
                << "," << r.repeats << "\n";
    for (const auto& [engine, exponent] : report.exponents)
        *csv.os << "# exponent," << engine << "," << g12(exponent) << "\n";
    if (csv.to_file && !csv.file) throw hb::io_error("write failed: " + out_path);
    return 0;
}

int run_reconstruct(const std::string& coeffs_path, const std::string& range_text,
                    int M, const std::string& out_path) {
    const hb::CoefficientVector coeffs = hb::read_coefficients(coeffs_path);
    if (M < 2) throw hb::invalid_input("--M: need at least 2 grid points");

    double lo, hi;
    const hb::Domain& dom = coeffs.spec.domain;
    if (range_text.empty()) {
        if (dom.bounded()) {
            lo = dom.lo;
            hi = dom.hi;
        } else {
            lo = -8.0; // covers ψ_k mass for any desk-scale K
            hi = 8.0;
        }
    } else {
        const auto comma = range_text.find(',');
        if (comma == std::string::npos)
            throw hb::invalid_input("--domain expects 'lo,hi'");
        lo = parse_num(range_text.substr(0, comma), "--domain lo");
        hi = parse_num(range_text.substr(comma + 1), "--domain hi");
        if (!(lo < hi)) throw hb::invalid_input("--domain: need lo < hi");
        if (!dom.contains(lo) || !dom.contains(hi))
            throw hb::invalid_input("grid range exceeds the basis domain");
    }

    std::vector<double> grid(M);
    const double h = (hi - lo) / (M - 1);
    for (int j = 0; j < M; ++j) grid[j] = lo + h * j;
    const hb::Reconstruction rec = hb::reconstruct_full(coeffs, grid);

    int negatives = 0;
    double min_value = rec.values.empty() ? 0.0 : rec.values.front();
    for (double v : rec.values) {
        if (v < 0.0) ++negatives;
        min_value = std::min(min_value, v);
    }

    OutputTarget csv(out_path);
    *csv.os << "theta,density\n";
    for (int j = 0; j < M; ++j)
        *csv.os << hb::format_double17(grid[j]) << ","
                << hb::format_double17(rec.values[j]) << "\n";
    if (csv.to_file && !csv.file) throw hb::io_error("write failed: " + out_path);

    // Keep the summary out of the CSV stream when that stream is stdout.
    std::ostream& info = csv.to_file ? std::cout : std::cerr;
    info << "points: " << M << "\n";
    info << "negative density values: " << negatives;
    if (negatives > 0) info << " (min " << g12(min_value) << ")";
    info << "\n";
    info << "max imaginary residual: " << g12(rec.max_abs_imag) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral Bayesian inference on orthogonal-basis coefficients"};
    app.require_subcommand(1);

    // project
    auto* project = app.add_subcommand(
        "project", "project a density onto a truncated basis and save it");
    std::string p_density, p_basis = "fourier", p_domain, p_out;
    int p_K = 0, p_M = 0;
    double p_epsilon = 0.0;
    project->add_option("--density", p_density,
                        "uniform | gaussian:MU,SIGMA | mixture:W,MU,SIGMA;... | "
                        "indicator:A,B | grid:PATH")
        ->required();
    project->add_option("--basis", p_basis, "fourier | cosine | hermite")
        ->check(CLI::IsMember({"fourier", "cosine", "hermite"}));
    project->add_option("--domain", p_domain, "lo,hi or real-line");
    project->add_option("--K", p_K, "truncation order")->required();
    project->add_option("--M", p_M, "quadrature points (default 2N)");
    project->add_option("--epsilon", p_epsilon,
                        "also recommend the smallest adequate K");
    project->add_option("--out", p_out, "coefficient file to write")->required();

    // update
    auto* update = app.add_subcommand(
        "update", "Bayesian update: posterior from prior and likelihood files");
    std::string u_prior, u_like, u_mode = "padded", u_engine = "fft", u_out;
    bool u_check = false;
    update->add_option("--prior", u_prior, "prior coefficient file")->required();
    update->add_option("--like", u_like, "likelihood coefficient file")->required();
    update->add_option("--mode", u_mode, "circular | padded")
        ->check(CLI::IsMember({"circular", "padded"}));
    update->add_option("--engine", u_engine, "direct | fft")
        ->check(CLI::IsMember({"direct", "fft"}));
    update->add_flag("--check", u_check,
                     "also run the other mode and a grid oracle");
    update->add_option("--out", u_out, "posterior coefficient file to write");

    // sequential
    auto* sequential = app.add_subcommand(
        "sequential", "chain updates, posterior becomes the prior");
    std::string s_prior, s_mode = "padded", s_engine = "fft", s_out, s_post;
    std::vector<std::string> s_likes;
    sequential->add_option("--prior", s_prior, "prior coefficient file")
        ->required();
    sequential->add_option("--like", s_likes,
                           "likelihood coefficient files, in order");
    sequential->add_option("--mode", s_mode, "circular | padded")
        ->check(CLI::IsMember({"circular", "padded"}));
    sequential->add_option("--engine", s_engine, "direct | fft")
        ->check(CLI::IsMember({"direct", "fft"}));
    sequential->add_option("--out", s_out, "per-step CSV path (default stdout)");
    sequential->add_option("--post", s_post, "final posterior file to write");

    // diagnose
    auto* diagnose = app.add_subcommand(
        "diagnose", "decay class, fitted rate, and suitability verdict");
    std::string d_coeffs;
    diagnose->add_option("--coeffs", d_coeffs, "coefficient file")->required();

    // bench
    auto* bench = app.add_subcommand(
        "bench", "time direct vs FFT convolution on random inputs");
    std::vector<int> b_sizes;
    int b_repeats = 9;
    bool b_force = false;
    std::string b_out;
    bench->add_option("--N", b_sizes, "odd sizes >= 33 (default 257 1025 4097)");
    bench->add_option("--repeats", b_repeats, "timed repeats per point (>= 5)");
    bench->add_flag("--force", b_force, "run the direct engine above N=32768");
    bench->add_option("--out", b_out, "CSV path (default stdout)");

    // reconstruct
    auto* reconstruct = app.add_subcommand(
        "reconstruct", "sample the density a coefficient file represents");
    std::string r_coeffs, r_domain, r_out;
    int r_M = 512;
    reconstruct->add_option("--coeffs", r_coeffs, "coefficient file")->required();
    reconstruct->add_option("--domain", r_domain,
                            "grid range lo,hi (default: basis domain)");
    reconstruct->add_option("--M", r_M, "grid points (default 512)");
    reconstruct->add_option("--out", r_out, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
        if (project->parsed())
            return run_project(p_density, p_basis, p_domain, p_K, p_M, p_epsilon,
                               p_out);
        if (update->parsed())
            return run_update(u_prior, u_like, u_mode, u_engine, u_check, u_out);
        if (sequential->parsed())
            return run_sequential(s_prior, s_likes, s_mode, s_engine, s_out,
                                  s_post);
        if (diagnose->parsed()) return run_diagnose(d_coeffs);
        if (bench->parsed()) return run_bench(b_sizes, b_repeats, b_force, b_out);
        if (reconstruct->parsed())
            return run_reconstruct(r_coeffs, r_domain, r_M, r_out);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const hb::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hb::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const hb::numeric_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
