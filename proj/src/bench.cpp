#include "hb/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>

#include "hb/errors.hpp"

namespace hb {

namespace {

using clock_type = std::chrono::steady_clock;

double time_once(const std::function<void()>& fn) {
    const auto t0 = clock_type::now();
    fn();
    const auto t1 = clock_type::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

double median_time(const std::function<void()>& fn, int repeats) {
    time_once(fn); // warm-up, discarded
    std::vector<double> times(static_cast<std::size_t>(repeats));
    for (int r = 0; r < repeats; ++r) times[static_cast<std::size_t>(r)] = time_once(fn);
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

// Direct reference: standard-order circular convolution, O(N²) on purpose.
std::vector<fft::cplx> direct_circular(const std::vector<fft::cplx>& a,
                                       const std::vector<fft::cplx>& b) {
    const std::size_t n = a.size();
    std::vector<fft::cplx> out(n, fft::cplx(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
        fft::cplx s(0.0, 0.0);
        for (std::size_t m = 0; m < n; ++m) s += a[m] * b[(k + n - m) % n];
        out[k] = s;
    }
    return out;
}

volatile double g_sink = 0.0; // defeats dead-code elimination of timed work

} // namespace

std::vector<fft::cplx> random_hermitian_coefficients(int N, std::uint64_t seed) {
    if (N < 1 || N % 2 == 0)
        throw invalid_input("Hermitian coefficient vectors need odd length 2K+1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const int K = N / 2;
    std::vector<fft::cplx> centered(static_cast<std::size_t>(N));
    centered[static_cast<std::size_t>(K)] = fft::cplx(dist(rng), 0.0);
    for (int k = 1; k <= K; ++k) {
        const fft::cplx v(dist(rng), dist(rng));
        centered[static_cast<std::size_t>(K + k)] = v;
        centered[static_cast<std::size_t>(K - k)] = std::conj(v);
    }
    return centered;
}

double fit_log_exponent(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw invalid_input("exponent fit needs at least two points");
    const double n = static_cast<double>(x.size());
    double xm = 0.0, ym = 0.0;
    std::vector<double> lx(x.size()), ly(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        lx[i] = std::log(x[i]);
        ly[i] = std::log(y[i]);
        xm += lx[i];
        ym += ly[i];
    }
    xm /= n;
    ym /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (lx[i] - xm) * (lx[i] - xm);
        sxy += (lx[i] - xm) * (ly[i] - ym);
    }
    return sxy / sxx;
}

BenchReport run_bench(const std::vector<int>& sizes, int repeats,
                      std::uint64_t seed, bool force_direct, bool include_direct) {
    if (repeats < 5) throw invalid_input("benchmark needs at least 5 repeats");
    for (int n : sizes)
        if (n < 33 || n % 2 == 0)
            throw invalid_input("benchmark sizes must be odd and >= 33");

    BenchReport report;
    std::vector<double> fft_ns, fft_ts, dir_ns, dir_ts;

    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const int n = sizes[i];
        const auto a = random_hermitian_coefficients(n, seed + 2 * i);
        const auto b = random_hermitian_coefficients(n, seed + 2 * i + 1);

        const double t_fft = median_time(
            [&] {
                const auto c = fft::fast_circular_convolve(a, b);
                g_sink = c[0].real();
            },
            repeats);
        report.records.push_back({n, "fft", t_fft, repeats});
        fft_ns.push_back(static_cast<double>(n));
        fft_ts.push_back(t_fft);

        const bool direct_ok = include_direct && (n <= 32768 || force_direct);
        if (direct_ok) {
            const double t_dir = median_time(
                [&] {
                    const auto c = direct_circular(a, b);
                    g_sink = c[0].real();
                },
                repeats);
            report.records.push_back({n, "direct", t_dir, repeats});
            dir_ns.push_back(static_cast<double>(n));
            dir_ts.push_back(t_dir);
        }
    }

    if (fft_ns.size() >= 2)
        report.exponents.emplace_back("fft", fit_log_exponent(fft_ns, fft_ts));
    if (dir_ns.size() >= 2)
        report.exponents.emplace_back("direct", fit_log_exponent(dir_ns, dir_ts));
    return report;
}

} // namespace hb
