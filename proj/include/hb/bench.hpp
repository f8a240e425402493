#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hb/fft.hpp"

namespace hb {

struct BenchRecord {
    int N = 0;
    std::string engine; // "direct" or "fft"
    double wall_time_s = 0.0;
    int repeats = 0;
};

struct BenchReport {
    std::vector<BenchRecord> records;
    // engine -> fitted exponent of wall_time ~ N^e; present only when at
    // least two sizes ran for that engine.
    std::vector<std::pair<std::string, double>> exponents;
};

// Random Hermitian-symmetric coefficient vector in centered order
// (a_{-k} = conj(a_k), a_0 real), the coefficient signature of a real
// density. Deterministic in the seed.
std::vector<fft::cplx> random_hermitian_coefficients(int N, std::uint64_t seed);

// Times circular convolution on random Hermitian inputs: direct O(N²)
// reference vs FFT path. Median of `repeats` timed runs after one discarded
// warm-up. The direct engine is skipped above N = 32768 unless forced.
BenchReport run_bench(const std::vector<int>& sizes, int repeats,
                      std::uint64_t seed, bool force_direct = false,
                      bool include_direct = true);

// Least-squares slope of log(y) against log(x); the scaling exponent.
double fit_log_exponent(const std::vector<double>& x,
                        const std::vector<double>& y);

} // namespace hb
