#include "hb/fft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hb/errors.hpp"

namespace hb::fft {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// Iterative in-place radix-2, decimation in time. sign = -1 forward.
void fft_pow2(std::vector<cplx>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * kPi / static_cast<double>(len);
        const cplx wlen = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const cplx u = a[i + j];
                const cplx v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

// Bluestein chirp-z: X_k = conj(c_k) Σ_n (x_n conj(c_n)) c_{k-n} with the
// chirp c_n = e^{iπn²/N}, evaluated as one power-of-two circular
// convolution. n² is reduced mod 2N in integer arithmetic before the
// angle so the phase stays exact for large n.
std::vector<cplx> bluestein(const std::vector<cplx>& x, int sign) {
    const std::size_t n = x.size();
    std::vector<cplx> chirp(n);
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned long long sq =
            (static_cast<unsigned long long>(i) * i) % (2ull * n);
        chirp[i] = std::polar(1.0, sign * kPi * static_cast<double>(sq) /
                                       static_cast<double>(n));
    }

    const std::size_t m = next_pow2(2 * n - 1);
    std::vector<cplx> a(m, cplx(0.0, 0.0)), b(m, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) a[i] = x[i] * chirp[i];
    b[0] = std::conj(chirp[0]);
    for (std::size_t i = 1; i < n; ++i) b[i] = b[m - i] = std::conj(chirp[i]);

    fft_pow2(a, -1);
    fft_pow2(b, -1);
    for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
    fft_pow2(a, +1);
    const double inv_m = 1.0 / static_cast<double>(m);

    std::vector<cplx> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * inv_m * chirp[i];
    return out;
}

std::vector<cplx> transform(const std::vector<cplx>& x, int sign) {
    if (x.empty()) throw invalid_input("empty input to DFT");
    if (x.size() == 1) return x;
    if (is_pow2(x.size())) {
        std::vector<cplx> a = x;
        fft_pow2(a, sign);
        return a;
    }
    return bluestein(x, sign);
}

} // namespace

std::vector<cplx> dft(const std::vector<cplx>& x) { return transform(x, -1); }

std::vector<cplx> idft(const std::vector<cplx>& X) {
    std::vector<cplx> x = transform(X, +1);
    const double inv_n = 1.0 / static_cast<double>(x.size());
    for (cplx& v : x) v *= inv_n;
    return x;
}

std::vector<cplx> fast_linear_convolve(const std::vector<cplx>& a,
                                       const std::vector<cplx>& b) {
    if (a.empty() || b.empty()) throw invalid_input("empty input to convolution");
    const std::size_t out_len = a.size() + b.size() - 1;
    const std::size_t m = next_pow2(out_len);
    std::vector<cplx> fa(m, cplx(0.0, 0.0)), fb(m, cplx(0.0, 0.0));
    std::copy(a.begin(), a.end(), fa.begin());
    std::copy(b.begin(), b.end(), fb.begin());
    fft_pow2(fa, -1);
    fft_pow2(fb, -1);
    for (std::size_t i = 0; i < m; ++i) fa[i] *= fb[i];
    fft_pow2(fa, +1);
    const double inv_m = 1.0 / static_cast<double>(m);
    std::vector<cplx> out(out_len);
    for (std::size_t i = 0; i < out_len; ++i) out[i] = fa[i] * inv_m;
    return out;
}

std::vector<cplx> fast_circular_convolve(const std::vector<cplx>& a,
                                         const std::vector<cplx>& b) {
    if (a.size() != b.size()) throw invalid_input("circular convolution length mismatch");
    if (a.empty()) throw invalid_input("empty input to convolution");
    const std::size_t n = a.size();
    if (n == 1) return {a[0] * b[0]};
    if (is_pow2(n)) {
        std::vector<cplx> fa = a, fb = b;
        fft_pow2(fa, -1);
        fft_pow2(fb, -1);
        for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i];
        fft_pow2(fa, +1);
        const double inv_n = 1.0 / static_cast<double>(n);
        for (cplx& v : fa) v *= inv_n;
        return fa;
    }
    // Wrap the zero-padded linear convolution mod N. Identical to
    // idft(dft(a)⊙dft(b)) and needs only power-of-two transforms.
    std::vector<cplx> lin = fast_linear_convolve(a, b);
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        cplx v = lin[k];
        if (k + n < lin.size()) v += lin[k + n];
        out[k] = v;
    }
    return out;
}

std::vector<cplx> center_to_standard(const std::vector<cplx>& centered) {
    const std::size_t n = centered.size();
    if (n % 2 == 0) throw invalid_input("centered vector must have odd length 2K+1");
    const std::size_t K = n / 2;
    std::vector<cplx> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = centered[(j + K) % n];
    return out;
}

std::vector<cplx> standard_to_center(const std::vector<cplx>& standard) {
    const std::size_t n = standard.size();
    if (n % 2 == 0) throw invalid_input("centered vector must have odd length 2K+1");
    const std::size_t K = n / 2;
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = standard[(k + K + 1) % n];
    return out;
}

} // namespace hb::fft
