#pragma once

#include <complex>
#include <vector>

namespace hb::fft {

using cplx = std::complex<double>;

// Convention, fixed project-wide: forward X_k = Σ_n x_n e^{-2πikn/N}
// (unnormalized), inverse x_n = (1/N) Σ_k X_k e^{+2πikn/N}.
//
// Powers of two run on an iterative radix-2 kernel; every other length goes
// through Bluestein's chirp-z reduction, so all N stay O(N log N).

std::vector<cplx> dft(const std::vector<cplx>& x);
std::vector<cplx> idft(const std::vector<cplx>& X);

// Circular convolution c_k = Σ_m a_m b_{(k-m) mod N}, computed as the
// inverse transform of the Hadamard product of spectra. Internally both
// inputs are zero-padded to a power of two >= 2N-1 and the linear result is
// wrapped mod N, which is the same product in 3 power-of-two transforms.
std::vector<cplx> fast_circular_convolve(const std::vector<cplx>& a,
                                         const std::vector<cplx>& b);

// Linear (zero-extended) convolution, length 2N-1, same FFT machinery.
std::vector<cplx> fast_linear_convolve(const std::vector<cplx>& a,
                                       const std::vector<cplx>& b);

// Index-ordering shim between centered wavenumbers -K..K and the 0-based
// DFT layout: k -> (k + N) mod N. Bijective; the two functions are inverse.
std::vector<cplx> center_to_standard(const std::vector<cplx>& centered);
std::vector<cplx> standard_to_center(const std::vector<cplx>& standard);

} // namespace hb::fft
