#pragma once

#include <complex>
#include <span>

namespace strip::fft {

// In-place complex DFT for power-of-two sizes.
//   sign = -1:  a[k] <- sum_j a[j] exp(-2*pi*i*j*k/n)   (unnormalised)
//   sign = +1:  the conjugate transform (unnormalised inverse)
// Iterative radix-2 with a cached twiddle table per size; deterministic
// and reentrant.
void transform_pow2(std::span<std::complex<double>> data, int sign);

}  // namespace strip::fft
