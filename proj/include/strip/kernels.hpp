#pragma once

#include <complex>
#include <span>
#include <vector>

// Data-parallel inner loops. Every kernel has an OpenMP-parallel entry
// point and a serial reference twin under kernels::serial; the two are
// compared in the test suite and timed against each other by the
// bench_kernels tool. Reductions combine per-thread partial sums in
// thread-index order, so results are reproducible for a fixed thread
// count.

namespace strip::kernels {

using complexd = std::complex<double>;

// Worker cap shared by all parallel kernels. Initialised from OpenMP's
// default and the STRIP_RADIUS_THREADS environment variable.
int max_threads();
void set_max_threads(int n);

namespace serial {

void pointwise_multiply(std::span<const complexd> a,
                        std::span<const complexd> x, std::span<complexd> out);
void multiply_add(std::span<const complexd> a, std::span<const complexd> x,
                  std::span<complexd> acc);
void axpy(complexd alpha, std::span<const complexd> x,
          std::span<complexd> acc);
void scale(complexd alpha, std::span<complexd> x);
double max_abs(std::span<const complexd> x);
double weighted_norm_sq(std::span<const double> w,
                        std::span<const complexd> x);

}  // namespace serial

void pointwise_multiply(std::span<const complexd> a,
                        std::span<const complexd> x, std::span<complexd> out);
void multiply_add(std::span<const complexd> a, std::span<const complexd> x,
                  std::span<complexd> acc);
void axpy(complexd alpha, std::span<const complexd> x, std::span<complexd> acc);
void scale(complexd alpha, std::span<complexd> x);
double max_abs(std::span<const complexd> x);
double weighted_norm_sq(std::span<const double> w,
                        std::span<const complexd> x);

// Cumulative trapezoid rule: out[i] = integral of y over [t_0, t_i].
// Sequential scan, no parallel twin.
std::vector<double> trapezoid_prefix(std::span<const double> t,
                                     std::span<const double> y);

}  // namespace strip::kernels
