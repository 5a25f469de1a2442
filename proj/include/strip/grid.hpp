#pragma once

#include <numbers>
#include <stdexcept>

namespace strip {

// Uniform periodic grid on [-L/2, L/2) with a power-of-two node count.
// Node j sits at x_j = -L/2 + j*L/M; integer mode k carries the physical
// wavenumber k' = 2*pi*k/L for k in [-M/2, M/2).
struct PeriodicGrid {
  double length = 0.0;
  int modes = 0;

  static constexpr int dim = 1;

  PeriodicGrid() = default;
  PeriodicGrid(double box_length, int node_count);

  double spacing() const { return length / modes; }
  double node(int j) const { return -0.5 * length + j * spacing(); }
  double wavenumber(int k) const {
    return 2.0 * std::numbers::pi * k / length;
  }
  // Largest resolved |k'|, attained by the mode k = -M/2.
  double nyquist() const { return std::numbers::pi * modes / length; }
  // FFT bin -> signed integer mode in [-M/2, M/2).
  int mode_of_bin(int bin) const {
    return bin < modes / 2 ? bin : bin - modes;
  }
  int bin_of_mode(int k) const { return k >= 0 ? k : k + modes; }

  bool operator==(const PeriodicGrid&) const = default;
};

}  // namespace strip
