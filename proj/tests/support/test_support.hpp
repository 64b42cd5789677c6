#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "fourpi/spinor.hpp"

namespace fourpi::testing {

inline double complex_gap(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b);
}

inline std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] =
        n == 1 ? lo : lo + (hi - lo) * i / static_cast<double>(n - 1);
  }
  return out;
}

// Random normalized spinors, reproducible from the seed.
inline std::vector<Spinor> random_spinors(int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<Spinor> out;
  for (int i = 0; i < count; ++i) {
    const std::complex<double> up(gauss(rng), gauss(rng));
    const std::complex<double> down(gauss(rng), gauss(rng));
    out.push_back(Spinor::normalized(up, down));
  }
  return out;
}

// Least-squares slope of log(err) against log(h).
inline double fitted_order(const std::vector<double>& h,
                           const std::vector<double>& err) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double x = std::log(h[i]);
    const double y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace fourpi::testing
