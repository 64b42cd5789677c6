#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <utility>

namespace fourpi::testing {

// Square step V on [-a, a] solved directly: the four matching conditions
// for (R, A, B, T) by Gaussian elimination in long double.
// psi = e^{ikx} + R e^{-ikx} | A e^{iqx} + B e^{-iqx} | T e^{ikx}.
struct DirectSolution {
  std::complex<double> t;
  std::complex<double> r;
};

inline DirectSolution solve_square_step(double energy, double v, double a,
                                        double mass = 1.0, double hbar = 1.0) {
  using C = std::complex<long double>;
  const long double two_m = 2.0L * mass / (static_cast<long double>(hbar) * hbar);
  const long double k = std::sqrt(two_m * energy);
  const C q = std::sqrt(C(two_m * (static_cast<long double>(energy) - v), 0.0L));
  const C i(0.0L, 1.0L);
  auto e = [&](C kk, long double x) { return std::exp(i * kk * x); };
  const long double xa = a;
  const C kc(k, 0.0L);

  // Columns: R, A, B, T.
  std::array<std::array<C, 5>, 4> m{};
  m[0] = {-e(-kc, -xa), e(q, -xa), e(-q, -xa), C(0), e(kc, -xa)};
  m[1] = {i * kc * e(-kc, -xa), i * q * e(q, -xa), -i * q * e(-q, -xa), C(0),
          i * kc * e(kc, -xa)};
  m[2] = {C(0), e(q, xa), e(-q, xa), -e(kc, xa), C(0)};
  m[3] = {C(0), i * q * e(q, xa), -i * q * e(-q, xa), -i * kc * e(kc, xa),
          C(0)};
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 4; ++row) {
      if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
    }
    std::swap(m[col], m[pivot]);
    for (int row = 0; row < 4; ++row) {
      if (row == col) continue;
      const C f = m[row][col] / m[col][col];
      for (int c = col; c < 5; ++c) m[row][c] -= f * m[col][c];
    }
  }
  const C r = m[0][4] / m[0][0];
  const C t = m[3][4] / m[3][3];
  return {{static_cast<double>(t.real()), static_cast<double>(t.imag())},
          {static_cast<double>(r.real()), static_cast<double>(r.imag())}};
}

}  // namespace fourpi::testing
