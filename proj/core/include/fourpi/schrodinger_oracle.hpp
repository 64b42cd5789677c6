#pragma once

#include <complex>
#include <vector>

#include "fourpi/magnetic_region.hpp"

namespace fourpi::oracle {

using Complex = std::complex<double>;

// Piecewise-constant 1D potential: potential_values[i] on
// [breakpoints[i], breakpoints[i+1]], exactly zero outside.
class SegmentedProfile {
 public:
  // Throws DomainError unless the breakpoints are finite and strictly
  // increasing with one value per segment (at least one segment).
  static SegmentedProfile make(std::vector<double> breakpoints,
                               std::vector<double> potential_values);

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& potential_values() const { return values_; }
  std::size_t segments() const { return values_.size(); }

  // Potential at x (right-continuous at breakpoints, zero outside).
  double potential_at(double x) const;

  // Mirror image x -> -x.
  SegmentedProfile reversed() const;

 private:
  SegmentedProfile() = default;

  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

// Midpoint samples of the spin-dependent potential +-hbar omega w(x) / 2 on
// n equal segments spanning the support of w. For the square profile every
// sample is exactly +-hbar omega / 2.
SegmentedProfile discretize_profile(const magnetic::FieldProfile& profile,
                                    magnetic::SpinSign spin,
                                    std::size_t n_segments, double hbar = 1.0);

struct OracleResult {
  Complex t;  // psi = T e^{ikx} right of the profile
  Complex r;  // psi = e^{ikx} + R e^{-ikx} left of the profile
  // arg T accumulated segment by segment; continuous in the potential
  // strength for smooth profiles, unlike the principal value std::arg(t).
  double phase = 0.0;
};

// Stationary scattering of a particle incident from the left with energy E.
// Interfaces are composed right to left as generalized reflection
// coefficients, with forward and backward waves referenced at opposite ends
// of each segment so evanescent segments never produce growing factors.
// Throws DomainError for E <= 0 and ThresholdError when E equals a segment
// potential.
OracleResult transfer_matrix_transmission(const SegmentedProfile& profile,
                                          double energy, double mass = 1.0,
                                          double hbar = 1.0);

}  // namespace fourpi::oracle
