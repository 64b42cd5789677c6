#pragma once

#include <complex>
#include <span>
#include <vector>

namespace fourpi {

inline constexpr double kPi = 3.14159265358979323846;

// e^{i theta}. Integer multiples of pi/2 map to the exact values
// 1, i, -1, -i so that 2pi and 4pi rotations are reproduced bitwise.
std::complex<double> unit_phase(double theta);

// Maps an angle onto (-pi, pi].
double wrap_to_pi(double angle);

// Removes 2pi jumps from a sequence of principal-value phases, keeping the
// first element fixed. Consecutive samples must differ by less than pi in
// the underlying continuous phase.
std::vector<double> unwrap_phases(std::span<const double> principal);

}  // namespace fourpi
