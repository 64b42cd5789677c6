#include "fourpi/phase.hpp"

#include <cmath>

namespace fourpi {

std::complex<double> unit_phase(double theta) {
  const double quarter_turns = theta / (0.5 * kPi);
  if (std::isfinite(quarter_turns) && quarter_turns == std::nearbyint(quarter_turns) &&
      std::abs(quarter_turns) < 9.0e15) {
    const auto q = static_cast<long long>(quarter_turns);
    switch (((q % 4) + 4) % 4) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, theta);
}

double wrap_to_pi(double angle) {
  double wrapped = std::remainder(angle, 2.0 * kPi);
  if (wrapped <= -kPi) wrapped += 2.0 * kPi;
  return wrapped;
}

std::vector<double> unwrap_phases(std::span<const double> principal) {
  std::vector<double> out(principal.begin(), principal.end());
  for (std::size_t i = 1; i < out.size(); ++i) {
    out[i] = out[i - 1] + wrap_to_pi(principal[i] - principal[i - 1]);
  }
  return out;
}

}  // namespace fourpi
