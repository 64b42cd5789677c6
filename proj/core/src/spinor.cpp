#include "fourpi/spinor.hpp"

#include <cmath>
#include <sstream>

#include "fourpi/errors.hpp"
#include "fourpi/phase.hpp"

namespace fourpi {

Spinor::Spinor(Complex xi_plus, Complex xi_minus)
    : xi_plus_(xi_plus), xi_minus_(xi_minus) {
  const double norm = std::norm(xi_plus) + std::norm(xi_minus);
  if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
    std::ostringstream msg;
    msg << "spinor is not normalized: |xi+|^2 + |xi-|^2 = " << norm;
    throw DomainError(msg.str());
  }
}

Spinor Spinor::normalized(Complex xi_plus, Complex xi_minus) {
  const double norm = std::sqrt(std::norm(xi_plus) + std::norm(xi_minus));
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw DomainError("cannot normalize a zero or non-finite spinor");
  }
  return Spinor(xi_plus / norm, xi_minus / norm, Unchecked{});
}

Spinor Spinor::from_spin_up_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << "spin-up probability must lie in [0, 1], got " << p;
    throw DomainError(msg.str());
  }
  return Spinor(Complex{std::sqrt(p)}, Complex{std::sqrt(1.0 - p)},
                Unchecked{});
}

Spinor Spinor::with_global_phase(double theta) const {
  const Complex phase = std::polar(1.0, theta);
  return Spinor(phase * xi_plus_, phase * xi_minus_, Unchecked{});
}

Spinor apply_spin_phase(const Spinor& spinor, double alpha) {
  const Complex phase = unit_phase(-0.5 * alpha);
  return Spinor(phase * spinor.xi_plus_, std::conj(phase) * spinor.xi_minus_,
                Spinor::Unchecked{});
}

}  // namespace fourpi
