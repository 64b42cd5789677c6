#include "fourpi/crystal_optics.hpp"

#include <cmath>
#include <sstream>

#include "fourpi/errors.hpp"
#include "fourpi/phase.hpp"

namespace fourpi::crystal {
namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << name << " must be positive and finite, got " << value;
    throw DomainError(msg.str());
  }
}

// k0^2 - g1^2/4 after validating the Laue geometry.
double bragg_kz_squared(double k0, double g1) {
  require_positive(k0, "k0");
  if (!(g1 >= 0.0) || !std::isfinite(g1)) {
    std::ostringstream msg;
    msg << "g1 must be non-negative and finite, got " << g1;
    throw DomainError(msg.str());
  }
  const double kz2 = k0 * k0 - 0.25 * g1 * g1;
  if (!(g1 < 2.0 * k0) || !(kz2 > 0.0)) {
    std::ostringstream msg;
    msg << "no Laue geometry for g1 = " << g1 << " >= 2 k0 = " << 2.0 * k0;
    throw GeometryError(msg.str());
  }
  return kz2;
}

}  // namespace

PlateParams PlateParams::make(double k0, double g1, double u0, double ug_mag,
                              double ug_phase, double d) {
  const double kz2 = bragg_kz_squared(k0, g1);
  require_positive(ug_mag, "|U(g)|");
  if (!(d >= 0.0) || !std::isfinite(d)) {
    std::ostringstream msg;
    msg << "plate thickness must be non-negative, got " << d;
    throw DomainError(msg.str());
  }
  if (!std::isfinite(u0) || !std::isfinite(ug_phase)) {
    throw DomainError("U(0) and the phase of U(g) must be finite");
  }
  PlateParams p;
  p.k0_ = k0;
  p.g1_ = g1;
  p.u0_ = u0;
  p.ug_mag_ = ug_mag;
  p.ug_phase_ = ug_phase;
  p.d_ = d;
  p.delta_ = 2.0 * kPi * std::sqrt(kz2) / ug_mag;
  p.tau_ = kPi * d / p.delta_;
  return p;
}

PlateParams PlateParams::with_thickness(double d) const {
  return make(k0_, g1_, u0_, ug_mag_, ug_phase_, d);
}

double PlateParams::kz_bragg() const {
  return std::sqrt(k0_ * k0_ - 0.25 * g1_ * g1_);
}

double fermi_fourier_coefficient(double b_c, double cell_volume) {
  require_positive(b_c, "scattering length b_c");
  require_positive(cell_volume, "cell volume");
  return 4.0 * kPi * b_c / cell_volume;
}

double characteristic_length(double k0, double g1, double ug_mag) {
  const double kz2 = bragg_kz_squared(k0, g1);
  require_positive(ug_mag, "|U(g)|");
  return 2.0 * kPi * std::sqrt(kz2) / ug_mag;
}

double detuning_parameter(InPlaneWavevector k0, double g1, double ug_mag) {
  require_positive(ug_mag, "|U(g)|");
  return (k0.k1 + 0.5 * g1) * g1 / ug_mag;
}

BranchWavevectors branch_wavevectors(const PlateParams& params, double y) {
  const double kz = params.kz_bragg();
  const double coupling = std::hypot(1.0, y) * params.ug_mag();
  // kz [1 - (U(0) +- sqrt(1+y^2)|U(g)|) / (2 kz^2)]
  return {kz - (params.u0() + coupling) / (2.0 * kz),
          kz - (params.u0() - coupling) / (2.0 * kz)};
}

ModeRatios mode_ratio(double y, double ug_phase) {
  const double root = std::hypot(1.0, y);
  const Complex phase = unit_phase(ug_phase);
  return {phase * (y + root), phase * (y - root)};
}

ModeAmplitudes mode_amplitudes(double y) {
  double t = 0.0;
  if (std::isinf(y)) {
    t = y > 0.0 ? 1.0 : -1.0;
  } else {
    t = y / std::hypot(1.0, y);
  }
  // Whichever amplitude is >= 1/2 is formed first; 1 - u is then exact
  // (Sterbenz) or rounds so that the sum is exactly 1.
  ModeAmplitudes m;
  if (t <= 0.0) {
    m.u1 = 0.5 * (1.0 - t);
    m.u2 = 1.0 - m.u1;
  } else {
    m.u2 = 0.5 * (1.0 + t);
    m.u1 = 1.0 - m.u2;
  }
  return m;
}

DiffractionAmplitudes plate_amplitudes(double tau, double y) {
  const double root = std::hypot(1.0, y);
  const double arg = tau * root;
  const double c = std::cos(arg);
  const double s = std::sin(arg);
  const Complex envelope = std::polar(1.0, -tau * (1.0 + y));
  return {Complex{c, y / root * s} * envelope,
          Complex{0.0, -s / root} * envelope};
}

DiffractionAmplitudes plate_amplitudes(const PlateParams& params, double y) {
  return plate_amplitudes(params.tau(), y);
}

}  // namespace fourpi::crystal
