#include "fourpi/interferometer.hpp"

#include <cmath>

#include "fourpi/errors.hpp"
#include "fourpi/phase.hpp"

namespace fourpi::interferometer {
namespace {

SpinorAmplitude scaled(Complex factor, const Spinor& s) {
  return {factor * s.xi_plus(), factor * s.xi_minus()};
}

}  // namespace

double BeamOutputs::total() const {
  return intensity[0] + intensity[1] + intensity[2] + intensity[3];
}

BeamOutputs beam_amplitudes(const crystal::DiffractionAmplitudes& amps,
                            double alpha, const Spinor& spin_in) {
  const Complex at = amps.a_t;
  const Complex ar = amps.a_r;
  const Complex rot_up = unit_phase(-0.5 * alpha);
  const Complex rot_down = std::conj(rot_up);

  BeamOutputs out;
  out.psi[0] = scaled(at * at, spin_in);
  const Complex ar2 = ar * ar;
  const Complex at2 = at * at;
  out.psi[1] = {ar2 * at * (1.0 + rot_up) * spin_in.xi_plus(),
                ar2 * at * (1.0 + rot_down) * spin_in.xi_minus()};
  out.psi[2] = {ar * (at2 + ar2 * rot_up) * spin_in.xi_plus(),
                ar * (at2 + ar2 * rot_down) * spin_in.xi_minus()};
  out.psi[3] = scaled(at * ar, spin_in);
  for (std::size_t j = 0; j < 4; ++j) out.intensity[j] = out.psi[j].norm_sq();
  return out;
}

InterferingIntensities beam_intensities_closed_form(double tau, double alpha) {
  const double s = std::sin(tau);
  const double c = std::cos(tau);
  const double s2 = s * s;
  const double c2 = c * c;
  const double sin_2tau = std::sin(2.0 * tau);
  const double sin2_2tau = sin_2tau * sin_2tau;
  const double half_cos = std::cos(0.5 * alpha);
  return {0.5 * s2 * sin2_2tau * (1.0 + half_cos),
          s2 * (c2 * c2 + s2 * s2 - 0.5 * sin2_2tau * half_cos)};
}

double field_to_alpha(const magnetic::NeutronKinematics& kin,
                      const magnetic::FieldProfile& profile, PhaseMode mode) {
  switch (mode) {
    case PhaseMode::kWeak:
      return magnetic::weak_field_transmission(kin, profile).alpha;
    case PhaseMode::kExact:
      return magnetic::rotation_angle_exact(kin, profile);
    case PhaseMode::kSemiclassical:
      return magnetic::semiclassical_phase(kin, profile).alpha;
  }
  throw DomainError("unknown phase mode");
}

}  // namespace fourpi::interferometer
