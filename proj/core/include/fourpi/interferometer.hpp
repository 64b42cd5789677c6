#pragma once

#include <array>
#include <complex>

#include "fourpi/crystal_optics.hpp"
#include "fourpi/magnetic_region.hpp"
#include "fourpi/spinor.hpp"

namespace fourpi::interferometer {

using Complex = std::complex<double>;

// Unnormalized spin-valued amplitude of one outgoing beam.
struct SpinorAmplitude {
  Complex plus;
  Complex minus;

  double norm_sq() const { return std::norm(plus) + std::norm(minus); }
};

// The four outgoing beams of the three-plate interferometer, relative to an
// incident intensity of 1. Beams 2 and 3 recombine the two paths; beams 1
// and 4 leave after the second plate.
struct BeamOutputs {
  std::array<SpinorAmplitude, 4> psi{};
  std::array<double, 4> intensity{};

  double i1() const { return intensity[0]; }
  double i2() const { return intensity[1]; }
  double i3() const { return intensity[2]; }
  double i4() const { return intensity[3]; }
  double total() const;
};

// Composes the plate amplitudes (identical for every plate and incidence
// direction) with the spin rotation alpha acting only on the path through
// the field:
//   psi1 = At At psi_in,  psi4 = At Ar psi_in,
//   psi2 = Ar Ar At psi_in + At Ar Ar U(alpha) psi_in,
//   psi3 = At Ar At psi_in + Ar Ar Ar U(alpha) psi_in,
// U(alpha) = diag(e^{-i alpha/2}, e^{+i alpha/2}).
// Probability is conserved for amplitudes with y = 0; for y != 0 the
// composition is an extension and the total is not 1 in general.
BeamOutputs beam_amplitudes(const crystal::DiffractionAmplitudes& amps,
                            double alpha, const Spinor& spin_in);

struct InterferingIntensities {
  double i2 = 0.0;
  double i3 = 0.0;
};

// Closed forms at exact Bragg incidence:
//   i2 = sin^2 tau sin^2 2tau (1 + cos(alpha/2)) / 2
//   i3 = sin^2 tau (cos^4 tau + sin^4 tau - sin^2 2tau cos(alpha/2) / 2)
InterferingIntensities beam_intensities_closed_form(double tau, double alpha);

enum class PhaseMode { kWeak, kExact, kSemiclassical };

// Rotation angle fed into beam_amplitudes, routed to the weak-field Larmor
// phase, the exact square-region phase or the semiclassical phase
// integral. Preconditions and errors are those of the selected route.
double field_to_alpha(const magnetic::NeutronKinematics& kin,
                      const magnetic::FieldProfile& profile, PhaseMode mode);

}  // namespace fourpi::interferometer
