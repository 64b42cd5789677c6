#pragma once

#include <complex>

namespace fourpi::crystal {

using Complex = std::complex<double>;

// Inputs describing one perfect-crystal plate in symmetric Laue geometry,
// plus the derived Pendelloesung length and reduced thickness.
//
// All quantities are in a single consistent unit system (lengths L,
// wavenumbers 1/L, reduced potentials 1/L^2); observables depend only on
// the ratios tau and y.
class PlateParams {
 public:
  // Validates the inputs and derives delta and tau.
  // Throws DomainError on k0 <= 0, d < 0 or ug_mag <= 0 and GeometryError
  // when g1 >= 2 k0.
  static PlateParams make(double k0, double g1, double u0, double ug_mag,
                          double ug_phase, double d);

  // Same plate with a different thickness.
  PlateParams with_thickness(double d) const;

  double k0() const { return k0_; }
  double g1() const { return g1_; }
  double u0() const { return u0_; }
  double ug_mag() const { return ug_mag_; }
  double ug_phase() const { return ug_phase_; }
  double d() const { return d_; }
  double delta() const { return delta_; }
  double tau() const { return tau_; }

  // sqrt(k0^2 - g1^2/4), the longitudinal wavenumber at exact Bragg
  // incidence.
  double kz_bragg() const;

 private:
  PlateParams() = default;

  double k0_ = 0.0;
  double g1_ = 0.0;
  double u0_ = 0.0;
  double ug_mag_ = 0.0;
  double ug_phase_ = 0.0;
  double d_ = 0.0;
  double delta_ = 0.0;
  double tau_ = 0.0;
};

struct BranchWavevectors {
  double k13 = 0.0;  // branch 1, the smaller longitudinal component
  double k23 = 0.0;  // branch 2
};

struct ModeRatios {
  Complex x1;
  Complex x2;
};

struct ModeAmplitudes {
  double u1 = 0.0;
  double u2 = 0.0;
};

// One plate traversal: transmitted (forward-diffracted) and refracted
// (Bragg-diffracted) amplitudes. |a_t|^2 + |a_r|^2 = 1.
struct DiffractionAmplitudes {
  Complex a_t{1.0, 0.0};
  Complex a_r{0.0, 0.0};
};

// Incident wavevector projected on the scattering plane: x1 along g,
// x3 along the inward surface normal.
struct InPlaneWavevector {
  double k1 = 0.0;
  double k3 = 0.0;
};

// Fourier coefficient 4 pi b_c / V_cell of the Fermi pseudopotential of a
// monatomic Bravais lattice, in reduced units 2m V(g) / hbar^2. The same
// value is U(0) and |U(g)| for every reciprocal-lattice vector.
double fermi_fourier_coefficient(double b_c, double cell_volume);

// Pendelloesung length 2 pi sqrt(k0^2 - g1^2/4) / |U(g)|.
double characteristic_length(double k0, double g1, double ug_mag);

// Dynamical-diffraction detuning y defined by (k0 + g/2) . g = y |U(g)|,
// with g = g1 x1. y = 0 at exact Bragg incidence k0_1 = -g1/2.
double detuning_parameter(InPlaneWavevector k0, double g1, double ug_mag);

// Longitudinal components of the two two-wave modes to first order in U.
// Branch 1 carries +sqrt(1+y^2)|U(g)| inside the correction, so
// k13 - k23 = -(2 pi / delta) sqrt(1 + y^2) < 0.
BranchWavevectors branch_wavevectors(const PlateParams& params, double y);

// Amplitude ratios u(g)/u(0) of the two modes: e^{i phi}(y +- sqrt(1+y^2)).
ModeRatios mode_ratio(double y, double ug_phase);

// Boundary-matched mode amplitudes (1/2)(1 -+ y/sqrt(1+y^2)); the pair sums
// to exactly 1.0 in floating point.
ModeAmplitudes mode_amplitudes(double y);

// Plate amplitudes from the reduced thickness tau = pi d / delta.
DiffractionAmplitudes plate_amplitudes(double tau, double y);

DiffractionAmplitudes plate_amplitudes(const PlateParams& params, double y);

}  // namespace fourpi::crystal
