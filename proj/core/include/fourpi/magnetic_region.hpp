#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fourpi/spinor.hpp"

namespace fourpi::magnetic {

using Complex = std::complex<double>;

// Spin component along the field axis. The up component sees the barrier
// +hbar omega / 2, the down component the well -hbar omega / 2.
enum class SpinSign : int { kUp = +1, kDown = -1 };

inline constexpr int sign_of(SpinSign s) { return static_cast<int>(s); }

// Free-flight kinematics of the incident neutron. k and v are derived from
// (E, m, hbar) so that E = hbar^2 k^2 / 2m and v = hbar k / m.
class NeutronKinematics {
 public:
  static NeutronKinematics from_energy(double energy, double mass = 1.0,
                                       double hbar = 1.0);
  static NeutronKinematics from_wavenumber(double k, double mass = 1.0,
                                           double hbar = 1.0);

  NeutronKinematics with_energy(double energy) const {
    return from_energy(energy, mass_, hbar_);
  }

  double energy() const { return energy_; }
  double mass() const { return mass_; }
  double hbar() const { return hbar_; }
  double k() const { return k_; }
  double v() const { return v_; }

 private:
  NeutronKinematics() = default;

  double energy_ = 0.0;
  double mass_ = 0.0;
  double hbar_ = 0.0;
  double k_ = 0.0;
  double v_ = 0.0;
};

// Compact-support switch-on function g(s), g(0) = 1, g(s) = 0 for s >= 1.
enum class RampShape {
  kCubicSmoothstep,  // g(s) = 1 - (3 s^2 - 2 s^3), C^1
};

double ramp_value(RampShape shape, double s);

// max |g'(s)| on [0, 1].
double ramp_max_slope(RampShape shape);

// Support bound x_cut of the ramp in units of the ramp length.
double ramp_support(RampShape shape);

// Static field B(x) = B w(x) along the flight path. w = 1 on [-a, a] and
// w(x) = g((|x| - a) / l) outside; l = 0 is the ideal square profile.
class FieldProfile {
 public:
  static FieldProfile square(double omega, double half_width);
  static FieldProfile smooth(double omega, double half_width,
                             double ramp_length,
                             RampShape shape = RampShape::kCubicSmoothstep);
  // omega = -mu B. The neutron moment mu is negative, so B > 0 gives
  // omega > 0.
  static FieldProfile from_field(double b, double mu, double half_width,
                                 double ramp_length = 0.0,
                                 RampShape shape = RampShape::kCubicSmoothstep);

  FieldProfile with_omega(double omega) const;

  std::optional<double> b_strength() const { return b_; }
  double omega() const { return omega_; }
  double half_width() const { return half_width_; }
  double ramp_length() const { return ramp_length_; }
  RampShape ramp_shape() const { return shape_; }
  bool is_square() const { return ramp_length_ == 0.0; }

  // w(x) in [0, 1].
  double weight(double x) const;

  // max |w'(x)|; zero for the square profile, whose derivative is a
  // distribution.
  double max_weight_slope() const;

  // w vanishes for |x| >= support_half_width().
  double support_half_width() const;

  // hbar omega / 2, the height of the spin-dependent step.
  double magnetic_energy(double hbar) const { return 0.5 * hbar * omega_; }

 private:
  FieldProfile() = default;

  std::optional<double> b_;
  double omega_ = 0.0;
  double half_width_ = 0.0;
  double ramp_length_ = 0.0;
  RampShape shape_ = RampShape::kCubicSmoothstep;
};

struct ScatteringCoefficients {
  Complex t;
  Complex r;
};

struct SpinTransmission {
  Complex t_plus;
  Complex t_minus;
  Complex r_plus;
  Complex r_minus;
  // arg(T-) - arg(T+): the continuous branch from omega = 0 when both
  // channels propagate, the principal value otherwise.
  double alpha = 0.0;
};

// Exact transmission/reflection of one spin component through the square
// region [-a, a], with the free-propagation factor e^{-2ika} kept in T.
// The barrier channel below threshold uses k+ = i kappa (tunneling).
// Requires profile.is_square().
ScatteringCoefficients square_field_coefficients(const NeutronKinematics& kin,
                                                 const FieldProfile& profile,
                                                 SpinSign spin);

SpinTransmission spin_transmission(const NeutronKinematics& kin,
                                   const FieldProfile& profile);

inline constexpr double kWeakFieldWarnRatio = 0.1;
inline constexpr double kWeakFieldMaxRatio = 0.5;

struct WeakFieldTransmission {
  Complex t_plus;
  Complex t_minus;
  double alpha = 0.0;           // omega * classical_time
  double classical_time = 0.0;  // 2a / v
  std::optional<std::string> warning;
};

// Larmor limit T+- = e^{-+ i omega T/2}, T = 2a/v. Warns for
// hbar|omega|/E >= 0.1 and throws DomainError above 0.5.
WeakFieldTransmission weak_field_transmission(const NeutronKinematics& kin,
                                              const FieldProfile& profile);

inline constexpr double kSemiclassicalWarnKl = 10.0;
inline constexpr double kRampQuadratureTolerance = 1e-10;

struct SemiclassicalPhase {
  double alpha = 0.0;
  double flat_top = 0.0;    // 2a (k- - k+)
  double ramps = 0.0;       // both switching regions
  int evaluations = 0;
  std::optional<std::string> warning;
};

// alpha = integral of k-(x) - k+(x) with hbar k+-(x) = sqrt(2m(E -+ hbar
// omega w(x) / 2)). Flat top analytic, ramps by adaptive Simpson.
// Throws ChannelClosedError if E <= hbar|omega|/2 and NumericalError if
// the quadrature does not converge.
SemiclassicalPhase semiclassical_phase(const NeutronKinematics& kin,
                                       const FieldProfile& profile);

// arg(T-) - arg(T+) for the square profile, on the branch continuously
// connected to alpha(omega = 0) = 0.
double rotation_angle_exact(const NeutronKinematics& kin,
                            const FieldProfile& profile);

// Principal values arg(T-/T+) along a sweep of omega, unwrapped starting
// from omega = 0 (the sweep is anchored there, omegas must be sorted away
// from 0 and sampled densely enough to resolve the phase).
std::vector<double> rotation_angle_sweep(const NeutronKinematics& kin,
                                         const FieldProfile& profile,
                                         std::span<const double> omegas);

// Spin-weighted flat-top traversal time 2a/v+ |xi+|^2 + 2a/v- |xi-|^2.
double sojourn_time(const NeutronKinematics& kin, const FieldProfile& profile,
                    const Spinor& spinor);

// (xi+, xi-) -> (e^{-i alpha/2} xi+, e^{+i alpha/2} xi-).
using fourpi::apply_spin_phase;

inline constexpr double kGroupDelayRelativeStep = 1e-5;

struct GroupDelays {
  double up = 0.0;
  double down = 0.0;
};

// Phase times hbar d/dE arg(T+- e^{2ika}) through the square region by
// central differences with relative step 1e-5.
GroupDelays group_delays(const NeutronKinematics& kin,
                         const FieldProfile& profile);

}  // namespace fourpi::magnetic
