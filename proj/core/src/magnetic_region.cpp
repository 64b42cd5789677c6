#include "fourpi/magnetic_region.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fourpi/errors.hpp"
#include "fourpi/phase.hpp"
#include "fourpi/quadrature.hpp"

namespace fourpi::magnetic {
namespace {

constexpr Complex kI{0.0, 1.0};

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << name << " must be positive and finite, got " << value;
    throw DomainError(msg.str());
  }
}

// m omega / hbar: the shift of k^2 inside the field region.
double coupling(const NeutronKinematics& kin, const FieldProfile& profile) {
  return kin.mass() * profile.omega() / kin.hbar();
}

void require_square(const FieldProfile& profile, const char* op) {
  if (!profile.is_square()) {
    std::ostringstream msg;
    msg << op << " requires the square profile (ramp length 0), got l = "
        << profile.ramp_length();
    throw DomainError(msg.str());
  }
}

void require_open_channels(const NeutronKinematics& kin,
                           const FieldProfile& profile, const char* op) {
  const double barrier = std::abs(profile.magnetic_energy(kin.hbar()));
  if (!(kin.energy() > barrier)) {
    std::ostringstream msg;
    msg << op << ": spin channel closed, E = " << kin.energy()
        << " <= hbar|omega|/2 = " << barrier;
    throw ChannelClosedError(msg.str());
  }
}

// Real local wavenumbers of both channels for an open square region.
struct ChannelWavenumbers {
  double k_up;
  double k_down;
  // k_down - k_up without cancellation.
  double difference;
};

ChannelWavenumbers open_channels(double k, double shift) {
  const double k_up = std::sqrt(k * k - shift);
  const double k_down = std::sqrt(k * k + shift);
  return {k_up, k_down, 2.0 * shift / (k_up + k_down)};
}

// arg of (k+q)^2 - (k-q)^2 e^{4iqa} for real q > 0; always in (-pi/2, pi/2).
double multiple_reflection_phase(double k, double q, double kappa, double a) {
  const double k_minus_q = kappa / (k + q);
  const Complex d = (k + q) * (k + q) -
                    k_minus_q * k_minus_q * std::polar(1.0, 4.0 * q * a);
  return std::arg(d);
}

double phase_with_free_flight(const NeutronKinematics& kin,
                              const FieldProfile& profile, SpinSign spin) {
  const ScatteringCoefficients c =
      square_field_coefficients(kin, profile, spin);
  return std::arg(c.t * std::polar(1.0, 2.0 * kin.k() * profile.half_width()));
}

}  // namespace

NeutronKinematics NeutronKinematics::from_energy(double energy, double mass,
                                                 double hbar) {
  require_positive(energy, "energy E");
  require_positive(mass, "mass m");
  require_positive(hbar, "hbar");
  NeutronKinematics kin;
  kin.energy_ = energy;
  kin.mass_ = mass;
  kin.hbar_ = hbar;
  kin.k_ = std::sqrt(2.0 * mass * energy) / hbar;
  kin.v_ = hbar * kin.k_ / mass;
  return kin;
}

NeutronKinematics NeutronKinematics::from_wavenumber(double k, double mass,
                                                     double hbar) {
  require_positive(k, "wavenumber k");
  require_positive(mass, "mass m");
  require_positive(hbar, "hbar");
  NeutronKinematics kin;
  kin.mass_ = mass;
  kin.hbar_ = hbar;
  kin.k_ = k;
  kin.energy_ = hbar * hbar * k * k / (2.0 * mass);
  kin.v_ = hbar * k / mass;
  return kin;
}

double ramp_value(RampShape shape, double s) {
  switch (shape) {
    case RampShape::kCubicSmoothstep:
      if (s <= 0.0) return 1.0;
      if (s >= 1.0) return 0.0;
      return 1.0 - s * s * (3.0 - 2.0 * s);
  }
  return 0.0;
}

double ramp_max_slope(RampShape shape) {
  switch (shape) {
    case RampShape::kCubicSmoothstep:
      return 1.5;  // |6 s (1 - s)| at s = 1/2
  }
  return 0.0;
}

double ramp_support(RampShape shape) {
  switch (shape) {
    case RampShape::kCubicSmoothstep:
      return 1.0;
  }
  return 0.0;
}

FieldProfile FieldProfile::square(double omega, double half_width) {
  return smooth(omega, half_width, 0.0);
}

FieldProfile FieldProfile::smooth(double omega, double half_width,
                                  double ramp_length, RampShape shape) {
  if (!std::isfinite(omega)) throw DomainError("omega must be finite");
  require_positive(half_width, "half-width a");
  if (!(ramp_length >= 0.0) || !std::isfinite(ramp_length)) {
    std::ostringstream msg;
    msg << "ramp length l must be non-negative, got " << ramp_length;
    throw DomainError(msg.str());
  }
  FieldProfile p;
  p.omega_ = omega;
  p.half_width_ = half_width;
  p.ramp_length_ = ramp_length;
  p.shape_ = shape;
  return p;
}

FieldProfile FieldProfile::from_field(double b, double mu, double half_width,
                                      double ramp_length, RampShape shape) {
  if (!std::isfinite(b) || !std::isfinite(mu)) {
    throw DomainError("field strength and magnetic moment must be finite");
  }
  FieldProfile p = smooth(-mu * b, half_width, ramp_length, shape);
  p.b_ = b;
  return p;
}

FieldProfile FieldProfile::with_omega(double omega) const {
  FieldProfile p = smooth(omega, half_width_, ramp_length_, shape_);
  return p;
}

double FieldProfile::weight(double x) const {
  const double outside = std::abs(x) - half_width_;
  if (outside <= 0.0) return 1.0;
  if (ramp_length_ == 0.0) return 0.0;
  return ramp_value(shape_, outside / ramp_length_);
}

double FieldProfile::max_weight_slope() const {
  if (ramp_length_ == 0.0) return 0.0;
  return ramp_max_slope(shape_) / ramp_length_;
}

double FieldProfile::support_half_width() const {
  return half_width_ + ramp_length_ * ramp_support(shape_);
}

ScatteringCoefficients square_field_coefficients(const NeutronKinematics& kin,
                                                 const FieldProfile& profile,
                                                 SpinSign spin) {
  require_square(profile, "square_field_coefficients");
  const double k = kin.k();
  const double a = profile.half_width();
  // kappa = k^2 - q^2, exactly +-m omega / hbar.
  const double kappa = sign_of(spin) * coupling(kin, profile);
  const double q2 = k * k - kappa;
  if (q2 == 0.0) {
    std::ostringstream msg;
    msg << "local wavenumber vanishes: E equals the magnetic energy "
        << std::abs(profile.magnetic_energy(kin.hbar()));
    throw ThresholdError(msg.str());
  }
  // Principal branch with Im q >= 0; evanescent waves decay into the region.
  const Complex q = std::sqrt(Complex{q2, 0.0});
  const Complex k_plus_q = k + q;
  const Complex k_minus_q = kappa / k_plus_q;
  const Complex e2 = std::exp(2.0 * kI * q * a);  // |e2| <= 1
  const Complex e4 = e2 * e2;
  const Complex free = std::polar(1.0, -2.0 * k * a);

  // Both closed forms multiplied through by e^{2iqa} so that no factor grows
  // for tunneling.
  const Complex t = 4.0 * k * q * free * e2 /
                    (k_plus_q * k_plus_q - k_minus_q * k_minus_q * e4);
  const Complex r = kappa * free * (e4 - 1.0) /
                    (k_minus_q * k_minus_q * e4 - k_plus_q * k_plus_q);
  return {t, r};
}

SpinTransmission spin_transmission(const NeutronKinematics& kin,
                                   const FieldProfile& profile) {
  const ScatteringCoefficients up =
      square_field_coefficients(kin, profile, SpinSign::kUp);
  const ScatteringCoefficients down =
      square_field_coefficients(kin, profile, SpinSign::kDown);
  SpinTransmission out{up.t, down.t, up.r, down.r, 0.0};
  if (kin.energy() > std::abs(profile.magnetic_energy(kin.hbar()))) {
    out.alpha = rotation_angle_exact(kin, profile);
  } else {
    out.alpha = std::arg(down.t * std::conj(up.t));
  }
  return out;
}

WeakFieldTransmission weak_field_transmission(const NeutronKinematics& kin,
                                              const FieldProfile& profile) {
  const double ratio =
      std::abs(kin.hbar() * profile.omega()) / kin.energy();
  if (ratio > kWeakFieldMaxRatio) {
    std::ostringstream msg;
    msg << "weak-field approximation invalid: hbar|omega|/E = " << ratio
        << " > " << kWeakFieldMaxRatio;
    throw DomainError(msg.str());
  }
  WeakFieldTransmission out;
  out.classical_time = 2.0 * profile.half_width() / kin.v();
  out.alpha = profile.omega() * out.classical_time;
  out.t_plus = unit_phase(-0.5 * out.alpha);
  out.t_minus = unit_phase(0.5 * out.alpha);
  if (ratio >= kWeakFieldWarnRatio) {
    std::ostringstream msg;
    msg << "hbar|omega|/E = " << ratio
        << " is not small; weak-field phase is inaccurate";
    out.warning = msg.str();
  }
  return out;
}

SemiclassicalPhase semiclassical_phase(const NeutronKinematics& kin,
                                       const FieldProfile& profile) {
  require_open_channels(kin, profile, "semiclassical_phase");
  const double k2 = kin.k() * kin.k();
  const double shift = coupling(kin, profile);

  // k-(x) - k+(x) as a function of the local weight w.
  auto difference = [k2, shift](double w) {
    const double s = shift * w;
    return 2.0 * s / (std::sqrt(k2 - s) + std::sqrt(k2 + s));
  };

  SemiclassicalPhase out;
  const double a = profile.half_width();
  out.flat_top = 2.0 * a * difference(1.0);

  const double l = profile.ramp_length();
  if (l > 0.0) {
    const double x_end = profile.support_half_width();
    for (const double side : {-1.0, 1.0}) {
      auto integrand = [&](double x) {
        return difference(profile.weight(side * x));
      };
      const QuadratureResult q = adaptive_simpson(integrand, a, x_end,
                                                  kRampQuadratureTolerance);
      out.evaluations += q.evaluations;
      if (!q.converged) {
        std::ostringstream msg;
        msg << "ramp quadrature did not converge to "
            << kRampQuadratureTolerance << " on the "
            << (side < 0 ? "left" : "right") << " ramp: estimate "
            << q.value << " +- " << q.error_estimate
            << ", first failing subinterval |x| in [" << q.worst_left << ", "
            << q.worst_left + q.worst_width << "] after " << q.evaluations
            << " evaluations";
        throw NumericalError(msg.str());
      }
      out.ramps += q.value;
    }
    const double kl = kin.k() * l;
    if (kl < kSemiclassicalWarnKl) {
      std::ostringstream msg;
      msg << "k l = " << kl << " < " << kSemiclassicalWarnKl
          << "; semiclassical phase is unreliable for abrupt switching";
      out.warning = msg.str();
    }
  }
  out.alpha = out.flat_top + out.ramps;
  return out;
}

double rotation_angle_exact(const NeutronKinematics& kin,
                            const FieldProfile& profile) {
  require_square(profile, "rotation_angle_exact");
  require_open_channels(kin, profile, "rotation_angle_exact");
  const double k = kin.k();
  const double a = profile.half_width();
  const double shift = coupling(kin, profile);
  const ChannelWavenumbers q = open_channels(k, shift);
  // arg T = 2a(q - k) - arg D with Re D > 0, so the sum below is the
  // continuous branch through alpha(0) = 0.
  const double d_up = multiple_reflection_phase(k, q.k_up, shift, a);
  const double d_down = multiple_reflection_phase(k, q.k_down, -shift, a);
  return 2.0 * a * q.difference - (d_down - d_up);
}

std::vector<double> rotation_angle_sweep(const NeutronKinematics& kin,
                                         const FieldProfile& profile,
                                         std::span<const double> omegas) {
  std::vector<double> principal;
  principal.reserve(omegas.size() + 1);
  principal.push_back(0.0);  // alpha(omega = 0)
  for (const double omega : omegas) {
    const FieldProfile p = profile.with_omega(omega);
    require_open_channels(kin, p, "rotation_angle_sweep");
    const Complex up = square_field_coefficients(kin, p, SpinSign::kUp).t;
    const Complex down = square_field_coefficients(kin, p, SpinSign::kDown).t;
    principal.push_back(std::arg(down * std::conj(up)));
  }
  std::vector<double> unwrapped = unwrap_phases(principal);
  unwrapped.erase(unwrapped.begin());
  return unwrapped;
}

double sojourn_time(const NeutronKinematics& kin, const FieldProfile& profile,
                    const Spinor& spinor) {
  require_open_channels(kin, profile, "sojourn_time");
  const ChannelWavenumbers q = open_channels(kin.k(), coupling(kin, profile));
  const double v_up = kin.hbar() * q.k_up / kin.mass();
  const double v_down = kin.hbar() * q.k_down / kin.mass();
  const double width = 2.0 * profile.half_width();
  return width / v_up * spinor.prob_up() + width / v_down * spinor.prob_down();
}

GroupDelays group_delays(const NeutronKinematics& kin,
                         const FieldProfile& profile) {
  require_square(profile, "group_delays");
  const double h = kGroupDelayRelativeStep * kin.energy();
  const double barrier = std::abs(profile.magnetic_energy(kin.hbar()));
  if (!(kin.energy() - h > barrier)) {
    std::ostringstream msg;
    msg << "group_delays: spin channel closed within the stencil [E - h, E + "
           "h], E = "
        << kin.energy() << ", h = " << h << ", hbar|omega|/2 = " << barrier;
    throw ChannelClosedError(msg.str());
  }
  const NeutronKinematics lo = kin.with_energy(kin.energy() - h);
  const NeutronKinematics hi = kin.with_energy(kin.energy() + h);
  auto delay = [&](SpinSign spin) {
    const double dphi = wrap_to_pi(phase_with_free_flight(hi, profile, spin) -
                                   phase_with_free_flight(lo, profile, spin));
    return kin.hbar() * dphi / (2.0 * h);
  };
  return {delay(SpinSign::kUp), delay(SpinSign::kDown)};
}

}  // namespace fourpi::magnetic
