#include "fourpi/schrodinger_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fourpi/errors.hpp"

namespace fourpi::oracle {

SegmentedProfile SegmentedProfile::make(std::vector<double> breakpoints,
                                        std::vector<double> potential_values) {
  if (breakpoints.size() < 2) {
    throw DomainError("segmented profile needs at least one segment");
  }
  if (potential_values.size() + 1 != breakpoints.size()) {
    std::ostringstream msg;
    msg << "segmented profile has " << breakpoints.size()
        << " breakpoints but " << potential_values.size() << " values";
    throw DomainError(msg.str());
  }
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (!std::isfinite(breakpoints[i])) {
      throw DomainError("segmented profile breakpoints must be finite");
    }
    if (i > 0 && !(breakpoints[i] > breakpoints[i - 1])) {
      std::ostringstream msg;
      msg << "breakpoints must be strictly increasing, got "
          << breakpoints[i - 1] << " then " << breakpoints[i];
      throw DomainError(msg.str());
    }
  }
  for (const double v : potential_values) {
    if (!std::isfinite(v)) {
      throw DomainError("segmented profile potentials must be finite");
    }
  }
  SegmentedProfile p;
  p.breakpoints_ = std::move(breakpoints);
  p.values_ = std::move(potential_values);
  return p;
}

double SegmentedProfile::potential_at(double x) const {
  if (x < breakpoints_.front() || x >= breakpoints_.back()) return 0.0;
  const auto it =
      std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

SegmentedProfile SegmentedProfile::reversed() const {
  SegmentedProfile p;
  p.breakpoints_.reserve(breakpoints_.size());
  for (auto it = breakpoints_.rbegin(); it != breakpoints_.rend(); ++it) {
    p.breakpoints_.push_back(-*it);
  }
  p.values_.assign(values_.rbegin(), values_.rend());
  return p;
}

SegmentedProfile discretize_profile(const magnetic::FieldProfile& profile,
                                    magnetic::SpinSign spin,
                                    std::size_t n_segments, double hbar) {
  if (n_segments < 1) throw DomainError("n_segments must be at least 1");
  const double extent = profile.support_half_width();
  const double height = magnetic::sign_of(spin) * profile.magnetic_energy(hbar);
  const double width = 2.0 * extent / static_cast<double>(n_segments);

  std::vector<double> breakpoints(n_segments + 1);
  std::vector<double> values(n_segments);
  for (std::size_t i = 0; i <= n_segments; ++i) {
    breakpoints[i] = -extent + width * static_cast<double>(i);
  }
  breakpoints.back() = extent;
  for (std::size_t i = 0; i < n_segments; ++i) {
    const double mid = 0.5 * (breakpoints[i] + breakpoints[i + 1]);
    values[i] = height * profile.weight(mid);
  }
  return SegmentedProfile::make(std::move(breakpoints), std::move(values));
}

OracleResult transfer_matrix_transmission(const SegmentedProfile& profile,
                                          double energy, double mass,
                                          double hbar) {
  if (!(energy > 0.0) || !std::isfinite(energy)) {
    std::ostringstream msg;
    msg << "oracle energy must be positive, got " << energy;
    throw DomainError(msg.str());
  }
  const auto& x = profile.breakpoints();
  const auto& v = profile.potential_values();
  const std::size_t n = v.size();
  const double scale = 2.0 * mass / (hbar * hbar);
  const double k = std::sqrt(scale * energy);

  // Regions 0 and n+1 are free; region i in 1..n is segment i-1.
  std::vector<Complex> q(n + 2, Complex{k, 0.0});
  for (std::size_t i = 0; i < n; ++i) {
    const double q2 = scale * (energy - v[i]);
    if (q2 == 0.0) {
      std::ostringstream msg;
      msg << "zero local wavenumber in segment " << i << ": E = " << energy
          << " equals the segment potential";
      throw ThresholdError(msg.str());
    }
    q[i + 1] = std::sqrt(Complex{q2, 0.0});  // Im q >= 0
  }
  auto width = [&](std::size_t region) { return x[region] - x[region - 1]; };
  const Complex i_unit{0.0, 1.0};

  // gamma_right[j]: backward/forward ratio just right of interface j (at
  // x[j]), inside region j+1.
  std::vector<Complex> gamma_right(n + 1);
  std::vector<Complex> fresnel(n + 1);
  Complex gamma{0.0, 0.0};  // nothing comes back from +infinity
  for (std::size_t j = n + 1; j-- > 0;) {
    gamma_right[j] = gamma;
    const Complex ql = q[j];
    const Complex qr = q[j + 1];
    fresnel[j] = (ql - qr) / (ql + qr);
    const Complex gamma_left =
        (fresnel[j] + gamma) / (1.0 + fresnel[j] * gamma);
    if (j > 0) {
      // Carry the ratio across region j to its left edge.
      gamma = gamma_left * std::exp(2.0 * i_unit * q[j] * width(j));
    } else {
      gamma = gamma_left;
    }
  }

  OracleResult out;
  out.r = gamma * std::polar(1.0, 2.0 * k * x.front());

  // Forward amplitude, starting from e^{ik x_0} left of the first interface.
  Complex forward{1.0, 0.0};
  double phase = 0.0;
  for (std::size_t j = 0; j <= n; ++j) {
    const Complex step =
        (1.0 + fresnel[j]) / (1.0 + fresnel[j] * gamma_right[j]);
    forward *= step;
    phase += std::arg(step);
    if (j < n) {
      const Complex propagate = std::exp(i_unit * q[j + 1] * width(j + 1));
      forward *= propagate;
      phase += q[j + 1].real() * width(j + 1);
    }
  }
  // Forward amplitudes were tracked relative to e^{ik x_0}; T e^{ik x_n} on
  // the right.
  const double span = x.back() - x.front();
  out.t = forward * std::polar(1.0, -k * span);
  out.phase = phase - k * span;
  return out;
}

}  // namespace fourpi::oracle
