#include "fourpi_cli/scan.hpp"

#include <algorithm>
#include <string>
#include <cmath>
#include <complex>

#include "fourpi/crystal_optics.hpp"
#include "fourpi/errors.hpp"
#include "fourpi/interferometer.hpp"
#include "fourpi/magnetic_region.hpp"
#include "fourpi/phase.hpp"
#include "fourpi/schrodinger_oracle.hpp"

namespace fourpi::cli {
namespace {

using interferometer::BeamOutputs;
using magnetic::FieldProfile;
using magnetic::NeutronKinematics;

// Route warnings repeat at every grid point with a slightly different
// value; keep the first and count the rest.
struct WarningLog {
  std::optional<std::string> first;
  int points = 0;
};

void note(WarningLog& log, const std::optional<std::string>& warning) {
  if (!warning) return;
  if (!log.first) log.first = warning;
  ++log.points;
}

void flush(ScanTable& table, const WarningLog& log) {
  if (!log.first) return;
  std::string line = *log.first;
  if (log.points > 1) {
    line += " (first of " + std::to_string(log.points) + " grid points)";
  }
  table.warnings.push_back(std::move(line));
}

NeutronKinematics kinematics(const FixedParams& f) {
  return NeutronKinematics::from_energy(f.energy, f.mass, f.hbar);
}

FieldProfile profile_for_omega(const FixedParams& f, double omega) {
  return FieldProfile::smooth(omega, f.a, f.l);
}

// Rotation angle for the fixed parameters, surfacing route warnings.
double alpha_for(const FixedParams& f, const NeutronKinematics& kin,
                 const FieldProfile& profile, WarningLog& log) {
  switch (f.mode) {
    case interferometer::PhaseMode::kWeak: {
      const auto w = magnetic::weak_field_transmission(kin, profile);
      note(log, w.warning);
      return w.alpha;
    }
    case interferometer::PhaseMode::kSemiclassical: {
      const auto s = magnetic::semiclassical_phase(kin, profile);
      note(log, s.warning);
      return s.alpha;
    }
    case interferometer::PhaseMode::kExact:
      break;
  }
  return interferometer::field_to_alpha(kin, profile, f.mode);
}

ScanTable scan_alpha(const ScanConfig& c) {
  const FixedParams& f = c.fixed;
  ScanTable table;
  table.columns = {"alpha_rad", "i1", "i2", "i3", "i4"};
  table.plotted = {"i1", "i2", "i3", "i4"};
  const auto amps = crystal::plate_amplitudes(f.tau, f.y);
  const Spinor spin = Spinor::from_spin_up_probability(f.spin_up_prob);
  for (const double alpha : linear_grid(c.range)) {
    const BeamOutputs b = interferometer::beam_amplitudes(amps, alpha, spin);
    table.rows.push_back({alpha, f.count_rate * b.i1(), f.count_rate * b.i2(),
                          f.count_rate * b.i3(), f.count_rate * b.i4()});
  }
  return table;
}

ScanTable scan_field(const ScanConfig& c) {
  const FixedParams& f = c.fixed;
  ScanTable table;
  table.columns = {"b_field", "alpha_rad", "i2", "i3"};
  table.plotted = {"i2", "i3"};
  const auto kin = kinematics(f);
  const auto amps = crystal::plate_amplitudes(f.tau, f.y);
  const Spinor spin = Spinor::from_spin_up_probability(f.spin_up_prob);
  WarningLog log;
  for (const double b : linear_grid(c.range)) {
    const FieldProfile profile = FieldProfile::from_field(b, f.mu, f.a, f.l);
    const double alpha = alpha_for(f, kin, profile, log);
    const BeamOutputs out = interferometer::beam_amplitudes(amps, alpha, spin);
    table.rows.push_back(
        {b, alpha, f.count_rate * out.i2(), f.count_rate * out.i3()});
  }
  flush(table, log);
  return table;
}

ScanTable scan_thickness(const ScanConfig& c) {
  const FixedParams& f = c.fixed;
  ScanTable table;
  table.columns = {"d_over_delta", "i2", "i3", "i2_plus_i3"};
  table.plotted = {"i2", "i3", "i2_plus_i3"};
  const Spinor spin = Spinor::from_spin_up_probability(f.spin_up_prob);
  double alpha = 0.0;
  if (f.omega != 0.0) {
    WarningLog log;
    alpha = alpha_for(f, kinematics(f), profile_for_omega(f, f.omega), log);
    flush(table, log);
  }
  for (const double ratio : linear_grid(c.range)) {
    const auto amps = crystal::plate_amplitudes(kPi * ratio, f.y);
    const BeamOutputs out = interferometer::beam_amplitudes(amps, alpha, spin);
    const double i2 = f.count_rate * out.i2();
    const double i3 = f.count_rate * out.i3();
    table.rows.push_back({ratio, i2, i3, i2 + i3});
  }
  return table;
}

ScanTable scan_detuning(const ScanConfig& c) {
  const FixedParams& f = c.fixed;
  ScanTable table;
  table.columns = {"y", "abs_at_sq", "abs_ar_sq"};
  table.plotted = {"abs_at_sq", "abs_ar_sq"};
  for (const double y : linear_grid(c.range)) {
    const auto amps = crystal::plate_amplitudes(f.tau, y);
    table.rows.push_back({y, std::norm(amps.a_t), std::norm(amps.a_r)});
  }
  return table;
}

ScanTable scan_oracle(const ScanConfig& c) {
  const FixedParams& f = c.fixed;
  ScanTable table;
  table.columns = {"energy", "t_re", "t_im", "t_ref_re", "t_ref_im", "abs_err"};
  table.plotted = {"abs_err"};
  const FieldProfile profile = FieldProfile::square(f.omega, f.a);
  const auto segments = oracle::discretize_profile(
      profile, f.spin, static_cast<std::size_t>(f.segments), f.hbar);
  double max_err = 0.0;
  for (const double energy : linear_grid(c.range)) {
    const auto kin = NeutronKinematics::from_energy(energy, f.mass, f.hbar);
    const auto closed = magnetic::square_field_coefficients(kin, profile, f.spin);
    const auto ref =
        oracle::transfer_matrix_transmission(segments, energy, f.mass, f.hbar);
    const double err = std::abs(closed.t - ref.t);
    max_err = std::max(max_err, err);
    table.rows.push_back({energy, closed.t.real(), closed.t.imag(),
                          ref.t.real(), ref.t.imag(), err});
  }
  table.summary.push_back("max_abs_err = " + format_value(max_err));
  table.summary.push_back(std::string("oracle_agreement = ") +
                          (max_err < 1e-10 ? "pass" : "fail") +
                          " (tolerance 1e-10)");
  return table;
}

}  // namespace

std::vector<double> linear_grid(const ScanRange& range) {
  std::vector<double> grid(static_cast<std::size_t>(range.points));
  const double step =
      (range.stop - range.start) / static_cast<double>(range.points - 1);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] = range.start + step * static_cast<double>(i);
  }
  grid.back() = range.stop;
  return grid;
}

ScanTable run_scan(const ScanConfig& config) {
  switch (config.kind) {
    case ScanKind::kAlpha: return scan_alpha(config);
    case ScanKind::kField: return scan_field(config);
    case ScanKind::kThickness: return scan_thickness(config);
    case ScanKind::kDetuning: return scan_detuning(config);
    case ScanKind::kOracle: return scan_oracle(config);
  }
  throw DomainError("unknown scan kind");
}

}  // namespace fourpi::cli
