#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fourpi/interferometer.hpp"
#include "fourpi/magnetic_region.hpp"

namespace fourpi::cli {

// Invalid configuration: unknown key, malformed value or violated range.
// Maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ScanKind { kAlpha, kField, kThickness, kDetuning, kOracle };

std::string_view to_string(ScanKind kind);
std::string_view to_string(interferometer::PhaseMode mode);

struct ScanRange {
  double start = 0.0;
  double stop = 1.0;
  int points = 101;
};

// Parameters held fixed during a scan. Natural units m = hbar = 1 by
// default.
struct FixedParams {
  double tau = 0.25 * 3.14159265358979323846;
  double y = 0.0;
  double energy = 1.0e6;
  double mass = 1.0;
  double hbar = 1.0;
  double omega = 0.0;
  double mu = -1.0;  // omega = -mu B for field scans
  double a = 1.0;
  double l = 0.0;
  interferometer::PhaseMode mode = interferometer::PhaseMode::kWeak;
  double spin_up_prob = 1.0;  // spinor (1, 0)
  double count_rate = 1.0;    // I0 multiplying printed intensities
  int segments = 16;          // oracle discretization
  magnetic::SpinSign spin = magnetic::SpinSign::kUp;
};

struct ScanConfig {
  ScanKind kind = ScanKind::kAlpha;
  ScanRange range;
  FixedParams fixed;
  std::optional<std::string> output_path;
  std::optional<std::string> svg_path;
};

// Default sweep range of each scan kind.
ScanRange default_range(ScanKind kind);

// One `key = value` assignment and where it came from, for diagnostics
// ("run.cfg:7" or "--tau").
struct Assignment {
  std::string key;
  std::string value;
  std::string origin;
};

// Splits a flat `key = value` file into assignments. `#` starts a comment;
// blank lines are ignored. Throws ConfigError on lines without '='.
std::vector<Assignment> parse_assignments(std::string_view text,
                                          std::string_view source_name);

// Builds the effective configuration: defaults, then file assignments, then
// flag overrides (later assignments win). Throws ConfigError naming the key
// and its origin on unknown keys, malformed values or invalid ranges.
ScanConfig resolve_config(ScanKind kind,
                          const std::vector<Assignment>& file_assignments,
                          const std::vector<Assignment>& overrides);

// Reads and parses `path`; a missing file is a ConfigError.
std::vector<Assignment> load_config_file(const std::string& path);

// Parses a real number, also accepting multiples of pi: "pi", "2pi",
// "8*pi", "pi/4", "0.5*pi/3". Returns nullopt on malformed input.
std::optional<double> parse_real(std::string_view text);

}  // namespace fourpi::cli
