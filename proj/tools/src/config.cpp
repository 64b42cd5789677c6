#include "fourpi_cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace fourpi::cli {
namespace {

constexpr double kPi = 3.14159265358979323846;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_plain(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

[[noreturn]] void fail(const Assignment& a, std::string_view what) {
  std::ostringstream msg;
  msg << a.origin << ": key '" << a.key << "': " << what;
  throw ConfigError(msg.str());
}

double real_value(const Assignment& a) {
  const auto v = parse_real(a.value);
  if (!v || !std::isfinite(*v)) {
    fail(a, "malformed number '" + a.value + "'");
  }
  return *v;
}

int integer_value(const Assignment& a) {
  const std::string_view s = trim(a.value);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    fail(a, "expected an integer, got '" + a.value + "'");
  }
  return value;
}

using Setter = std::function<void(ScanConfig&, const Assignment&)>;

Setter real_field(double FixedParams::*member) {
  return [member](ScanConfig& c, const Assignment& a) {
    c.fixed.*member = real_value(a);
  };
}

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"tau", real_field(&FixedParams::tau)},
      {"y", real_field(&FixedParams::y)},
      {"energy", real_field(&FixedParams::energy)},
      {"mass", real_field(&FixedParams::mass)},
      {"hbar", real_field(&FixedParams::hbar)},
      {"omega", real_field(&FixedParams::omega)},
      {"mu", real_field(&FixedParams::mu)},
      {"a", real_field(&FixedParams::a)},
      {"l", real_field(&FixedParams::l)},
      {"spin_up_prob", real_field(&FixedParams::spin_up_prob)},
      {"count_rate", real_field(&FixedParams::count_rate)},
      {"segments",
       [](ScanConfig& c, const Assignment& a) {
         c.fixed.segments = integer_value(a);
       }},
      {"mode",
       [](ScanConfig& c, const Assignment& a) {
         const std::string_view v = trim(a.value);
         if (v == "weak") {
           c.fixed.mode = interferometer::PhaseMode::kWeak;
         } else if (v == "exact") {
           c.fixed.mode = interferometer::PhaseMode::kExact;
         } else if (v == "semiclassical") {
           c.fixed.mode = interferometer::PhaseMode::kSemiclassical;
         } else {
           fail(a, "expected weak, exact or semiclassical, got '" + a.value +
                       "'");
         }
       }},
      {"spin",
       [](ScanConfig& c, const Assignment& a) {
         const std::string_view v = trim(a.value);
         if (v == "up") {
           c.fixed.spin = magnetic::SpinSign::kUp;
         } else if (v == "down") {
           c.fixed.spin = magnetic::SpinSign::kDown;
         } else {
           fail(a, "expected up or down, got '" + a.value + "'");
         }
       }},
      {"from",
       [](ScanConfig& c, const Assignment& a) {
         c.range.start = real_value(a);
       }},
      {"to",
       [](ScanConfig& c, const Assignment& a) {
         c.range.stop = real_value(a);
       }},
      {"points",
       [](ScanConfig& c, const Assignment& a) {
         c.range.points = integer_value(a);
       }},
      {"out",
       [](ScanConfig& c, const Assignment& a) {
         c.output_path = std::string(trim(a.value));
       }},
      {"svg",
       [](ScanConfig& c, const Assignment& a) {
         c.svg_path = std::string(trim(a.value));
       }},
  };
  return table;
}

// Checks that do not depend on which physics route a scan takes.
void validate(const ScanConfig& c) {
  auto bad = [](const std::string& what) { throw ConfigError(what); };
  if (c.range.points < 2) {
    bad("points must be at least 2, got " + std::to_string(c.range.points));
  }
  if (!(c.range.start < c.range.stop)) {
    std::ostringstream msg;
    msg << "scan range requires from < to, got from = " << c.range.start
        << ", to = " << c.range.stop;
    bad(msg.str());
  }
  const FixedParams& f = c.fixed;
  if (!(f.energy > 0.0)) bad("energy must be positive");
  if (!(f.mass > 0.0)) bad("mass must be positive");
  if (!(f.hbar > 0.0)) bad("hbar must be positive");
  if (!(f.a > 0.0)) bad("a must be positive");
  if (!(f.l >= 0.0)) bad("l must be non-negative");
  if (!(f.spin_up_prob >= 0.0 && f.spin_up_prob <= 1.0)) {
    bad("spin_up_prob must lie in [0, 1]");
  }
  if (f.segments < 1) bad("segments must be at least 1");
  if (c.kind == ScanKind::kOracle && f.l != 0.0) {
    bad("oracle scan compares square-profile closed forms; l must be 0");
  }
  if (c.kind == ScanKind::kThickness && c.range.start < 0.0) {
    bad("thickness scan requires d/delta >= 0");
  }
  if (c.kind == ScanKind::kOracle && !(c.range.start > 0.0)) {
    bad("oracle scan energies must be positive");
  }
}

}  // namespace

std::string_view to_string(ScanKind kind) {
  switch (kind) {
    case ScanKind::kAlpha: return "alpha";
    case ScanKind::kField: return "field";
    case ScanKind::kThickness: return "thickness";
    case ScanKind::kDetuning: return "detuning";
    case ScanKind::kOracle: return "oracle";
  }
  return "?";
}

std::string_view to_string(interferometer::PhaseMode mode) {
  switch (mode) {
    case interferometer::PhaseMode::kWeak: return "weak";
    case interferometer::PhaseMode::kExact: return "exact";
    case interferometer::PhaseMode::kSemiclassical: return "semiclassical";
  }
  return "?";
}

ScanRange default_range(ScanKind kind) {
  switch (kind) {
    case ScanKind::kAlpha: return {0.0, 8.0 * kPi, 101};
    case ScanKind::kField: return {0.0, 2.0e4, 101};
    case ScanKind::kThickness: return {0.0, 2.0, 101};
    case ScanKind::kDetuning: return {-5.0, 5.0, 101};
    case ScanKind::kOracle: return {1.0, 10.0, 20};
  }
  return {};
}

std::optional<double> parse_real(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) return std::nullopt;

  const auto pi_pos = s.find("pi");
  if (pi_pos == std::string_view::npos) return parse_plain(s);

  // [coefficient['*']]pi['/'divisor]
  std::string_view head = trim(s.substr(0, pi_pos));
  std::string_view tail = trim(s.substr(pi_pos + 2));
  double coefficient = 1.0;
  if (!head.empty() && head.back() == '*') head = trim(head.substr(0, head.size() - 1));
  if (head == "-") {
    coefficient = -1.0;
  } else if (!head.empty()) {
    const auto c = parse_plain(head);
    if (!c) return std::nullopt;
    coefficient = *c;
  }
  double divisor = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') return std::nullopt;
    const auto d = parse_plain(tail.substr(1));
    if (!d || *d == 0.0) return std::nullopt;
    divisor = *d;
  }
  return coefficient * kPi / divisor;
}

std::vector<Assignment> parse_assignments(std::string_view text,
                                          std::string_view source_name) {
  std::vector<Assignment> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    std::ostringstream origin;
    origin << source_name << ":" << line_no;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(origin.str() + ": expected 'key = value', got '" +
                        std::string(line) + "'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    if (key.empty()) {
      throw ConfigError(origin.str() + ": missing key before '='");
    }
    out.push_back({std::string(key), std::string(trim(line.substr(eq + 1))),
                   origin.str()});
  }
  return out;
}

ScanConfig resolve_config(ScanKind kind,
                          const std::vector<Assignment>& file_assignments,
                          const std::vector<Assignment>& overrides) {
  ScanConfig config;
  config.kind = kind;
  config.range = default_range(kind);
  for (const auto* list : {&file_assignments, &overrides}) {
    for (const Assignment& a : *list) {
      const auto it = setters().find(a.key);
      if (it == setters().end()) fail(a, "unknown key");
      it->second(config, a);
    }
  }
  validate(config);
  return config;
}

std::vector<Assignment> load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_assignments(buffer.str(), path);
}

}  // namespace fourpi::cli
