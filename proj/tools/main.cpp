#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fourpi/errors.hpp"
#include "fourpi_cli/config.hpp"
#include "fourpi_cli/scan.hpp"

namespace {

using fourpi::cli::Assignment;
using fourpi::cli::ConfigError;
using fourpi::cli::ScanKind;

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Subcommand {
  ScanKind kind;
  CLI::App* app = nullptr;
  std::string config_path;
  // flag name -> raw value, parsed later with the config-file rules so that
  // both sources share one diagnostic path.
  std::map<std::string, std::string> flags;
};

// Flag spelling -> config key.
const std::vector<std::pair<std::string, std::string>> kOverrideFlags = {
    {"out", "out"},       {"svg", "svg"},     {"points", "points"},
    {"from", "from"},     {"to", "to"},       {"tau", "tau"},
    {"y", "y"},           {"omega", "omega"}, {"a", "a"},
    {"l", "l"},           {"energy", "energy"}, {"mode", "mode"},
    {"spin-up-prob", "spin_up_prob"},
};

void add_flags(Subcommand& sub) {
  sub.app->add_option("--config", sub.config_path,
                      "flat key = value configuration file");
  for (const auto& [flag, key] : kOverrideFlags) {
    auto* opt = sub.app->add_option_function<std::string>(
        "--" + flag,
        [&sub, key = key](const std::string& v) { sub.flags[key] = v; },
        "override '" + key + "'");
    opt->allow_extra_args(false);
  }
}

void write_outputs(const fourpi::cli::ScanConfig& config,
                   const fourpi::cli::ScanTable& table,
                   const std::string& title) {
  if (config.output_path) {
    std::ofstream out(*config.output_path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + *config.output_path + "'");
    fourpi::cli::write_csv(out, table);
  } else {
    fourpi::cli::write_csv(std::cout, table);
  }
  if (config.svg_path) {
    std::ofstream svg(*config.svg_path, std::ios::binary);
    if (!svg) throw ConfigError("cannot write '" + *config.svg_path + "'");
    fourpi::cli::write_svg(svg, table, title);
  }
  std::ostream& summary = config.output_path ? std::cout : std::cerr;
  for (const auto& line : table.summary) summary << line << '\n';
  for (const auto& w : table.warnings) std::cerr << "warning: " << w << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-plate neutron interferometer with a spin-rotating field"};
  app.require_subcommand(1);

  std::vector<Subcommand> subs = {
      {ScanKind::kAlpha}, {ScanKind::kField}, {ScanKind::kThickness},
      {ScanKind::kDetuning}, {ScanKind::kOracle}};
  const std::map<ScanKind, std::pair<std::string, std::string>> names = {
      {ScanKind::kAlpha, {"scan-alpha", "beam intensities versus rotation angle"}},
      {ScanKind::kField, {"scan-field", "rotation angle and I2, I3 versus field strength"}},
      {ScanKind::kThickness, {"scan-thickness", "Pendelloesung fringes versus d/delta"}},
      {ScanKind::kDetuning, {"scan-detuning", "plate rocking curve versus y"}},
      {ScanKind::kOracle, {"oracle", "closed-form vs transfer-matrix transmission"}},
  };
  for (auto& sub : subs) {
    const auto& [name, help] = names.at(sub.kind);
    sub.app = app.add_subcommand(name, help);
    add_flags(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  for (const auto& sub : subs) {
    if (!sub.app->parsed()) continue;
    const std::string title = sub.app->get_name();
    try {
      std::vector<Assignment> file;
      if (!sub.config_path.empty()) {
        file = fourpi::cli::load_config_file(sub.config_path);
      }
      std::vector<Assignment> overrides;
      for (const auto& [flag, key] : kOverrideFlags) {
        if (const auto it = sub.flags.find(key); it != sub.flags.end()) {
          overrides.push_back({key, it->second, "--" + flag});
        }
      }
      const auto config = fourpi::cli::resolve_config(sub.kind, file, overrides);
      const auto table = fourpi::cli::run_scan(config);
      write_outputs(config, table, title);
    } catch (const ConfigError& e) {
      std::cerr << title << ": config error: " << e.what() << '\n';
      return kExitConfig;
    } catch (const fourpi::Error& e) {
      std::cerr << title << ": numerical error: " << e.what() << '\n';
      return kExitNumerical;
    }
  }
  return 0;
}
