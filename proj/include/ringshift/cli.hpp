#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace ringshift::cli {

/// Named parameter bundles selectable with --preset. Flags override preset
/// values; presets override built-in defaults.
struct Preset {
  std::string name;
  std::string description;
  std::map<std::string, std::string> values;  // option name -> default value
};

const std::vector<Preset>& presets();

/// Exit codes: 0 success, 2 configuration, 3 numerical, 4 resonance.
constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitResonance = 4;

/// Full CLI entry point (parse argv, run the subcommand, serialize).
/// Constants may be overridden by the file named in RINGSHIFT_CONSTANTS.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ringshift::cli
