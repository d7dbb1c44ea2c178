#include "ringshift/constants.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>
#include <string>

#include "ringshift/errors.hpp"

namespace ringshift {

namespace {

// Accepted windows around the physical values; wider substitutions would
// silently change every downstream number.
constexpr double kAlphaMin = 7.297e-3, kAlphaMax = 7.298e-3;
constexpr double kRestMin = 510998.0, kRestMax = 511000.0;
constexpr double kHbarCMin = 197.32, kHbarCMax = 197.33;

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

PhysicalConstants::PhysicalConstants(double alpha, double electron_rest_energy_ev,
                                     double hbar_c_ev_nm)
    : alpha_(alpha),
      electron_rest_energy_ev_(electron_rest_energy_ev),
      hbar_c_ev_nm_(hbar_c_ev_nm) {
  if (!(alpha > kAlphaMin && alpha < kAlphaMax))
    throw std::invalid_argument("alpha outside accepted window");
  if (!(electron_rest_energy_ev > kRestMin && electron_rest_energy_ev < kRestMax))
    throw std::invalid_argument("electron_rest_energy_ev outside accepted window");
  if (!(hbar_c_ev_nm > kHbarCMin && hbar_c_ev_nm < kHbarCMax))
    throw std::invalid_argument("hbar_c_ev_nm outside accepted window");
}

const PhysicalConstants& PhysicalConstants::pinned() {
  // CODATA 2018
  static const PhysicalConstants instance(7.2973525693e-3, 510998.95000, 197.3269804);
  return instance;
}

PhysicalConstants PhysicalConstants::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open constants file: " + path);

  const auto& base = pinned();
  double alpha = base.alpha();
  double rest = base.electron_rest_energy_ev();
  double hbar_c = base.hbar_c_ev_nm();

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("constants file line " + std::to_string(lineno) +
                        ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    double parsed;
    try {
      std::size_t used = 0;
      parsed = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw ConfigError("constants file line " + std::to_string(lineno) +
                        ": bad numeric value for " + key);
    }
    if (key == "alpha")
      alpha = parsed;
    else if (key == "electron_rest_energy_ev")
      rest = parsed;
    else if (key == "hbar_c_ev_nm")
      hbar_c = parsed;
    else
      throw ConfigError("constants file line " + std::to_string(lineno) +
                        ": unknown key '" + key + "'");
  }
  try {
    return PhysicalConstants(alpha, rest, hbar_c);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("constants file ") + path + ": " + e.what());
  }
}

}  // namespace ringshift
