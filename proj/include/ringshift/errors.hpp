#pragma once

#include <stdexcept>
#include <string>

namespace ringshift {

/// Bad or inconsistent run configuration (missing key, out-of-range value).
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Solver or quadrature failure (non-convergence, invalid numerics).
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Photon energy within tolerance of a contributing transition denominator.
class ResonanceError : public std::runtime_error {
public:
  ResonanceError(const std::string& label, double denominator_ev)
      : std::runtime_error("resonant denominator " + label + " = " +
                           std::to_string(denominator_ev) + " eV"),
        label_(label), denominator_ev_(denominator_ev) {}

  const std::string& denominator_label() const { return label_; }
  double denominator_ev() const { return denominator_ev_; }

private:
  std::string label_;
  double denominator_ev_;
};

}  // namespace ringshift
