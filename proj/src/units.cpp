#include "ringshift/units.hpp"

#include <cmath>
#include <stdexcept>

namespace ringshift {

void validate(const Ring1DSpec& spec) {
  if (!(spec.radius_nm > 0.0) || !std::isfinite(spec.radius_nm))
    throw std::invalid_argument("ring radius must be positive and finite");
  if (!(spec.mass_ratio > 0.0) || !std::isfinite(spec.mass_ratio))
    throw std::invalid_argument("mass_ratio must be positive and finite");
  if (!std::isfinite(spec.flux)) throw std::invalid_argument("flux must be finite");
}

double epsilon0(const Ring1DSpec& spec, const PhysicalConstants& pc) {
  validate(spec);
  const double hc = pc.hbar_c_ev_nm();
  // Evaluation order keeps the exact scaling laws: eps0(lambda R) = eps0(R)/lambda^2
  // and eps0(lambda mr) = eps0(mr)/lambda bitwise for power-of-two lambda.
  return hc * hc /
         (2.0 * spec.mass_ratio * pc.electron_rest_energy_ev() * spec.radius_nm *
          spec.radius_nm);
}

double characteristic_chi(const Ring1DSpec& spec, const PhysicalConstants& pc) {
  const double e0 = epsilon0(spec, pc);
  return pc.alpha() * e0 * e0 / (spec.mass_ratio * pc.electron_rest_energy_ev());
}

WindowReport check_cutoff_window(const CutoffWindow& window, const PhysicalConstants& pc) {
  if (!(window.k_max_ev > 0.0) || !std::isfinite(window.k_max_ev))
    throw std::invalid_argument("k_max must be positive and finite");
  if (!(window.reference_energy_ev > 0.0) || !std::isfinite(window.reference_energy_ev))
    throw std::invalid_argument("reference energy must be positive and finite");
  if (!(window.softness_factor >= 1.0))
    throw std::invalid_argument("softness_factor must be at least 1");

  WindowReport report;
  report.ratio_low = window.k_max_ev / window.reference_energy_ev;
  report.ratio_high =
      std::sqrt(pc.electron_rest_energy_ev() * window.reference_energy_ev) / window.k_max_ev;
  if (report.ratio_low < window.softness_factor)
    report.status = WindowStatus::below_window;
  else if (report.ratio_high < window.softness_factor)
    report.status = WindowStatus::above_window;
  else
    report.status = WindowStatus::valid;
  return report;
}

const char* to_string(WindowStatus status) {
  switch (status) {
    case WindowStatus::valid: return "valid";
    case WindowStatus::below_window: return "below_window";
    case WindowStatus::above_window: return "above_window";
  }
  return "unknown";
}

}  // namespace ringshift
