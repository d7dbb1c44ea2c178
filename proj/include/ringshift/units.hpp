#pragma once

#include "ringshift/constants.hpp"

namespace ringshift {

/// One-dimensional ring threaded by a magnetic flux.
///
/// mass_ratio scales the electron rest energy (effective mass m = mass_ratio
/// * m_e); flux is the dimensionless ratio Phi/Phi_0.
struct Ring1DSpec {
  double radius_nm;
  double mass_ratio = 1.0;
  double flux = 0.0;
};

/// Throws std::invalid_argument unless radius and mass_ratio are positive
/// and finite and flux is finite.
void validate(const Ring1DSpec& spec);

/// Angular kinetic scale eps0 = (hbar c)^2 / (2 m c^2 R^2), in eV.
double epsilon0(const Ring1DSpec& spec,
                const PhysicalConstants& pc = PhysicalConstants::pinned());

/// Characteristic radiative scale chi = alpha eps0^2 / (m c^2), in eV.
/// Uses the same effective mass as eps0.
double characteristic_chi(const Ring1DSpec& spec,
                          const PhysicalConstants& pc = PhysicalConstants::pinned());

/// Low-momentum cutoff bracket: the logarithmic shift formulas need
/// reference_energy << k_max << sqrt(m_e c^2 * reference_energy).
/// softness_factor operationalizes "<<" as a minimum ratio.
struct CutoffWindow {
  double k_max_ev;
  double reference_energy_ev;
  double softness_factor = 5.0;
};

enum class WindowStatus { valid, below_window, above_window };

/// ratio_low = k_max / reference, ratio_high = sqrt(m_e c^2 * reference) / k_max.
/// Both must reach softness_factor for status valid. Reports never gate a
/// computation; they ride along with shift results.
struct WindowReport {
  WindowStatus status;
  double ratio_low;
  double ratio_high;
  bool satisfied() const { return status == WindowStatus::valid; }
};

WindowReport check_cutoff_window(const CutoffWindow& window,
                                 const PhysicalConstants& pc = PhysicalConstants::pinned());

const char* to_string(WindowStatus status);

}  // namespace ringshift
