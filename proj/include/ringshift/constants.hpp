#pragma once

#include <string>

namespace ringshift {

/// Fundamental constants in the eV/nm unit system.
///
/// Energies are eV, lengths nm, masses are rest energies in eV. hbar and c
/// never appear alone; every formula uses hbar*c [eV nm] and m_e c^2 [eV].
/// Values are pinned to CODATA 2018 and immutable after construction. A
/// configuration file can substitute values for reproducibility pinning, but
/// only within narrow validity windows around the physical ones.
class PhysicalConstants {
public:
  /// Pinned CODATA 2018 values.
  static const PhysicalConstants& pinned();

  /// Load overrides from a key=value file (keys: alpha,
  /// electron_rest_energy_ev, hbar_c_ev_nm; '#' comments). Missing keys keep
  /// the pinned value. Unknown keys or out-of-window values are rejected.
  static PhysicalConstants from_file(const std::string& path);

  /// Validating constructor; throws std::invalid_argument outside the
  /// accepted windows.
  PhysicalConstants(double alpha, double electron_rest_energy_ev,
                    double hbar_c_ev_nm);

  double alpha() const { return alpha_; }
  double electron_rest_energy_ev() const { return electron_rest_energy_ev_; }
  double hbar_c_ev_nm() const { return hbar_c_ev_nm_; }

private:
  double alpha_;
  double electron_rest_energy_ev_;
  double hbar_c_ev_nm_;
};

}  // namespace ringshift
