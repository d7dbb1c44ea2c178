#include "ringshift/cavity.hpp"

#include <cmath>
#include <stdexcept>

#include "ringshift/errors.hpp"

namespace ringshift {

ShiftResult cavity_shift(const Ring1DSpec& spec, int m, double omega_ev, double amplitude,
                         int photons, double resonance_tolerance,
                         const PhysicalConstants& pc) {
  if (!(omega_ev > 0.0) || !std::isfinite(omega_ev))
    throw std::invalid_argument("mode energy must be positive and finite");
  if (!std::isfinite(amplitude)) throw std::invalid_argument("amplitude must be finite");
  if (photons < 0) throw std::invalid_argument("photon number must be nonnegative");
  if (!(resonance_tolerance > 0.0))
    throw std::invalid_argument("resonance tolerance must be positive");

  const double e0 = epsilon0(spec, pc);
  const double q = m + spec.flux;
  const double lam_plus = 2.0 * q + 1.0;
  const double lam_minus = 2.0 * q - 1.0;
  const double pref = pc.alpha() * amplitude * amplitude * e0 /
                      (4.0 * spec.mass_ratio * pc.electron_rest_energy_ev());
  const double n = photons;

  // weight * lam^2 / denominator; a guard fires only for terms that
  // actually contribute (nonzero weight and numerator).
  auto term = [&](const char* label, double weight, double lam, double denominator) {
    if (weight == 0.0 || lam == 0.0) return 0.0;
    if (std::fabs(denominator) <= resonance_tolerance * e0)
      throw ResonanceError(label, denominator);
    return weight * lam * lam / denominator;
  };

  const double emission_plus = term("omega + eps0*lambda_plus", n + 1.0, lam_plus,
                                    omega_ev + e0 * lam_plus);
  const double emission_minus = term("omega - eps0*lambda_minus", n + 1.0, lam_minus,
                                     omega_ev - e0 * lam_minus);
  const double absorption_plus = term("omega - eps0*lambda_plus", -n, lam_plus,
                                      omega_ev - e0 * lam_plus);
  const double absorption_minus = term("omega + eps0*lambda_minus", -n, lam_minus,
                                       omega_ev + e0 * lam_minus);

  ShiftResult result;
  result.per_term = {{"emission_plus", pref * emission_plus},
                     {"emission_minus", pref * emission_minus},
                     {"absorption_plus", pref * absorption_plus},
                     {"absorption_minus", pref * absorption_minus}};
  result.total_ev = ((result.per_term[0].value_ev + result.per_term[1].value_ev) +
                     result.per_term[2].value_ev) +
                    result.per_term[3].value_ev;
  result.in_chi_units = result.total_ev / characteristic_chi(spec, pc);
  result.window.reset();
  return result;
}

ShiftResult vacuum_cavity_shift(const Ring1DSpec& spec, int m, double omega_ev,
                                double amplitude, double resonance_tolerance,
                                const PhysicalConstants& pc) {
  return cavity_shift(spec, m, omega_ev, amplitude, 0, resonance_tolerance, pc);
}

}  // namespace ringshift
