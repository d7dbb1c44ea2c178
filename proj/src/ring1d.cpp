#include "ringshift/ring1d.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ringshift {

namespace detail {

// x^3 ln(k~/|x|) with the x -> 0 limit (x^3 ln|x| -> 0) taken below 1e-12.
static double bracket_term(double x, double k_over_eps0) {
  const double ax = std::fabs(x);
  if (ax < 1e-12) return 0.0;
  return x * x * x * std::log(k_over_eps0 / ax);
}

BracketTerms shift_bracket(double q, double k_over_eps0) {
  return {bracket_term(1.0 - 2.0 * q, k_over_eps0),
          bracket_term(1.0 + 2.0 * q, k_over_eps0)};
}

}  // namespace detail

static void require_positive_kmax(double k_max_ev) {
  if (!(k_max_ev > 0.0) || !std::isfinite(k_max_ev))
    throw std::invalid_argument("k_max must be positive and finite");
}

std::vector<AngularLevel> spectrum_1d(const Ring1DSpec& spec, int m_min, int m_max,
                                      const PhysicalConstants& pc) {
  if (m_min > m_max) throw std::invalid_argument("empty m range");
  const double e0 = epsilon0(spec, pc);
  std::vector<AngularLevel> levels;
  levels.reserve(m_max - m_min + 1);
  for (int m = m_min; m <= m_max; ++m) {
    const double q = m + spec.flux;
    levels.push_back({m, e0 * q * q});
  }
  return levels;
}

MatrixElement1D matrix_element_1d(const Ring1DSpec& spec, int m, int polarization,
                                  const PhysicalConstants& pc) {
  validate(spec);
  if (polarization != 1 && polarization != -1)
    throw std::invalid_argument("polarization must be +1 or -1");
  const double q = m + spec.flux;
  const double factor = 1.0 + 2.0 * polarization * q;
  const double magnitude = pc.hbar_c_ev_nm() /
                           (2.0 * spec.mass_ratio * pc.electron_rest_energy_ev() *
                            spec.radius_nm) *
                           std::fabs(factor);
  return {m, m + polarization, polarization, magnitude};
}

ShiftResult lamb_shift_1d(const Ring1DSpec& spec, int m, double k_max_ev,
                          const PhysicalConstants& pc) {
  require_positive_kmax(k_max_ev);
  const double e0 = epsilon0(spec, pc);
  const double q = m + spec.flux;
  const double pref = pc.alpha() * e0 * e0 /
                      (2.0 * std::numbers::pi * spec.mass_ratio * pc.electron_rest_energy_ev());
  const auto terms = detail::shift_bracket(q, k_max_ev / e0);

  ShiftResult result;
  result.per_term = {{"transition_m_minus_1", pref * terms.minus_channel},
                     {"transition_m_plus_1", pref * terms.plus_channel}};
  result.total_ev = result.per_term[0].value_ev + result.per_term[1].value_ev;
  result.in_chi_units = result.total_ev / characteristic_chi(spec, pc);
  result.window = check_cutoff_window({k_max_ev, e0, 5.0}, pc);
  return result;
}

double minimal_shift_1d(const Ring1DSpec& spec, double k_max_ev,
                        const PhysicalConstants& pc) {
  require_positive_kmax(k_max_ev);
  const double e0 = epsilon0(spec, pc);
  return pc.alpha() * e0 * e0 /
         (std::numbers::pi * spec.mass_ratio * pc.electron_rest_energy_ev()) *
         std::log(k_max_ev / e0);
}

double rewritten_shift_1d(const Ring1DSpec& spec, int m, double k_max_ev,
                          bool flip_lambda_minus_sign, const PhysicalConstants& pc) {
  require_positive_kmax(k_max_ev);
  const double e0 = epsilon0(spec, pc);
  const double q = m + spec.flux;
  const double lam_plus = 2.0 * q + 1.0;
  const double lam_minus = 2.0 * q - 1.0;
  const double pref = pc.alpha() * e0 * e0 /
                      (2.0 * std::numbers::pi * spec.mass_ratio * pc.electron_rest_energy_ev());

  auto cubed_log = [](double lam) {
    const double al = std::fabs(lam);
    if (al < 1e-12) return 0.0;
    return lam * lam * lam * std::log(al);
  };
  const double minus_sign = flip_lambda_minus_sign ? 1.0 : -1.0;
  const double bracket = minus_sign * cubed_log(lam_minus) + cubed_log(lam_plus);
  return (1.0 + 12.0 * q * q) * minimal_shift_1d(spec, k_max_ev, pc) - pref * bracket;
}

std::vector<FluxScanRow> flux_scan(const Ring1DSpec& spec, const std::vector<int>& m_values,
                                   const std::vector<double>& f_values, double k_max_ev,
                                   const PhysicalConstants& pc) {
  if (m_values.empty() || f_values.empty())
    throw std::invalid_argument("flux scan needs at least one m and one f value");
  require_positive_kmax(k_max_ev);

  std::vector<FluxScanRow> rows;
  rows.reserve(m_values.size() * f_values.size());
  Ring1DSpec point = spec;
  for (int m : m_values) {
    for (double f : f_values) {
      point.flux = f;
      const auto shift = lamb_shift_1d(point, m, k_max_ev, pc);
      rows.push_back({m, f, shift.total_ev, shift.in_chi_units});
    }
  }
  return rows;
}

}  // namespace ringshift
