#include "ringshift/shift2d.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ringshift/errors.hpp"
#include "ringshift/ring1d.hpp"

namespace ringshift {

namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) throw std::invalid_argument(what);
}

const std::vector<RadialEigenpair>& channel_or_throw(const RadialBasis& basis, int m,
                                                     std::size_t min_states) {
  const auto it = basis.channels.find(m);
  if (it == basis.channels.end() || it->second.size() < min_states)
    throw std::invalid_argument("radial basis is missing a required channel or state");
  return it->second;
}

}  // namespace

RadialBasis solve_radial_basis(const RadialPotential& potential, const RadialGrid& grid,
                               int m, int n_max, double mass_ratio,
                               const PhysicalConstants& pc) {
  if (n_max < 0) throw std::invalid_argument("basis depth must be nonnegative");
  RadialBasis basis;
  for (int channel : {m - 1, m, m + 1})
    basis.channels[channel] =
        solve_radial(potential, grid, channel, n_max + 1, mass_ratio, pc);
  return basis;
}

double diagonal_shift_2d(const RadialEigenpair& pair, double flux, double k_max_ev,
                         double mass_ratio, const PhysicalConstants& pc) {
  Ring1DSpec ring{mean_radius(pair), mass_ratio, flux};
  return lamb_shift_1d(ring, pair.m, k_max_ev, pc).total_ev;
}

NondiagonalShift nondiagonal_shift_2d(const RadialBasis& basis, int n, int m,
                                      double k_max_ev, const BasisTruncation& truncation,
                                      const PhysicalConstants& pc) {
  require_positive(k_max_ev, "cutoff energy must be positive and finite");
  if (n < 0) throw std::invalid_argument("radial quantum number must be nonnegative");
  if (truncation.n_max < 0) throw std::invalid_argument("basis depth must be nonnegative");
  if (truncation.fixed_epsilon_bar_ev)
    require_positive(*truncation.fixed_epsilon_bar_ev,
                     "effective energy must be positive and finite");

  const std::size_t states = static_cast<std::size_t>(truncation.n_max) + 1;
  const RadialEigenpair& target =
      channel_or_throw(basis, m, static_cast<std::size_t>(n) + 1)[n];

  NondiagonalShift out;
  double weight_sum = 0.0;
  double weighted_log_sum = 0.0;
  for (int m_prime : {m + 1, m - 1}) {
    const auto& channel = channel_or_throw(basis, m_prime, states);
    for (int n_prime = 0; n_prime <= truncation.n_max; ++n_prime) {
      if (n_prime == n) continue;
      const RadialEigenpair& virt = channel[n_prime];
      const double delta_e = virt.energy_ev - target.energy_ev;
      const double element = transition_radial_element(target, virt);
      const double weight =
          std::fabs(delta_e) * delta_e * delta_e * element * element;
      if (weight > 0.0) {
        weight_sum += weight;
        weighted_log_sum += weight * std::log(std::fabs(delta_e));
      }
      out.transitions.push_back({n_prime, m_prime, delta_e, element, 0.0});
    }
  }

  if (truncation.fixed_epsilon_bar_ev) {
    out.epsilon_bar_ev = *truncation.fixed_epsilon_bar_ev;
    out.epsilon_bar_defined = true;
  } else if (weight_sum > 0.0) {
    out.epsilon_bar_ev = std::exp(weighted_log_sum / weight_sum);
    out.epsilon_bar_defined = true;
  } else {
    out.epsilon_bar_ev = 0.0;
    out.epsilon_bar_defined = false;
  }

  out.value_ev = 0.0;
  if (out.epsilon_bar_defined) {
    const double hc = pc.hbar_c_ev_nm();
    const double pooled_log = std::log(k_max_ev / out.epsilon_bar_ev);
    const double pref = pc.alpha() / std::numbers::pi / (hc * hc) * pooled_log;
    for (Transition2D& t : out.transitions) {
      t.contribution_ev =
          pref * t.delta_e_ev * t.delta_e_ev * t.delta_e_ev * t.element_nm * t.element_nm;
      out.value_ev += t.contribution_ev;
    }
  }
  return out;
}

Shift2DResult total_shift_2d(const RadialBasis& basis, int n, int m, double k_max_ev,
                             const BasisTruncation& truncation, double mass_ratio,
                             const PhysicalConstants& pc) {
  if (n < 0) throw std::invalid_argument("radial quantum number must be nonnegative");
  const RadialEigenpair& target =
      channel_or_throw(basis, m, static_cast<std::size_t>(n) + 1)[n];
  NondiagonalShift nd = nondiagonal_shift_2d(basis, n, m, k_max_ev, truncation, pc);
  Shift2DResult result;
  result.diagonal_ev = diagonal_shift_2d(target, 0.0, k_max_ev, mass_ratio, pc);
  result.nondiagonal_ev = nd.value_ev;
  result.total_ev = result.diagonal_ev + result.nondiagonal_ev;
  result.epsilon_bar_ev = nd.epsilon_bar_ev;
  result.epsilon_bar_defined = nd.epsilon_bar_defined;
  result.transitions = std::move(nd.transitions);
  return result;
}

SumRuleReport sum_rule_check(const RadialBasis& basis, int n, int m,
                             const RadialPotential& potential, double mass_ratio,
                             const PhysicalConstants& pc) {
  require_positive(mass_ratio, "mass ratio must be positive and finite");
  if (n < 0) throw std::invalid_argument("radial quantum number must be nonnegative");
  const RadialEigenpair& target =
      channel_or_throw(basis, m, static_cast<std::size_t>(n) + 1)[n];
  const double hc = pc.hbar_c_ev_nm();

  double lhs = 0.0;
  for (int m_prime : {m + 1, m - 1}) {
    for (const RadialEigenpair& virt : channel_or_throw(basis, m_prime, 1)) {
      const double delta_e = virt.energy_ev - target.energy_ev;
      const double element = transition_radial_element(target, virt);
      lhs += delta_e * delta_e * delta_e * element * element / (hc * hc);
    }
  }

  const double mass = mass_ratio * pc.electron_rest_energy_ev();
  const double rhs = kSumRuleConstant * (hc / mass) * (hc / mass) *
                     laplacian_expectation(target, potential);
  return {lhs, rhs, lhs / rhs};
}

BetheLogShift bethe_log_shift(const RadialEigenpair& pair, const RadialPotential& potential,
                              double k_max_ev, double epsilon_bar_ev, double mass_ratio,
                              const PhysicalConstants& pc) {
  require_positive(k_max_ev, "cutoff energy must be positive and finite");
  require_positive(epsilon_bar_ev, "effective energy must be positive and finite");
  require_positive(mass_ratio, "mass ratio must be positive and finite");
  const double hc = pc.hbar_c_ev_nm();
  const double mass = mass_ratio * pc.electron_rest_energy_ev();
  BetheLogShift out;
  out.laplacian_term_ev_nm2 = laplacian_expectation(pair, potential);
  out.prefactor_ev =
      pc.alpha() / (std::numbers::pi * mass * mass) * hc * hc * out.laplacian_term_ev_nm2;
  out.log_factor = std::log(k_max_ev / epsilon_bar_ev);
  out.log_nonpositive = !(out.log_factor > 0.0);
  out.value_ev = out.prefactor_ev * out.log_factor;
  return out;
}

BetheLogShift parabolic_lowest_shift(double v0_ev_nm2, double mass_ratio, double k_max_ev,
                                     double epsilon_bar_ev, const PhysicalConstants& pc) {
  if (v0_ev_nm2 < 0.0 || !std::isfinite(v0_ev_nm2))
    throw std::invalid_argument("parabola strength must be nonnegative and finite");
  require_positive(k_max_ev, "cutoff energy must be positive and finite");
  require_positive(epsilon_bar_ev, "effective energy must be positive and finite");
  require_positive(mass_ratio, "mass ratio must be positive and finite");
  const double hc = pc.hbar_c_ev_nm();
  const double mass = mass_ratio * pc.electron_rest_energy_ev();
  BetheLogShift out;
  out.laplacian_term_ev_nm2 = 2.0 * v0_ev_nm2;
  out.prefactor_ev =
      pc.alpha() / (std::numbers::pi * mass * mass) * hc * hc * out.laplacian_term_ev_nm2;
  out.log_factor = std::log(k_max_ev / epsilon_bar_ev);
  out.log_nonpositive = !(out.log_factor > 0.0);
  out.value_ev = out.prefactor_ev * out.log_factor;
  return out;
}

}  // namespace ringshift
