#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "ringshift/constants.hpp"

namespace ringshift {

/// Radial confinement potential V(rho) on rho > 0, in eV (rho in nm).
///
/// Two kinds: the displaced parabola V0/2 (rho - R)^2 and a tabulated
/// potential with linear interpolation. Derivatives of a tabulated potential
/// come from three-point Lagrange differentiation on the sample nodes
/// (exact for quadratics, any node spacing) interpolated linearly between
/// nodes. Evaluation outside the tabulated range throws.
class RadialPotential {
public:
  static RadialPotential displaced_parabola(double v0_ev_nm2, double center_nm);
  static RadialPotential tabulated(std::vector<std::pair<double, double>> samples);

  double value(double rho_nm) const;
  double derivative(double rho_nm) const;
  double second_derivative(double rho_nm) const;
  /// Radial Laplacian of a circularly symmetric potential: V'' + V'/rho.
  double laplacian(double rho_nm) const;

  bool is_parabola() const { return kind_ == Kind::parabola; }
  double parabola_v0() const;
  double parabola_center() const;

private:
  enum class Kind { parabola, table };
  RadialPotential() = default;

  Kind kind_ = Kind::parabola;
  double v0_ = 0.0;
  double center_ = 0.0;
  std::vector<double> rho_;
  std::vector<double> v_;
  std::vector<double> dv_;   // nodal first derivatives
  std::vector<double> d2v_;  // nodal second derivatives
};

/// Uniform grid on [rho_min, rho_max] with n_points nodes (>= 16),
/// rho_min > 0. Endpoints carry Dirichlet conditions.
struct RadialGrid {
  double rho_min_nm;
  double rho_max_nm;
  int n_points;

  double h() const { return (rho_max_nm - rho_min_nm) / (n_points - 1); }
  double point(int i) const { return rho_min_nm + i * h(); }
  bool operator==(const RadialGrid&) const = default;
};

void validate(const RadialGrid& grid);

/// Default bracket for a displaced parabola: [max(R - 8d, 0.05 R), R + 8d]
/// with d the ground-state width of the matching harmonic well.
RadialGrid default_parabola_grid(double v0_ev_nm2, double center_nm, double mass_ratio,
                                 int n_points,
                                 const PhysicalConstants& pc = PhysicalConstants::pinned());

/// Solution of the radial equation
///   -(hbar c)^2/(2 m c^2) [R'' + R'/rho - m^2 R/rho^2] + V R = eps R
/// on the grid, for angular momentum m. n is the 0-based radial quantum
/// number. wavefunction samples R(rho_i) over the full grid (zero at the
/// ends), normalized so the trapezoid of R^2 rho drho is 1, with the sign
/// fixed positive at the sample of largest |R|.
struct RadialEigenpair {
  int n;
  int m;
  double energy_ev;
  std::vector<double> wavefunction;
  RadialGrid grid;
};

/// Lowest n_states eigenpairs, energies strictly increasing. The u = sqrt(rho) R
/// substitution gives a symmetric tridiagonal system with effective
/// centrifugal coefficient (m^2 - 1/4); eigenpairs come from a selected-range
/// tridiagonal solve. Requires n_states <= n_points / 4.
std::vector<RadialEigenpair> solve_radial(const RadialPotential& potential,
                                          const RadialGrid& grid, int m, int n_states,
                                          double mass_ratio = 1.0,
                                          const PhysicalConstants& pc = PhysicalConstants::pinned());

/// Trapezoid of R^2 rho^2 drho: the radial mean <rho> of the state.
double mean_radius(const RadialEigenpair& pair);

/// Trapezoid of R_a R_b rho^2 drho (the dipole radial element, nm). Both
/// states must live on the same grid.
double transition_radial_element(const RadialEigenpair& a, const RadialEigenpair& b);

/// Trapezoid of R^2 (V'' + V'/rho) rho drho for the state, eV/nm^2.
double laplacian_expectation(const RadialEigenpair& pair, const RadialPotential& potential);

/// Harmonic approximation of the narrow parabola: radial level spacing
/// parameter eps_radial = (1/2) sqrt(V0 (hbar c)^2 / (m c^2)), Gaussian
/// ground state of width d with eps_radial = (hbar c)^2/(2 m c^2 d^2):
///   R0(rho) = (1/(R d sqrt(pi)))^(1/2) exp(-(rho-R)^2/(2 d^2)),
/// normalized so the trapezoid of R0^2 rho drho is 1 up to O(exp(-R^2/d^2))
/// tails.
struct HarmonicReference {
  double epsilon_radial_ev;
  double width_nm;
  double center_nm;
  double peak_amplitude;  // (1/(R d sqrt(pi)))^(1/2)

  double gaussian(double rho_nm) const;
};

HarmonicReference harmonic_reference(double v0_ev_nm2, double center_nm,
                                     double mass_ratio = 1.0,
                                     const PhysicalConstants& pc = PhysicalConstants::pinned());

}  // namespace ringshift
