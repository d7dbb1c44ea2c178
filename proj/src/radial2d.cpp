#include "ringshift/radial2d.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ringshift/errors.hpp"

namespace ringshift {

namespace {

// Derivatives of the quadratic through (x0,f0), (x1,f1), (x2,f2).
double quad_derivative_at(double x, double x0, double f0, double x1, double f1, double x2,
                          double f2) {
  return f0 * (2.0 * x - x1 - x2) / ((x0 - x1) * (x0 - x2)) +
         f1 * (2.0 * x - x0 - x2) / ((x1 - x0) * (x1 - x2)) +
         f2 * (2.0 * x - x0 - x1) / ((x2 - x0) * (x2 - x1));
}

double quad_second_derivative(double x0, double f0, double x1, double f1, double x2,
                              double f2) {
  return 2.0 * (f0 / ((x0 - x1) * (x0 - x2)) + f1 / ((x1 - x0) * (x1 - x2)) +
                f2 / ((x2 - x0) * (x2 - x1)));
}

double trapezoid(const std::vector<double>& f, double h) {
  if (f.size() < 2) return 0.0;
  double sum = 0.5 * (f.front() + f.back());
  for (std::size_t i = 1; i + 1 < f.size(); ++i) sum += f[i];
  return sum * h;
}

}  // namespace

RadialPotential RadialPotential::displaced_parabola(double v0_ev_nm2, double center_nm) {
  if (!(v0_ev_nm2 > 0.0) || !std::isfinite(v0_ev_nm2))
    throw std::invalid_argument("parabola strength must be positive and finite");
  if (!(center_nm > 0.0) || !std::isfinite(center_nm))
    throw std::invalid_argument("parabola center must be positive and finite");
  RadialPotential p;
  p.kind_ = Kind::parabola;
  p.v0_ = v0_ev_nm2;
  p.center_ = center_nm;
  return p;
}

RadialPotential RadialPotential::tabulated(std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 3)
    throw std::invalid_argument("tabulated potential needs at least 3 samples");
  std::sort(samples.begin(), samples.end());
  RadialPotential p;
  p.kind_ = Kind::table;
  const std::size_t n = samples.size();
  p.rho_.resize(n);
  p.v_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [rho, v] = samples[i];
    if (!(rho > 0.0) || !std::isfinite(rho) || !std::isfinite(v))
      throw std::invalid_argument("tabulated samples must have rho > 0 and finite values");
    if (i > 0 && !(rho > p.rho_[i - 1]))
      throw std::invalid_argument("tabulated sample radii must be distinct");
    p.rho_[i] = rho;
    p.v_[i] = v;
  }
  p.dv_.resize(n);
  p.d2v_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = std::clamp<std::size_t>(i, 1, n - 2);
    p.dv_[i] = quad_derivative_at(p.rho_[i], p.rho_[j - 1], p.v_[j - 1], p.rho_[j],
                                  p.v_[j], p.rho_[j + 1], p.v_[j + 1]);
    p.d2v_[i] = quad_second_derivative(p.rho_[j - 1], p.v_[j - 1], p.rho_[j], p.v_[j],
                                       p.rho_[j + 1], p.v_[j + 1]);
  }
  return p;
}

namespace {

double interp_table(const std::vector<double>& xs, const std::vector<double>& ys,
                    double x) {
  if (x < xs.front() || x > xs.back())
    throw std::domain_error("radius outside the tabulated potential range");
  const auto it = std::upper_bound(xs.begin(), xs.end(), x);
  if (it == xs.end()) return ys.back();
  const std::size_t hi = it - xs.begin();
  const std::size_t lo = hi - 1;
  const double w = (x - xs[lo]) / (xs[hi] - xs[lo]);
  return (1.0 - w) * ys[lo] + w * ys[hi];
}

}  // namespace

double RadialPotential::value(double rho_nm) const {
  if (kind_ == Kind::parabola) {
    const double dr = rho_nm - center_;
    return 0.5 * v0_ * dr * dr;
  }
  return interp_table(rho_, v_, rho_nm);
}

double RadialPotential::derivative(double rho_nm) const {
  if (kind_ == Kind::parabola) return v0_ * (rho_nm - center_);
  return interp_table(rho_, dv_, rho_nm);
}

double RadialPotential::second_derivative(double rho_nm) const {
  if (kind_ == Kind::parabola) return v0_;
  return interp_table(rho_, d2v_, rho_nm);
}

double RadialPotential::laplacian(double rho_nm) const {
  return second_derivative(rho_nm) + derivative(rho_nm) / rho_nm;
}

double RadialPotential::parabola_v0() const {
  if (kind_ != Kind::parabola) throw std::logic_error("potential is not a parabola");
  return v0_;
}

double RadialPotential::parabola_center() const {
  if (kind_ != Kind::parabola) throw std::logic_error("potential is not a parabola");
  return center_;
}

void validate(const RadialGrid& grid) {
  if (!(grid.rho_min_nm > 0.0) || !std::isfinite(grid.rho_min_nm))
    throw std::invalid_argument("grid must start at rho > 0");
  if (!(grid.rho_max_nm > grid.rho_min_nm) || !std::isfinite(grid.rho_max_nm))
    throw std::invalid_argument("grid end must exceed its start");
  if (grid.n_points < 16) throw std::invalid_argument("grid needs at least 16 points");
}

RadialGrid default_parabola_grid(double v0_ev_nm2, double center_nm, double mass_ratio,
                                 int n_points, const PhysicalConstants& pc) {
  const HarmonicReference ref = harmonic_reference(v0_ev_nm2, center_nm, mass_ratio, pc);
  const double d = ref.width_nm;
  RadialGrid grid{std::max(center_nm - 8.0 * d, 0.05 * center_nm), center_nm + 8.0 * d,
                  n_points};
  validate(grid);
  return grid;
}

std::vector<RadialEigenpair> solve_radial(const RadialPotential& potential,
                                          const RadialGrid& grid, int m, int n_states,
                                          double mass_ratio, const PhysicalConstants& pc) {
  validate(grid);
  if (!(mass_ratio > 0.0) || !std::isfinite(mass_ratio))
    throw std::invalid_argument("mass ratio must be positive and finite");
  if (n_states < 1) throw std::invalid_argument("need at least one state");
  if (n_states > grid.n_points / 4)
    throw std::invalid_argument("state count must not exceed a quarter of the grid size");

  const double hc = pc.hbar_c_ev_nm();
  const double t = hc * hc / (2.0 * mass_ratio * pc.electron_rest_energy_ev());
  const double h = grid.h();
  const int interior = grid.n_points - 2;
  const double centrifugal = static_cast<double>(m) * m - 0.25;

  std::vector<double> diag(interior);
  std::vector<double> offdiag(interior > 1 ? interior - 1 : 1, -t / (h * h));
  for (int i = 0; i < interior; ++i) {
    const double rho = grid.point(i + 1);
    diag[i] = 2.0 * t / (h * h) + t * centrifugal / (rho * rho) + potential.value(rho);
  }

  std::vector<double> w(interior);
  std::vector<double> z(static_cast<std::size_t>(interior) * n_states);
  std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(n_states));
  lapack_int found = 0;
  const double abstol = 2.0 * LAPACKE_dlamch('S');
  const lapack_int info = LAPACKE_dstevr(
      LAPACK_COL_MAJOR, 'V', 'I', interior, diag.data(), offdiag.data(), 0.0, 0.0, 1,
      n_states, abstol, &found, w.data(), z.data(), interior, isuppz.data());
  if (info != 0)
    throw NumericalError("tridiagonal eigensolve failed with status " +
                         std::to_string(info));
  if (found != n_states)
    throw NumericalError("tridiagonal eigensolve returned too few states");

  std::vector<RadialEigenpair> out;
  out.reserve(n_states);
  const double inv_sqrt_h = 1.0 / std::sqrt(h);
  for (int j = 0; j < n_states; ++j) {
    if (j > 0 && !(w[j] > w[j - 1]))
      throw NumericalError("radial energies failed to order strictly");
    RadialEigenpair pair;
    pair.n = j;
    pair.m = m;
    pair.energy_ev = w[j];
    pair.grid = grid;
    pair.wavefunction.assign(grid.n_points, 0.0);
    for (int i = 0; i < interior; ++i) {
      const double u = z[static_cast<std::size_t>(j) * interior + i] * inv_sqrt_h;
      pair.wavefunction[i + 1] = u / std::sqrt(grid.point(i + 1));
    }
    const auto peak = std::max_element(
        pair.wavefunction.begin(), pair.wavefunction.end(),
        [](double a, double b) { return std::fabs(a) < std::fabs(b); });
    if (*peak < 0.0)
      for (double& r : pair.wavefunction) r = -r;
    out.push_back(std::move(pair));
  }
  return out;
}

double mean_radius(const RadialEigenpair& pair) {
  std::vector<double> f(pair.wavefunction.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double rho = pair.grid.point(static_cast<int>(i));
    f[i] = pair.wavefunction[i] * pair.wavefunction[i] * rho * rho;
  }
  return trapezoid(f, pair.grid.h());
}

double transition_radial_element(const RadialEigenpair& a, const RadialEigenpair& b) {
  if (!(a.grid == b.grid))
    throw std::invalid_argument("transition element needs a common grid");
  std::vector<double> f(a.wavefunction.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double rho = a.grid.point(static_cast<int>(i));
    f[i] = a.wavefunction[i] * b.wavefunction[i] * rho * rho;
  }
  return trapezoid(f, a.grid.h());
}

double laplacian_expectation(const RadialEigenpair& pair, const RadialPotential& potential) {
  std::vector<double> f(pair.wavefunction.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double rho = pair.grid.point(static_cast<int>(i));
    f[i] = pair.wavefunction[i] * pair.wavefunction[i] * potential.laplacian(rho) * rho;
  }
  return trapezoid(f, pair.grid.h());
}

HarmonicReference harmonic_reference(double v0_ev_nm2, double center_nm, double mass_ratio,
                                     const PhysicalConstants& pc) {
  if (!(v0_ev_nm2 > 0.0) || !std::isfinite(v0_ev_nm2))
    throw std::invalid_argument("parabola strength must be positive and finite");
  if (!(center_nm > 0.0) || !std::isfinite(center_nm))
    throw std::invalid_argument("parabola center must be positive and finite");
  if (!(mass_ratio > 0.0) || !std::isfinite(mass_ratio))
    throw std::invalid_argument("mass ratio must be positive and finite");
  const double hc = pc.hbar_c_ev_nm();
  const double mass = mass_ratio * pc.electron_rest_energy_ev();
  HarmonicReference ref;
  ref.epsilon_radial_ev = 0.5 * std::sqrt(v0_ev_nm2 * hc * hc / mass);
  ref.width_nm = std::sqrt(hc / std::sqrt(mass * v0_ev_nm2));
  ref.center_nm = center_nm;
  ref.peak_amplitude =
      std::sqrt(1.0 / (center_nm * ref.width_nm * std::sqrt(std::numbers::pi)));
  return ref;
}

double HarmonicReference::gaussian(double rho_nm) const {
  const double dr = rho_nm - center_nm;
  return peak_amplitude * std::exp(-dr * dr / (2.0 * width_nm * width_nm));
}

}  // namespace ringshift
