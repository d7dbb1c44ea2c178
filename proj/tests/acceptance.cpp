// Acceptance gate: every release-level numeric claim of the library and CLI,
// one verdict line each. Run with the path to the ringshift CLI binary as the
// only argument; exits nonzero if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ringshift/cavity.hpp"
#include "ringshift/radial2d.hpp"
#include "ringshift/ring1d.hpp"
#include "ringshift/shift2d.hpp"
#include "ringshift/table.hpp"
#include "ringshift/units.hpp"

#include "support/checker.hpp"
#include "support/frozen.hpp"
#include "support/oracles.hpp"

using namespace ringshift;
using testsupport::close_scaled;
using testsupport::num;
using testsupport::rel_close;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& message) {
    if (!ok && pass) {
      pass = false;
      detail = message;
    }
  }
};

const PhysicalConstants& pc() { return PhysicalConstants::pinned(); }

Verdict angular_scale() {
  Verdict v;
  const double e0 = epsilon0(Ring1DSpec{20.0, 1.0, 0.0});
  v.require(rel_close(e0, 95e-6, 0.01), "eps0 = " + num(e0) + " eV, expected ~95 ueV");
  if (v.pass) v.detail = "eps0 = " + num(e0) + " eV";
  return v;
}

Verdict chi_scale() {
  Verdict v;
  const double chi_semi = characteristic_chi(Ring1DSpec{20.0, 1.0, 0.0});
  const double chi_benzene = characteristic_chi(Ring1DSpec{0.134, 1.0, 0.0});
  const double chi_porphyrin = characteristic_chi(Ring1DSpec{0.36, 1.0, 0.0});
  v.require(rel_close(chi_semi, 0.13e-15, 0.05),
            "20 nm chi = " + num(chi_semi) + " eV, expected ~0.13 feV");
  v.require(rel_close(chi_benzene, 0.065e-6, 0.05),
            "benzene chi = " + num(chi_benzene) + " eV, expected ~0.065 ueV");
  v.require(rel_close(chi_porphyrin, 1.3e-9, 0.10),
            "porphyrin chi = " + num(chi_porphyrin) + " eV, expected ~1.3 neV");
  if (v.pass)
    v.detail = num(chi_semi) + " / " + num(chi_benzene) + " / " + num(chi_porphyrin) + " eV";
  return v;
}

Verdict minimal_identity() {
  Verdict v;
  std::mt19937 rng(20240820);
  std::uniform_int_distribution<int> m_draw(-5, 5);
  const double e0 = epsilon0(Ring1DSpec{20.0, 1.0, 0.0});
  const double k_low = 5.0 * e0;
  const double k_high = std::sqrt(pc().electron_rest_energy_ev() * e0) / 5.0;
  std::uniform_real_distribution<double> log_k(std::log(k_low), std::log(k_high));
  for (int trial = 0; trial < 100 && v.pass; ++trial) {
    const int m = m_draw(rng);
    const double k = std::exp(log_k(rng));
    const Ring1DSpec spec{20.0, 1.0, static_cast<double>(-m)};  // q = 0
    v.require(check_cutoff_window(CutoffWindow{k, epsilon0(spec)}).satisfied(),
              "draw left the soft-cutoff window at k = " + num(k));
    const double direct = lamb_shift_1d(spec, m, k).total_ev;
    const double minimal = minimal_shift_1d(spec, k);
    v.require(rel_close(direct, minimal, 1e-12),
              "m = " + std::to_string(m) + ", k = " + num(k) + ": " + num(direct) +
                  " vs " + num(minimal));
  }
  if (v.pass) v.detail = "100 draws, relative gap <= 1e-12";
  return v;
}

Verdict rewritten_identity() {
  Verdict v;
  std::mt19937 rng(20240821);
  std::uniform_int_distribution<int> m_draw(-5, 5);
  std::uniform_real_distribution<double> f_draw(-2.0, 5.0);
  std::uniform_real_distribution<double> log_ratio(std::log(10.0), std::log(500.0));
  for (int trial = 0; trial < 1000 && v.pass; ++trial) {
    const int m = m_draw(rng);
    const Ring1DSpec spec{20.0, 1.0, f_draw(rng)};
    const double k = std::exp(log_ratio(rng)) * epsilon0(spec);
    const double direct = lamb_shift_1d(spec, m, k).total_ev;
    const double rewritten = rewritten_shift_1d(spec, m, k);
    const double q = m + spec.flux;
    const double scale = (1.0 + 12.0 * q * q) * std::fabs(minimal_shift_1d(spec, k));
    v.require(close_scaled(direct, rewritten, 1e-12, scale),
              "q = " + num(q) + ", k = " + num(k) + ": " + num(direct) + " vs " +
                  num(rewritten));
  }

  // The sign-flipped variant must sit a definite distance away at q = 3/2.
  const Ring1DSpec half{20.0, 1.0, 0.5};
  const double delta =
      std::fabs(rewritten_shift_1d(half, 1, 0.01, true) - rewritten_shift_1d(half, 1, 0.01));
  const double e0 = epsilon0(half);
  const double pref = pc().alpha() * e0 * e0 /
                      (2.0 * std::numbers::pi * pc().electron_rest_energy_ev());
  const double expected = 16.0 * std::numbers::ln2 * pref;
  v.require(rel_close(delta, expected, 1e-12),
            "flip delta " + num(delta) + " vs 16 ln2 pref " + num(expected));
  v.require(rel_close(delta, frozen::kPrintedDeltaQ15R20, 1e-12),
            "flip delta " + num(delta) + " vs frozen " + num(frozen::kPrintedDeltaQ15R20));
  if (v.pass) v.detail = "1000 draws + sign-flip displacement at q = 1.5";
  return v;
}

Verdict scan_minima() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const double k = 0.01;
  for (int m = 0; m <= 3 && v.pass; ++m) {
    int best_i = 0;
    double best = 1e300;
    for (int i = 0; i <= 800; ++i) {
      const double f = (i - 400) / 100.0;
      const double value = lamb_shift_1d(Ring1DSpec{20.0, 1.0, f}, m, k).total_ev;
      if (value < best) {
        best = value;
        best_i = i;
      }
    }
    const double f_best = (best_i - 400) / 100.0;
    v.require(std::fabs(f_best + m) <= 0.01 + 1e-12,
              "m = " + std::to_string(m) + " minimum at f = " + num(f_best));
  }
  for (int m = 0; m <= 3 && v.pass; ++m) {
    for (int i = 0; i <= 800; ++i) {
      const double f = (i - 400) / 100.0;
      const double here = lamb_shift_1d(Ring1DSpec{20.0, 1.0, f}, m, k).total_ev;
      const double mirror = lamb_shift_1d(Ring1DSpec{20.0, 1.0, -f}, -m, k).total_ev;
      v.require(close_scaled(here, mirror, 1e-12, 0.0),
                "asymmetry at m = " + std::to_string(m) + ", f = " + num(f));
      if (!v.pass) break;
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(seconds < 1.0, "scan took " + num(seconds) + " s");
  if (v.pass) v.detail = "minima at f = -m, mirror-symmetric, " + num(seconds) + " s";
  return v;
}

Verdict cavity_identities() {
  Verdict v;
  const Ring1DSpec ring{20.0, 1.0, 0.3};
  const double e0 = epsilon0(ring);

  for (int m : {0, 1}) {
    for (double w : {0.7 * e0, 3.0 * e0}) {
      const ShiftResult with_zero = cavity_shift(ring, m, w, 1e-3, 0);
      const ShiftResult vacuum = vacuum_cavity_shift(ring, m, w, 1e-3);
      v.require(with_zero.total_ev == vacuum.total_ev, "N = 0 differs from vacuum");
      for (std::size_t t = 0; t < 4; ++t)
        v.require(with_zero.per_term[t].value_ev == vacuum.per_term[t].value_ev,
                  "N = 0 per-term differs from vacuum");

      const double quadrupled = cavity_shift(ring, m, w, 2e-3, 0).total_ev;
      v.require(quadrupled == 4.0 * with_zero.total_ev, "amplitude doubling not exact");

      double previous = 0.0, current = 0.0;
      for (int n = 0; n <= 12; ++n) {
        const double next = cavity_shift(ring, m, w, 1e-3, n).total_ev;
        if (n >= 2) {
          const double second_difference = next - 2.0 * current + previous;
          const double scale = std::max({std::fabs(next), std::fabs(current), std::fabs(previous)});
          v.require(std::fabs(second_difference) <= 2e-13 * scale,
                    "second difference in N is " + num(second_difference));
        }
        previous = current;
        current = next;
      }
    }
  }

  // Spectrum bottom: one emission channel against the closed form.
  const Ring1DSpec bottom{20.0, 1.0, -1.0};
  const double w = 2.0 * epsilon0(bottom);
  const double closed = pc().alpha() * 1e-3 * 1e-3 * epsilon0(bottom) /
                        (2.0 * pc().electron_rest_energy_ev() * (w + epsilon0(bottom)));
  const double computed = cavity_shift(bottom, 1, w, 1e-3, 0).total_ev;
  v.require(rel_close(computed, closed, 1e-13),
            "q = 0 value " + num(computed) + " vs closed form " + num(closed));
  if (v.pass) v.detail = "vacuum identity, quadratic amplitude, affine occupation";
  return v;
}

Verdict harmonic_limit() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const auto potential = RadialPotential::displaced_parabola(frozen::kV0ForD04R20, 20.0);
  const auto grid = default_parabola_grid(frozen::kV0ForD04R20, 20.0, 1.0, 2000);
  const auto ground = solve_radial(potential, grid, 0, 1)[0];
  const auto ref = harmonic_reference(frozen::kV0ForD04R20, 20.0);

  v.require(rel_close(ground.energy_ev, ref.epsilon_radial_ev, 0.01),
            "E0 = " + num(ground.energy_ev) + " vs " + num(ref.epsilon_radial_ev));
  const double r_bar = mean_radius(ground);
  v.require(rel_close(r_bar, 20.0, 0.005), "mean radius " + num(r_bar));
  double worst = 0.0;
  for (int i = 0; i < grid.n_points; ++i)
    worst = std::max(worst,
                     std::fabs(ground.wavefunction[i] - ref.gaussian(grid.point(i))));
  v.require(worst <= 0.01 * ref.peak_amplitude,
            "wavefunction deviates by " + num(worst / ref.peak_amplitude) + " of peak");
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(seconds < 5.0, "solve took " + num(seconds) + " s");
  if (v.pass)
    v.detail = "E0, mean radius, and profile in the harmonic envelope, " + num(seconds) + " s";
  return v;
}

Verdict dense_crosscheck() {
  Verdict v;
  const auto potential = RadialPotential::displaced_parabola(frozen::kV0ForD04R20, 20.0);
  const auto grid = default_parabola_grid(frozen::kV0ForD04R20, 20.0, 1.0, 50);
  const auto states = solve_radial(potential, grid, 0, 5);
  const auto dense = testsupport::dense_radial_energies(potential, grid, 0, 5);
  for (int j = 0; j < 5; ++j)
    v.require(rel_close(states[j].energy_ev, dense[j], 1e-10),
              "level " + std::to_string(j) + ": " + num(states[j].energy_ev) + " vs " +
                  num(dense[j]));
  if (v.pass) v.detail = "lowest five levels agree to 1e-10";
  return v;
}

Verdict width_corrections() {
  Verdict v;
  const auto potential = RadialPotential::displaced_parabola(frozen::kV0ForD04R20, 20.0);
  const auto grid = default_parabola_grid(frozen::kV0ForD04R20, 20.0, 1.0, 1500);
  const double k = 0.01;

  for (int m : {0, 1, 2}) {
    const auto ground = solve_radial(potential, grid, m, 1)[0];
    const double diagonal = diagonal_shift_2d(ground, 0.0, k);
    const double ring_formula =
        lamb_shift_1d(Ring1DSpec{mean_radius(ground), 1.0, 0.0}, m, k).total_ev;
    v.require(rel_close(diagonal, ring_formula, 0.01),
              "m = " + std::to_string(m) + " azimuthal part off the ring formula");
  }

  const auto basis = solve_radial_basis(potential, grid, 0, 6);
  const double diagonal = diagonal_shift_2d(basis.channels.at(0)[0], 0.0, k);
  const auto nd = nondiagonal_shift_2d(basis, 0, 0, k, BasisTruncation{6});
  const double ratio = std::fabs(nd.value_ev / diagonal);
  v.require(ratio < 0.01,
            "radial part is " + num(ratio) + " x the azimuthal part (bound: < 0.01); "
            "the radial ladder scales as (R/d)^4 eps0^3 d^2 and overwhelms the "
            "azimuthal term at d/R = 0.02");
  if (v.pass) v.detail = "azimuthal match and radial smallness for m in {0,1,2}";
  return v;
}

Verdict sum_rule_saturation() {
  Verdict v;
  const auto potential = RadialPotential::displaced_parabola(1.68, 20.0);
  const auto grid = default_parabola_grid(1.68, 20.0, 1.0, 2000);
  const auto basis = solve_radial_basis(potential, grid, 0, 20);
  const auto report = sum_rule_check(basis, 0, 0, potential);
  v.require(std::fabs(report.ratio - 1.0) <= 0.05,
            "lhs/rhs = " + num(report.ratio));
  if (v.pass) v.detail = "lhs/rhs = " + num(report.ratio) + " at basis depth 20";
  return v;
}

Verdict log_estimates() {
  Verdict v;
  const double eps_bar = harmonic_reference(1.68, 20.0).epsilon_radial_ev;
  const auto closed =
      parabolic_lowest_shift(1.68, 1.0, std::exp(4.64) * eps_bar, eps_bar);
  v.require(rel_close(closed.prefactor_ev, 1.164e-9, 0.005),
            "prefactor " + num(closed.prefactor_ev) + " eV, expected ~1.164 neV");
  v.require(rel_close(closed.value_ev, 5.4e-9, 0.02),
            "shift " + num(closed.value_ev) + " eV, expected ~5.4 neV");

  const double eps_bar_molecular = harmonic_reference(215.0, 0.36).epsilon_radial_ev;
  const auto molecular = parabolic_lowest_shift(
      215.0, 1.0, std::exp(3.36) * eps_bar_molecular, eps_bar_molecular);
  v.require(rel_close(molecular.value_ev, 0.5e-6, 0.05),
            "molecular shift " + num(molecular.value_ev) + " eV, expected ~0.5 ueV");

  const auto potential = RadialPotential::displaced_parabola(1.68, 20.0);
  const auto grid = default_parabola_grid(1.68, 20.0, 1.0, 2000);
  const auto ground = solve_radial(potential, grid, 0, 1)[0];
  const auto quadrature = bethe_log_shift(ground, potential, 2.0, eps_bar);
  const double ratio = closed.prefactor_ev / quadrature.prefactor_ev;
  v.require(std::fabs(ratio - 2.0) <= 0.02 * 2.0,
            "closed/quadrature prefactor ratio " + num(ratio));
  if (v.pass) v.detail = "both scales and the factor-two split confirmed";
  return v;
}

std::string read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Verdict cli_determinism(const std::string& binary) {
  Verdict v;
  if (binary.empty()) {
    v.require(false, "no CLI binary path was given on the command line");
    return v;
  }
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "ringshift-acceptance";
  fs::create_directories(dir);

  const std::string lo = format_double(frozen::kEps0R20 * 0.5);
  const std::string hi = format_double(frozen::kEps0R20 * 1.5);
  const std::string v0 = format_double(frozen::kV0ForD04R20);

  struct Job {
    std::string name;
    std::string args;         // format string with {O} for the output path
    std::string extra;        // suffix of a second produced file to compare
    bool extra_is_prefix = false;  // {X} gets the path without the suffix
  };
  const std::vector<Job> jobs = {
      {"shift1d", "--preset semiconductor-ring --output {O} shift1d --m 1 --flux 0.25",
       "", false},
      {"scan",
       "--output {O} scan-flux --radius-nm 20 --kmax-ev 0.01 --m 0 --m 1 "
       "--flux-min=-0.5 --flux-max 0.5 --flux-step 0.05",
       "", false},
      {"cavity",
       "--output {O} cavity --radius-nm 20 --m 1 --omega-min-ev " + lo +
           " --omega-max-ev " + hi + " --omega-points 21",
       "", false},
      {"solve",
       "--preset gaas-2d --output {O} solve-radial --nmax 3 --grid-points 400 "
       "--dump-prefix {X}",
       "_n0_m0.csv", true},
      {"shift2d",
       "--output {O} shift2d --v0-ev-nm2 " + v0 +
           " --radius-nm 20 --kmax-ev 0.01 --nmax 3 --grid-points 400 "
           "--transitions-out {X}",
       ".transitions.csv", false},
      {"bethe", "--preset gaas-2d --output {O} bethe-log --grid-points 600", "", false},
      {"bethe-json",
       "--format json --preset gaas-2d --output {O} bethe-log --grid-points 600", "",
       false},
      {"presets", "--output {O} presets", "", false},
  };

  for (const Job& job : jobs) {
    if (!v.pass) break;
    std::string outputs[2];
    std::string extras[2];
    for (int round = 0; round < 2; ++round) {
      const std::string tag = job.name + (round == 0 ? "_a" : "_b");
      const fs::path out_path = dir / (tag + ".out");
      const fs::path extra_file = dir / (tag + job.extra);
      const std::string placed =
          job.extra_is_prefix ? (dir / tag).string() : extra_file.string();
      std::string args = job.args;
      if (const auto at = args.find("{O}"); at != std::string::npos)
        args.replace(at, 3, out_path.string());
      if (const auto at = args.find("{X}"); at != std::string::npos)
        args.replace(at, 3, placed);
      const std::string command = "\"" + binary + "\" " + args;
      const int rc = std::system(command.c_str());
      v.require(rc == 0, job.name + " run exited with status " + std::to_string(rc));
      if (!v.pass) break;
      outputs[round] = read_bytes(out_path);
      v.require(!outputs[round].empty(), job.name + " produced no output");
      if (!job.extra.empty()) extras[round] = read_bytes(extra_file);
    }
    if (!v.pass) break;
    v.require(outputs[0] == outputs[1], job.name + " outputs differ between runs");
    if (!job.extra.empty())
      v.require(!extras[0].empty() && extras[0] == extras[1],
                job.name + " side files differ between runs");
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
  if (v.pass) v.detail = std::to_string(jobs.size()) + " commands, byte-identical reruns";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string binary = argc > 1 ? argv[1] : "";
  testsupport::Criteria criteria;

  const std::vector<std::pair<std::string, std::function<Verdict()>>> checks = {
      {"angular energy scale at 20 nm", angular_scale},
      {"radiative chi scale across ring sizes", chi_scale},
      {"minimal-form identity at the spectrum bottom", minimal_identity},
      {"direct and rewritten shifts agree", rewritten_identity},
      {"flux-scan minima and mirror symmetry", scan_minima},
      {"cavity shift identities", cavity_identities},
      {"narrow-ring harmonic limit", harmonic_limit},
      {"tridiagonal solver matches dense reference", dense_crosscheck},
      {"width corrections stay below the azimuthal shift", width_corrections},
      {"dipole sum rule saturates", sum_rule_saturation},
      {"effective-logarithm estimates", log_estimates},
      {"command-line runs are byte-deterministic",
       [&binary] { return cli_determinism(binary); }},
  };

  for (std::size_t i = 0; i < checks.size(); ++i) {
    Verdict verdict;
    try {
      verdict = checks[i].second();
    } catch (const std::exception& e) {
      verdict.pass = false;
      verdict.detail = std::string("exception: ") + e.what();
    }
    criteria.record(static_cast<int>(i) + 1, verdict.pass, checks[i].first, verdict.detail);
  }
  return criteria.finish();
}
