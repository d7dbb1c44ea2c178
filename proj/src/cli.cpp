#include "ringshift/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ringshift/cavity.hpp"
#include "ringshift/constants.hpp"
#include "ringshift/errors.hpp"
#include "ringshift/radial2d.hpp"
#include "ringshift/ring1d.hpp"
#include "ringshift/shift2d.hpp"
#include "ringshift/table.hpp"
#include "ringshift/units.hpp"

namespace ringshift::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw ConfigError("invalid number for " + key + ": '" + text + "'");
  return value;
}

int parse_int(const std::string& key, const std::string& text) {
  int value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw ConfigError("invalid integer for " + key + ": '" + text + "'");
  return value;
}

std::vector<int> parse_int_list(const std::string& key, const std::string& text) {
  std::vector<int> values;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) {
      values.push_back(parse_int(key, token));
      token.clear();
    }
  };
  for (char c : text) {
    if (c == ' ' || c == ',' || c == '\t')
      flush();
    else
      token += c;
  }
  flush();
  if (values.empty()) throw ConfigError("empty list for " + key);
  return values;
}

/// Non-flag parameter values for the active subcommand: config file entries
/// first, preset entries underneath.
struct ParamSource {
  std::map<std::string, std::string> values;

  std::optional<std::string> get(const std::string& key) const {
    const auto it = values.find(key);
    if (it == values.end()) return std::nullopt;
    return it->second;
  }

  void add_fallback(const std::string& key, const std::string& value) {
    values.emplace(key, value);  // keeps an existing (higher-priority) entry
  }
};

std::optional<double> resolve_double(const std::optional<double>& cli,
                                     const ParamSource& src, const std::string& key) {
  if (cli) return cli;
  if (const auto s = src.get(key)) return parse_double(key, *s);
  return std::nullopt;
}

std::optional<int> resolve_int(const std::optional<int>& cli, const ParamSource& src,
                               const std::string& key) {
  if (cli) return cli;
  if (const auto s = src.get(key)) return parse_int(key, *s);
  return std::nullopt;
}

double require_double(const std::optional<double>& cli, const ParamSource& src,
                      const std::string& key) {
  if (const auto v = resolve_double(cli, src, key)) return *v;
  throw ConfigError("missing required --" + key);
}

double default_double(const std::optional<double>& cli, const ParamSource& src,
                      const std::string& key, double fallback) {
  return resolve_double(cli, src, key).value_or(fallback);
}

int default_int(const std::optional<int>& cli, const ParamSource& src,
                const std::string& key, int fallback) {
  return resolve_int(cli, src, key).value_or(fallback);
}

std::optional<std::string> resolve_string(const std::optional<std::string>& cli,
                                          const ParamSource& src, const std::string& key) {
  if (cli) return cli;
  return src.get(key);
}

const std::map<std::string, std::set<std::string>>& subcommand_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"shift1d", {"radius-nm", "mass-ratio", "flux", "m", "kmax-ev"}},
      {"scan-flux",
       {"radius-nm", "mass-ratio", "kmax-ev", "m", "flux-min", "flux-max", "flux-step"}},
      {"cavity",
       {"radius-nm", "mass-ratio", "flux", "m", "omega-ev", "amplitude", "photons",
        "omega-min-ev", "omega-max-ev", "omega-points"}},
      {"solve-radial",
       {"v0-ev-nm2", "radius-nm", "mass-ratio", "m", "nmax", "grid-points", "rho-min-nm",
        "rho-max-nm", "dump-prefix"}},
      {"shift2d",
       {"v0-ev-nm2", "radius-nm", "mass-ratio", "m", "n", "kmax-ev", "nmax", "grid-points",
        "rho-min-nm", "rho-max-nm", "epsilon-bar-ev", "transitions-out"}},
      {"bethe-log",
       {"v0-ev-nm2", "radius-nm", "mass-ratio", "kmax-ev", "log-factor", "epsilon-bar-ev",
        "grid-points", "rho-min-nm", "rho-max-nm"}},
      {"presets", {}},
  };
  return keys;
}

struct ConfigFile {
  std::map<std::string, std::string> globals;  // format / output / preset
  std::map<std::string, std::map<std::string, std::string>> sections;
};

ConfigFile read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  static const std::set<std::string> global_keys = {"format", "output", "preset"};
  const auto& known = subcommand_keys();

  ConfigFile config;
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto comment = line.find_first_of("#;");
    if (comment != std::string::npos) line.erase(comment);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = path + ":" + std::to_string(line_no);
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("malformed section header at " + where);
      section = trim(line.substr(1, line.size() - 2));
      if (!known.count(section))
        throw ConfigError("unknown section [" + section + "] at " + where);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("expected key=value at " + where);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section.empty()) {
      if (!global_keys.count(key))
        throw ConfigError("unknown key '" + key + "' at " + where);
      config.globals[key] = value;
    } else {
      if (!known.at(section).count(key))
        throw ConfigError("unknown key '" + key + "' for " + section + " at " + where);
      config.sections[section][key] = value;
    }
  }
  return config;
}

const Preset& find_preset(const std::string& name) {
  for (const Preset& p : presets())
    if (p.name == name) return p;
  std::string names;
  for (const Preset& p : presets()) {
    if (!names.empty()) names += ", ";
    names += p.name;
  }
  throw ConfigError("unknown preset '" + name + "' (available: " + names + ")");
}

void emit(const ScanTable& table, const std::string& format,
          const std::optional<std::string>& output, std::ostream& out) {
  const std::string text = format == "json" ? to_json(table) : to_csv(table);
  if (output)
    atomic_write(*output, text);
  else
    out << text;
}

RadialGrid resolve_grid(const std::optional<double>& rho_min,
                        const std::optional<double>& rho_max, int n_points, double v0,
                        double center, double mass_ratio, const ParamSource& src,
                        const PhysicalConstants& pc) {
  const auto lo = resolve_double(rho_min, src, "rho-min-nm");
  const auto hi = resolve_double(rho_max, src, "rho-max-nm");
  if (lo.has_value() != hi.has_value())
    throw ConfigError("--rho-min-nm and --rho-max-nm must be given together");
  if (lo) {
    RadialGrid grid{*lo, *hi, n_points};
    validate(grid);
    return grid;
  }
  return default_parabola_grid(v0, center, mass_ratio, n_points, pc);
}

// ---- subcommand option structs ------------------------------------------

struct CommonOpts {
  std::optional<std::string> config;
  std::optional<std::string> output;
  std::optional<std::string> format;
  std::optional<std::string> preset;
};

struct Shift1dOpts {
  std::optional<double> radius, mass_ratio, flux, kmax;
  std::optional<int> m;
};

struct ScanFluxOpts {
  std::optional<double> radius, mass_ratio, kmax, flux_min, flux_max, flux_step;
  std::vector<int> m_values;
  CLI::Option* m_option = nullptr;
};

struct CavityOpts {
  std::optional<double> radius, mass_ratio, flux, omega, amplitude, omega_min, omega_max;
  std::optional<int> m, photons, omega_points;
};

struct SolveRadialOpts {
  std::optional<double> v0, radius, mass_ratio, rho_min, rho_max;
  std::optional<int> m, nmax, grid_points;
  std::optional<std::string> dump_prefix;
};

struct Shift2dOpts {
  std::optional<double> v0, radius, mass_ratio, kmax, rho_min, rho_max, epsilon_bar;
  std::optional<int> m, n, nmax, grid_points;
  std::optional<std::string> transitions_out;
};

struct BetheLogOpts {
  std::optional<double> v0, radius, mass_ratio, kmax, log_factor, epsilon_bar, rho_min,
      rho_max;
  std::optional<int> grid_points;
};

// ---- subcommand handlers -------------------------------------------------

ScanTable run_shift1d(const Shift1dOpts& o, const ParamSource& src,
                      const PhysicalConstants& pc) {
  Ring1DSpec ring{require_double(o.radius, src, "radius-nm"),
                  default_double(o.mass_ratio, src, "mass-ratio", 1.0),
                  default_double(o.flux, src, "flux", 0.0)};
  const int m = default_int(o.m, src, "m", 0);
  const double kmax = require_double(o.kmax, src, "kmax-ev");
  const ShiftResult shift = lamb_shift_1d(ring, m, kmax, pc);

  ScanTable table;
  table.columns = {{"m", "1"},          {"flux", "1"},
                   {"radius", "nm"},    {"mass_ratio", "1"},
                   {"epsilon0", "eV"},  {"kmax", "eV"},
                   {"term_minus", "eV"}, {"term_plus", "eV"},
                   {"shift", "eV"},     {"shift_over_chi", "1"},
                   {"window_status", "1"}, {"window_ratio_low", "1"},
                   {"window_ratio_high", "1"}};
  table.rows.push_back({static_cast<std::int64_t>(m), ring.flux, ring.radius_nm,
                        ring.mass_ratio, epsilon0(ring, pc), kmax,
                        shift.per_term[0].value_ev, shift.per_term[1].value_ev,
                        shift.total_ev, shift.in_chi_units,
                        std::string(to_string(shift.window->status)),
                        shift.window->ratio_low, shift.window->ratio_high});
  return table;
}

ScanTable run_scan_flux(const ScanFluxOpts& o, const ParamSource& src,
                        const PhysicalConstants& pc) {
  Ring1DSpec ring{require_double(o.radius, src, "radius-nm"),
                  default_double(o.mass_ratio, src, "mass-ratio", 1.0), 0.0};
  const double kmax = require_double(o.kmax, src, "kmax-ev");
  const double fmin = default_double(o.flux_min, src, "flux-min", -1.0);
  const double fmax = default_double(o.flux_max, src, "flux-max", 4.0);
  const double fstep = default_double(o.flux_step, src, "flux-step", 0.01);
  if (!(fstep > 0.0) || !(fmax >= fmin)) throw ConfigError("empty flux grid");

  std::vector<int> m_values;
  if (o.m_option != nullptr && o.m_option->count() > 0)
    m_values = o.m_values;
  else if (const auto s = src.get("m"))
    m_values = parse_int_list("m", *s);
  else
    m_values = {0, 1, 2, 3};

  const int steps = static_cast<int>(std::floor((fmax - fmin) / fstep + 1e-9));
  std::vector<double> flux_values(steps + 1);
  for (int i = 0; i <= steps; ++i) flux_values[i] = fmin + i * fstep;

  ScanTable table;
  table.columns = {{"m", "1"}, {"flux", "1"}, {"shift", "eV"}, {"shift_over_chi", "1"}};
  for (const FluxScanRow& row : flux_scan(ring, m_values, flux_values, kmax, pc))
    table.rows.push_back({static_cast<std::int64_t>(row.m), row.flux, row.shift_ev,
                          row.shift_over_chi});
  return table;
}

ScanTable run_cavity(const CavityOpts& o, const ParamSource& src,
                     const PhysicalConstants& pc) {
  Ring1DSpec ring{require_double(o.radius, src, "radius-nm"),
                  default_double(o.mass_ratio, src, "mass-ratio", 1.0),
                  default_double(o.flux, src, "flux", 0.0)};
  const int m = default_int(o.m, src, "m", 0);
  const int photons = default_int(o.photons, src, "photons", 0);
  const double amplitude = default_double(o.amplitude, src, "amplitude", 1.0);
  const auto omega = resolve_double(o.omega, src, "omega-ev");
  const auto omega_min = resolve_double(o.omega_min, src, "omega-min-ev");
  const auto omega_max = resolve_double(o.omega_max, src, "omega-max-ev");
  const bool sweep = omega_min.has_value() || omega_max.has_value();
  if (sweep && (!omega_min || !omega_max))
    throw ConfigError("--omega-min-ev and --omega-max-ev must be given together");
  if (sweep && omega) throw ConfigError("--omega-ev conflicts with an omega sweep");
  if (!sweep && !omega) throw ConfigError("missing required --omega-ev");

  std::vector<double> omegas;
  if (sweep) {
    const int points = default_int(o.omega_points, src, "omega-points", 101);
    if (points < 2) throw ConfigError("--omega-points must be at least 2");
    if (!(*omega_min > 0.0) || !(*omega_max > *omega_min))
      throw ConfigError("omega sweep bounds must satisfy 0 < min < max");
    omegas.resize(points);
    for (int i = 0; i < points; ++i)
      omegas[i] = *omega_min + i * (*omega_max - *omega_min) / (points - 1);
  } else {
    omegas.push_back(*omega);
  }

  ScanTable table;
  table.columns = {{"m", "1"},
                   {"flux", "1"},
                   {"photons", "1"},
                   {"amplitude", "1"},
                   {"epsilon0", "eV"},
                   {"omega", "eV"},
                   {"emission_plus", "eV"},
                   {"emission_minus", "eV"},
                   {"absorption_plus", "eV"},
                   {"absorption_minus", "eV"},
                   {"shift", "eV"},
                   {"shift_over_chi", "1"},
                   {"status", "1"}};
  const double e0 = epsilon0(ring, pc);
  for (double w : omegas) {
    std::vector<Cell> row{static_cast<std::int64_t>(m), ring.flux,
                          static_cast<std::int64_t>(photons), amplitude, e0, w};
    try {
      const ShiftResult shift = cavity_shift(ring, m, w, amplitude, photons, 1e-6, pc);
      for (const ShiftTerm& term : shift.per_term) row.push_back(term.value_ev);
      row.push_back(shift.total_ev);
      row.push_back(shift.in_chi_units);
      row.push_back(std::string("ok"));
    } catch (const ResonanceError& e) {
      if (!sweep) throw;  // a single resonant point is a hard error
      for (int i = 0; i < 6; ++i) row.push_back(kNaN);
      row.push_back(std::string("resonant: ") + e.denominator_label());
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

ScanTable run_solve_radial(const SolveRadialOpts& o, const ParamSource& src,
                           const PhysicalConstants& pc) {
  const double v0 = require_double(o.v0, src, "v0-ev-nm2");
  const double center = require_double(o.radius, src, "radius-nm");
  const double mass_ratio = default_double(o.mass_ratio, src, "mass-ratio", 1.0);
  const int m = default_int(o.m, src, "m", 0);
  const int nmax = default_int(o.nmax, src, "nmax", 4);
  if (nmax < 0) throw ConfigError("--nmax must be nonnegative");
  const int points = default_int(o.grid_points, src, "grid-points", 2000);
  const RadialPotential potential = RadialPotential::displaced_parabola(v0, center);
  const RadialGrid grid =
      resolve_grid(o.rho_min, o.rho_max, points, v0, center, mass_ratio, src, pc);

  const auto states = solve_radial(potential, grid, m, nmax + 1, mass_ratio, pc);

  const auto dump_prefix = resolve_string(o.dump_prefix, src, "dump-prefix");
  if (dump_prefix) {
    for (const RadialEigenpair& state : states) {
      ScanTable dump;
      dump.columns = {{"rho", "nm"}, {"R", "nm^-1"}};
      for (int i = 0; i < state.grid.n_points; ++i)
        dump.rows.push_back({state.grid.point(i), state.wavefunction[i]});
      atomic_write(*dump_prefix + "_n" + std::to_string(state.n) + "_m" +
                       std::to_string(state.m) + ".csv",
                   to_csv(dump));
    }
  }

  ScanTable table;
  table.columns = {{"n", "1"}, {"m", "1"}, {"energy", "eV"}, {"mean_radius", "nm"}};
  for (const RadialEigenpair& state : states)
    table.rows.push_back({static_cast<std::int64_t>(state.n),
                          static_cast<std::int64_t>(state.m), state.energy_ev,
                          mean_radius(state)});
  return table;
}

ScanTable run_shift2d(const Shift2dOpts& o, const ParamSource& src,
                      const PhysicalConstants& pc, const std::string& format) {
  const double v0 = require_double(o.v0, src, "v0-ev-nm2");
  const double center = require_double(o.radius, src, "radius-nm");
  const double mass_ratio = default_double(o.mass_ratio, src, "mass-ratio", 1.0);
  const double kmax = require_double(o.kmax, src, "kmax-ev");
  const int m = default_int(o.m, src, "m", 0);
  const int n = default_int(o.n, src, "n", 0);
  const int nmax = default_int(o.nmax, src, "nmax", 10);
  if (nmax < 1) throw ConfigError("--nmax must be at least 1");
  if (n < 0 || n > nmax) throw ConfigError("--n must lie in [0, nmax]");
  const int points = default_int(o.grid_points, src, "grid-points", 2000);
  const RadialPotential potential = RadialPotential::displaced_parabola(v0, center);
  const RadialGrid grid =
      resolve_grid(o.rho_min, o.rho_max, points, v0, center, mass_ratio, src, pc);

  BasisTruncation truncation;
  truncation.n_max = nmax;
  if (const auto eb = resolve_double(o.epsilon_bar, src, "epsilon-bar-ev"))
    truncation.fixed_epsilon_bar_ev = eb;

  const RadialBasis basis = solve_radial_basis(potential, grid, m, nmax, mass_ratio, pc);
  const Shift2DResult result = total_shift_2d(basis, n, m, kmax, truncation, mass_ratio, pc);

  if (const auto path = resolve_string(o.transitions_out, src, "transitions-out")) {
    ScanTable transitions;
    transitions.columns = {{"n_prime", "1"},
                           {"m_prime", "1"},
                           {"delta_e", "eV"},
                           {"element", "nm"},
                           {"contribution", "eV"}};
    for (const Transition2D& t : result.transitions)
      transitions.rows.push_back({static_cast<std::int64_t>(t.n_prime),
                                  static_cast<std::int64_t>(t.m_prime), t.delta_e_ev,
                                  t.element_nm, t.contribution_ev});
    atomic_write(*path, format == "json" ? to_json(transitions) : to_csv(transitions));
  }

  const RadialEigenpair& target = basis.channels.at(m)[n];
  ScanTable table;
  table.columns = {{"n", "1"},
                   {"m", "1"},
                   {"v0", "eV nm^-2"},
                   {"radius", "nm"},
                   {"mean_radius", "nm"},
                   {"kmax", "eV"},
                   {"diagonal", "eV"},
                   {"nondiagonal", "eV"},
                   {"total", "eV"},
                   {"epsilon_bar", "eV"},
                   {"epsilon_bar_defined", "1"}};
  table.rows.push_back({static_cast<std::int64_t>(n), static_cast<std::int64_t>(m), v0,
                        center, mean_radius(target), kmax, result.diagonal_ev,
                        result.nondiagonal_ev, result.total_ev,
                        result.epsilon_bar_defined ? result.epsilon_bar_ev : kNaN,
                        static_cast<std::int64_t>(result.epsilon_bar_defined ? 1 : 0)});
  return table;
}

ScanTable run_bethe_log(const BetheLogOpts& o, const ParamSource& src,
                        const PhysicalConstants& pc) {
  const double v0 = require_double(o.v0, src, "v0-ev-nm2");
  if (v0 < 0.0) throw ConfigError("--v0-ev-nm2 must be nonnegative");
  const double mass_ratio = default_double(o.mass_ratio, src, "mass-ratio", 1.0);

  auto epsilon_bar = resolve_double(o.epsilon_bar, src, "epsilon-bar-ev");
  if (!epsilon_bar) {
    if (v0 == 0.0)
      throw ConfigError("missing required --epsilon-bar-ev (no harmonic scale at zero v0)");
    epsilon_bar = harmonic_reference(v0, 1.0, mass_ratio, pc).epsilon_radial_ev;
  }

  const auto kmax_opt = resolve_double(o.kmax, src, "kmax-ev");
  const auto log_factor_opt = resolve_double(o.log_factor, src, "log-factor");
  if (kmax_opt && log_factor_opt)
    throw ConfigError("--kmax-ev conflicts with --log-factor");
  if (!kmax_opt && !log_factor_opt)
    throw ConfigError("missing required --kmax-ev (or --log-factor)");
  const double kmax = kmax_opt ? *kmax_opt : *epsilon_bar * std::exp(*log_factor_opt);

  const BetheLogShift closed =
      parabolic_lowest_shift(v0, mass_ratio, kmax, *epsilon_bar, pc);

  double lap_quad = kNaN, pref_quad = kNaN, shift_quad = kNaN, ratio = kNaN;
  if (v0 > 0.0) {
    const double center = require_double(o.radius, src, "radius-nm");
    const int points = default_int(o.grid_points, src, "grid-points", 2000);
    const RadialPotential potential = RadialPotential::displaced_parabola(v0, center);
    const RadialGrid grid =
        resolve_grid(o.rho_min, o.rho_max, points, v0, center, mass_ratio, src, pc);
    const RadialEigenpair ground = solve_radial(potential, grid, 0, 1, mass_ratio, pc)[0];
    const BetheLogShift quad =
        bethe_log_shift(ground, potential, kmax, *epsilon_bar, mass_ratio, pc);
    lap_quad = quad.laplacian_term_ev_nm2;
    pref_quad = quad.prefactor_ev;
    shift_quad = quad.value_ev;
    ratio = closed.prefactor_ev / quad.prefactor_ev;
  }

  ScanTable table;
  table.columns = {{"v0", "eV nm^-2"},
                   {"epsilon_bar", "eV"},
                   {"kmax", "eV"},
                   {"log_factor", "1"},
                   {"laplacian_quadrature", "eV nm^-2"},
                   {"prefactor_quadrature", "eV"},
                   {"shift_quadrature", "eV"},
                   {"laplacian_closed", "eV nm^-2"},
                   {"prefactor_closed", "eV"},
                   {"shift_closed", "eV"},
                   {"prefactor_ratio", "1"}};
  table.rows.push_back({v0, *epsilon_bar, kmax, closed.log_factor, lap_quad, pref_quad,
                        shift_quad, closed.laplacian_term_ev_nm2, closed.prefactor_ev,
                        closed.value_ev, ratio});
  return table;
}

ScanTable run_presets() {
  ScanTable table;
  table.columns = {{"preset", "1"}, {"key", "1"}, {"value", "1"}};
  for (const Preset& p : presets()) {
    table.rows.push_back({p.name, std::string("description"), p.description});
    for (const auto& [key, value] : p.values) table.rows.push_back({p.name, key, value});
  }
  return table;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> list = {
      {"semiconductor-ring",
       "GaAs-style semiconductor ring, 20 nm radius, 10 meV cutoff",
       {{"radius-nm", "20"}, {"kmax-ev", "0.01"}, {"mass-ratio", "1"}}},
      {"benzene",
       "benzene molecular ring",
       {{"radius-nm", "0.134"}, {"kmax-ev", "50"}, {"mass-ratio", "1"}}},
      {"porphyrin",
       "porphyrin macrocycle",
       {{"radius-nm", "0.36"}, {"kmax-ev", "10"}, {"mass-ratio", "1"}}},
      {"gaas-2d",
       "parabolically confined semiconductor ring",
       {{"v0-ev-nm2", "1.68"},
        {"radius-nm", "20"},
        {"log-factor", "4.64"},
        {"mass-ratio", "1"}}},
      {"porphyrin-2d",
       "parabolically confined molecular-scale ring",
       {{"v0-ev-nm2", "215"},
        {"radius-nm", "0.36"},
        {"log-factor", "3.36"},
        {"mass-ratio", "1"}}},
  };
  return list;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vacuum radiative level shifts of electrons on quantum rings"};
  app.name("ringshift");
  app.require_subcommand(1);

  CommonOpts common;
  app.add_option("--config", common.config, "key=value config file with [subcommand] sections");
  app.add_option("--output", common.output, "write the result table to this path (default: stdout)");
  app.add_option("--format", common.format, "output format: csv or json (default: csv)");
  app.add_option("--preset", common.preset,
                 "named parameter set; fills options not given explicitly");

  Shift1dOpts s1;
  CLI::App* shift1d = app.add_subcommand("shift1d", "vacuum shift of one ring level");
  shift1d->add_option("--radius-nm", s1.radius, "ring radius in nm");
  shift1d->add_option("--mass-ratio", s1.mass_ratio, "effective mass over electron mass");
  shift1d->add_option("--flux", s1.flux, "magnetic flux through the ring in flux quanta");
  shift1d->add_option("--m", s1.m, "angular momentum quantum number");
  shift1d->add_option("--kmax-ev", s1.kmax, "photon energy cutoff in eV");

  ScanFluxOpts scan;
  CLI::App* scan_flux = app.add_subcommand("scan-flux", "shift versus flux for several m");
  scan_flux->add_option("--radius-nm", scan.radius, "ring radius in nm");
  scan_flux->add_option("--mass-ratio", scan.mass_ratio, "effective mass over electron mass");
  scan_flux->add_option("--kmax-ev", scan.kmax, "photon energy cutoff in eV");
  scan.m_option =
      scan_flux->add_option("--m", scan.m_values, "angular momentum quantum numbers");
  scan_flux->add_option("--flux-min", scan.flux_min, "first flux value");
  scan_flux->add_option("--flux-max", scan.flux_max, "last flux value");
  scan_flux->add_option("--flux-step", scan.flux_step, "flux grid step");

  CavityOpts cav;
  CLI::App* cavity = app.add_subcommand("cavity", "level shift from one cavity mode");
  cavity->add_option("--radius-nm", cav.radius, "ring radius in nm");
  cavity->add_option("--mass-ratio", cav.mass_ratio, "effective mass over electron mass");
  cavity->add_option("--flux", cav.flux, "magnetic flux through the ring in flux quanta");
  cavity->add_option("--m", cav.m, "angular momentum quantum number");
  cavity->add_option("--omega-ev", cav.omega, "cavity mode energy in eV");
  cavity->add_option("--amplitude", cav.amplitude, "dimensionless mode amplitude");
  cavity->add_option("--photons", cav.photons, "photon occupation of the mode");
  cavity->add_option("--omega-min-ev", cav.omega_min, "sweep start mode energy in eV");
  cavity->add_option("--omega-max-ev", cav.omega_max, "sweep end mode energy in eV");
  cavity->add_option("--omega-points", cav.omega_points, "sweep point count (default 101)");

  SolveRadialOpts sr;
  CLI::App* solve = app.add_subcommand("solve-radial", "radial eigenstates of a ring potential");
  solve->add_option("--v0-ev-nm2", sr.v0, "parabola strength in eV/nm^2");
  solve->add_option("--radius-nm", sr.radius, "parabola center (ring radius) in nm");
  solve->add_option("--mass-ratio", sr.mass_ratio, "effective mass over electron mass");
  solve->add_option("--m", sr.m, "angular momentum quantum number");
  solve->add_option("--nmax", sr.nmax, "highest radial quantum number to solve");
  solve->add_option("--grid-points", sr.grid_points, "radial grid size (default 2000)");
  solve->add_option("--rho-min-nm", sr.rho_min, "grid start in nm (default: auto bracket)");
  solve->add_option("--rho-max-nm", sr.rho_max, "grid end in nm (default: auto bracket)");
  solve->add_option("--dump-prefix", sr.dump_prefix,
                    "write PREFIX_n{n}_m{m}.csv wavefunction files");

  Shift2dOpts s2;
  CLI::App* shift2d = app.add_subcommand("shift2d", "vacuum shift of a finite-width ring level");
  shift2d->add_option("--v0-ev-nm2", s2.v0, "parabola strength in eV/nm^2");
  shift2d->add_option("--radius-nm", s2.radius, "parabola center (ring radius) in nm");
  shift2d->add_option("--mass-ratio", s2.mass_ratio, "effective mass over electron mass");
  shift2d->add_option("--m", s2.m, "angular momentum quantum number");
  shift2d->add_option("--n", s2.n, "radial quantum number of the shifted level");
  shift2d->add_option("--kmax-ev", s2.kmax, "photon energy cutoff in eV");
  shift2d->add_option("--nmax", s2.nmax, "highest virtual radial quantum number");
  shift2d->add_option("--grid-points", s2.grid_points, "radial grid size (default 2000)");
  shift2d->add_option("--rho-min-nm", s2.rho_min, "grid start in nm (default: auto bracket)");
  shift2d->add_option("--rho-max-nm", s2.rho_max, "grid end in nm (default: auto bracket)");
  shift2d->add_option("--epsilon-bar-ev", s2.epsilon_bar,
                      "fixed effective energy for the pooled logarithm");
  shift2d->add_option("--transitions-out", s2.transitions_out,
                      "write the virtual-transition table to this path");

  BetheLogOpts bl;
  CLI::App* bethe = app.add_subcommand("bethe-log", "effective-logarithm shift estimate");
  bethe->add_option("--v0-ev-nm2", bl.v0, "parabola strength in eV/nm^2");
  bethe->add_option("--radius-nm", bl.radius, "parabola center (ring radius) in nm");
  bethe->add_option("--mass-ratio", bl.mass_ratio, "effective mass over electron mass");
  bethe->add_option("--kmax-ev", bl.kmax, "photon energy cutoff in eV");
  bethe->add_option("--log-factor", bl.log_factor,
                    "ln(kmax/epsilon_bar) given directly instead of --kmax-ev");
  bethe->add_option("--epsilon-bar-ev", bl.epsilon_bar,
                    "effective energy (default: harmonic radial spacing)");
  bethe->add_option("--grid-points", bl.grid_points, "radial grid size (default 2000)");
  bethe->add_option("--rho-min-nm", bl.rho_min, "grid start in nm (default: auto bracket)");
  bethe->add_option("--rho-max-nm", bl.rho_max, "grid end in nm (default: auto bracket)");

  CLI::App* list_presets = app.add_subcommand("presets", "list the built-in parameter sets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    ConfigFile config;
    if (common.config) config = read_config(*common.config);

    const CLI::App* active = app.get_subcommands().front();
    const std::string name = active->get_name();

    ParamSource src;
    if (const auto it = config.sections.find(name); it != config.sections.end())
      src.values = it->second;

    auto global = [&](const char* key) -> std::optional<std::string> {
      const auto it = config.globals.find(key);
      if (it == config.globals.end()) return std::nullopt;
      return it->second;
    };
    const std::optional<std::string> preset_name =
        common.preset ? common.preset : global("preset");
    if (preset_name)
      for (const auto& [key, value] : find_preset(*preset_name).values)
        src.add_fallback(key, value);

    const std::string format =
        common.format ? *common.format : global("format").value_or("csv");
    if (format != "csv" && format != "json")
      throw ConfigError("unknown format '" + format + "' (expected csv or json)");
    const std::optional<std::string> output =
        common.output ? common.output : global("output");

    const char* constants_path = std::getenv("RINGSHIFT_CONSTANTS");
    const PhysicalConstants pc = constants_path != nullptr
                                     ? PhysicalConstants::from_file(constants_path)
                                     : PhysicalConstants::pinned();

    ScanTable table;
    if (active == shift1d)
      table = run_shift1d(s1, src, pc);
    else if (active == scan_flux)
      table = run_scan_flux(scan, src, pc);
    else if (active == cavity)
      table = run_cavity(cav, src, pc);
    else if (active == solve)
      table = run_solve_radial(sr, src, pc);
    else if (active == shift2d)
      table = run_shift2d(s2, src, pc, format);
    else if (active == bethe)
      table = run_bethe_log(bl, src, pc);
    else if (active == list_presets)
      table = run_presets();

    emit(table, format, output, out);
    return kExitOk;
  } catch (const ResonanceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResonance;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace ringshift::cli
