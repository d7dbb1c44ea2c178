#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringshift/units.hpp"

namespace ringshift {

struct AngularLevel {
  int m;
  double energy_ev;  // eps0 * (m + f)^2
};

/// Levels for m in [m_min, m_max]. Spectrum is invariant under
/// (m, f) -> (m + 1, f - 1) and symmetric under (m, f) -> (-m, -f).
std::vector<AngularLevel> spectrum_1d(const Ring1DSpec& spec, int m_min, int m_max,
                                      const PhysicalConstants& pc = PhysicalConstants::pinned());

/// |<m+-1|(e_+- . v)|m>| = hbar c / (2 m c^2 R) * |1 +- 2(m+f)|, in units of c.
/// polarization +1 couples m -> m+1, -1 couples m -> m-1.
struct MatrixElement1D {
  int m_initial;
  int m_final;
  int polarization;
  double magnitude_c;
};

MatrixElement1D matrix_element_1d(const Ring1DSpec& spec, int m, int polarization,
                                  const PhysicalConstants& pc = PhysicalConstants::pinned());

struct ShiftTerm {
  std::string label;
  double value_ev;
};

/// total_ev is the floating-point sum of per_term values in their stored
/// order, so the itemization always reproduces the total.
struct ShiftResult {
  double total_ev;
  std::vector<ShiftTerm> per_term;
  double in_chi_units;
  std::optional<WindowReport> window;
};

/// Vacuum radiative shift of level m at flux f, cutoff k_max:
///   alpha eps0^2 / (2 pi m c^2) * [ (1-2q)^3 ln(k_max/(eps0|1-2q|))
///                                 + (1+2q)^3 ln(k_max/(eps0|1+2q|)) ],  q = m+f.
/// Degenerate factors |1 +- 2q| below 1e-12 contribute zero (x^3 ln x -> 0).
/// The attached window report never gates the value.
ShiftResult lamb_shift_1d(const Ring1DSpec& spec, int m, double k_max_ev,
                          const PhysicalConstants& pc = PhysicalConstants::pinned());

/// Shift at the spectrum minimum q = 0: alpha eps0^2 / (pi m c^2) * ln(k_max/eps0).
double minimal_shift_1d(const Ring1DSpec& spec, double k_max_ev,
                        const PhysicalConstants& pc = PhysicalConstants::pinned());

/// Same shift through the minimum-referenced algebraic form
///   [1 + 12 q^2] * minimal_shift
///     - alpha eps0^2/(2 pi m c^2) * [ -L-^3 ln|L-| + L+^3 ln|L+| ],
/// with L+- = 2q +- 1. Equals lamb_shift_1d identically. With
/// flip_lambda_minus_sign the L- log term enters with the opposite sign,
/// which breaks the identity by 2 L-^3 ln|L-| inside the bracket; kept as an
/// explicit variant so the discrepancy is measurable.
double rewritten_shift_1d(const Ring1DSpec& spec, int m, double k_max_ev,
                          bool flip_lambda_minus_sign = false,
                          const PhysicalConstants& pc = PhysicalConstants::pinned());

struct FluxScanRow {
  int m;
  double flux;
  double shift_ev;
  double shift_over_chi;
};

/// Shift table over m values (major order) and flux values (minor order).
/// spec.flux is ignored; each row uses its own f.
std::vector<FluxScanRow> flux_scan(const Ring1DSpec& spec, const std::vector<int>& m_values,
                                   const std::vector<double>& f_values, double k_max_ev,
                                   const PhysicalConstants& pc = PhysicalConstants::pinned());

namespace detail {
/// Bracket terms of the shift formula at azimuthal parameter q and ratio
/// k_over_eps0: {(1-2q)^3 ln(k~/|1-2q|), (1+2q)^3 ln(k~/|1+2q|)}.
/// Shared with the two-dimensional diagonal shift.
struct BracketTerms {
  double minus_channel;  // transition m -> m-1
  double plus_channel;   // transition m -> m+1
};
BracketTerms shift_bracket(double q, double k_over_eps0);
}  // namespace detail

}  // namespace ringshift
