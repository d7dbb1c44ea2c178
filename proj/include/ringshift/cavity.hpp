#pragma once

#include "ringshift/ring1d.hpp"
#include "ringshift/units.hpp"

namespace ringshift {

/// Level shift of ring state m coupled to a single cavity mode of energy
/// omega holding N photons, amplitude A0:
///
///   alpha A0^2 eps0 / (4 m c^2) * {  (N+1) [ L+^2/(omega + eps0 L+) + L-^2/(omega - eps0 L-) ]
///                                   - N    [ L+^2/(omega - eps0 L+) + L-^2/(omega + eps0 L-) ] }
///
/// with L+- = 2(m+f) +- 1. A0 is a dimensionless number read in the
/// natural-unit normalization where the mode amplitude carries energy
/// dimension (eV), so alpha A0^2 / (m c^2) is the single reported prefactor.
///
/// The result is exactly affine in N and exactly quadratic in A0. per_term
/// itemizes the four denominator channels; emission terms carry the (N+1)
/// weight, absorption terms the -N weight.
///
/// Throws ResonanceError when a *contributing* term (nonzero weight and
/// nonzero L^2) has |denominator| <= resonance_tolerance * eps0.
ShiftResult cavity_shift(const Ring1DSpec& spec, int m, double omega_ev, double amplitude,
                         int photons, double resonance_tolerance = 1e-6,
                         const PhysicalConstants& pc = PhysicalConstants::pinned());

/// cavity_shift with N = 0 (same code path, bit-identical).
ShiftResult vacuum_cavity_shift(const Ring1DSpec& spec, int m, double omega_ev,
                                double amplitude, double resonance_tolerance = 1e-6,
                                const PhysicalConstants& pc = PhysicalConstants::pinned());

}  // namespace ringshift
