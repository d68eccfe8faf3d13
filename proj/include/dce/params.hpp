// params.hpp — physical operating point, the Wilson-experiment reference
// values, and the (ξ, ζ) parametrization of the SQUID boundary condition.
//
// Unit conventions, used everywhere in this library:
//   * all quantities SI,
//   * all frequencies angular [rad/s].
//
// The boundary condition is controlled by two circuit combinations:
//   γ₀ [m]      — static Robin parameter (an effective length; negative at
//                 the experimental operating point),
//   α₀ [s²/m]   — weight of the second-time-derivative boundary term.
//
// Every spectral formula depends on them only through two dimensionless
// groups, evaluated once here and carried around instead of the raw SI
// values (whose products span ~40 decades):
//   A = γ₀·α₀·ω₀²        (signed; resonance condition is 1 + A·Ω² = 0)
//   g = γ₀·ω₀/v          (signed)
// together with the reduced frequency Ω = ω/ω₀ ∈ [0, 1].
#pragma once

#include <numbers>
#include <string>
#include <vector>

namespace dce {

/// Operating point used by the Wilson et al. SQUID experiment. ξ and ζ are
/// defined relative to these values; alternative references may be built
/// explicitly, but the spectra reported by this library are anchored here.
struct ReferencePoint {
    double gamma0_exp; ///< m
    double alpha0_exp; ///< s²/m
    double omega0;     ///< rad/s
    double epsilon;    ///< dimensionless modulation depth
    double v;          ///< m/s, speed of light in the waveguide
};

inline constexpr ReferencePoint kReference{
    -0.44e-3,                                // γ₀  = −0.44×10⁻³ m
    0.41e-19,                                // α₀  = 0.41×10⁻¹⁹ s²/m
    2.0 * std::numbers::pi * 10.30e9,        // ω₀  = 2π×10.30 GHz
    0.25,                                    // ε
    1.2e8,                                   // v   = 1.2×10⁸ m/s
};

/// Physical operating point in SI units. Plain aggregate; use validate()
/// to obtain a structured report of hard violations and advisories.
struct CircuitParams {
    double gamma0;  ///< m (signed; sign preserved exactly)
    double alpha0;  ///< s²/m, ≥ 0
    double omega0;  ///< rad/s, > 0
    double epsilon; ///< modulation depth, 0 < ε < 1
    double v;       ///< m/s, > 0
};

/// The dimensionless groups that fully determine the spectrum shape.
struct DimensionlessGroups {
    double xi;   ///< γ₀/γ₀exp, > 0
    double zeta; ///< α₀/α₀exp, ≥ 0
    double A;    ///< γ₀·α₀·ω₀² (signed)
    double g;    ///< γ₀·ω₀/v   (signed)
};

/// γ₀exp·α₀exp·ω₀² for a reference point.
double reference_A(const ReferencePoint& ref = kReference);

/// γ₀exp·ω₀/v for a reference point.
double reference_g(const ReferencePoint& ref = kReference);

/// Build the SI operating point for scale factors (ξ, ζ).
/// Throws domain_error when ξ ≤ 0 or ζ < 0 (parametrization undefined).
CircuitParams from_dimensionless(double xi, double zeta,
                                 const ReferencePoint& ref = kReference);

/// Nondimensionalize an operating point; ξ and ζ are recovered against ref.
DimensionlessGroups to_groups(const CircuitParams& p,
                              const ReferencePoint& ref = kReference);

/// Shorthand for to_groups(from_dimensionless(xi, zeta, ref), ref).
DimensionlessGroups groups_from(double xi, double zeta,
                                const ReferencePoint& ref = kReference);

/// Result of validate(): hard violations make the parameters unusable;
/// advisories flag physically meaningful but legal configurations.
struct ValidationReport {
    std::vector<std::string> violations;
    std::vector<std::string> advisories;

    bool valid() const { return violations.empty(); }
};

/// Check an operating point. Never throws; violations are data.
///   hard:     ω₀ ≤ 0, v ≤ 0, α₀ < 0, ε outside (0,1), γ₀ = 0
///             (γ₀ = 0 makes g = 0, turning an in-band root of 1+A·Ω²
///             into a true pole of the spectral density)
///   advisory: γ₀·α₀ > 0, for which no resonance 1+γ₀α₀ω² = 0 exists
ValidationReport validate(const CircuitParams& p);

} // namespace dce
