// spectrum.hpp — the closed-form photon spectral distribution for the
// harmonically driven generalized Robin boundary, in nondimensional form.
//
// With Ω = ω/ω₀ and the groups (A, g) from params.hpp, the response
// denominator is
//     D(Ω) = (1 + A·Ω²)² + g²·Ω²
// and the created-photon density per unit angular frequency per unit
// drive time is
//     N(Ω) = [ε²g²/(2π)] · Ω(1−Ω) · Θ(1−Ω) / [D(Ω)·D(1−Ω)].
//
// N is symmetric about Ω = 1/2 and vanishes identically for Ω ≥ 1 (no
// photons above the drive frequency at first order). For A < 0 the factor
// 1 + A·Ω² has an in-band root Ω_r = 1/√(−A) when −A ≥ 1; D stays positive
// there (it bottoms out at g²Ω_r²), which produces the resonance
// enhancements this library maps.
#pragma once

#include "dce/params.hpp"

#include <vector>

namespace dce {

/// Sampled spectrum on a uniform Ω grid over [0, 1].
struct Spectrum {
    std::vector<double> omega_frac; ///< ordered, endpoints included
    std::vector<double> density;    ///< N(Ω) ≥ 0; exactly 0 for Ω ≥ 1
    DimensionlessGroups groups;
    double epsilon = 0.0;
};

/// Response denominator D(Ω) = (1 + A·Ω²)² + g²·Ω².
double denominator(double omega_frac, const DimensionlessGroups& groups);

/// Dimensionless spectral density N(Ω). Returns exactly 0 outside (0, 1).
double spectral_density(double omega_frac, const DimensionlessGroups& groups,
                        double epsilon);

/// Closed-form density sampled on a uniform inclusive grid of n_points ≥ 3.
Spectrum spectrum_grid(const DimensionlessGroups& groups, double epsilon,
                       int n_points);

/// Enhancement of the density at half the drive frequency relative to the
/// experimental operating point: ρ(ξ,ζ) = N(1/2; ξ,ζ) / N(1/2; 1,1)
///                                      = ξ²·[D₁₁(1/2)/D_ξζ(1/2)]².
double rho(double xi, double zeta, const ReferencePoint& ref = kReference);

/// The ζ that minimizes D(1/2) at fixed ξ, i.e. solves 1 + ξζ·A_exp/4 = 0:
/// ζ* = −4/(ξ·A_exp). Throws domain_error if the reference has A_exp ≥ 0
/// (no resonance exists for γ₀·α₀ ≥ 0).
double resonance_zeta(double xi, const ReferencePoint& ref = kReference);

} // namespace dce
