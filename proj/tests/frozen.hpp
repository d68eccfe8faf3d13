// frozen.hpp — expected values frozen from an independent oracle: 40-digit
// arithmetic and adaptive quadrature on the same closed-form expressions,
// evaluated outside this codebase. Digits beyond double precision are kept
// so the rounding here is the oracle's, not ours.
#pragma once

#include <algorithm>
#include <cmath>

namespace frozen {

// reference groups A = γ₀α₀ω₀², g = γ₀ω₀/v at the experimental point
inline constexpr double kAExp = -0.075556306438578895;
inline constexpr double kGExp = -0.23729496510114905;

// resonance locus ζ*(ξ) = −4/(ξ·A_exp)
inline constexpr double kZetaStar1 = 52.940650338058455;
inline constexpr double kZetaStar06 = 88.234417230097425;
inline constexpr double kZetaStar2 = 26.470325169029227;

// response denominator and density at Ω = 1/2
inline constexpr double kD11Half = 0.97665586911146447;    // (ξ,ζ) = (1,1)
inline constexpr double kD5294Half = 0.014077225266492554; // (1, 52.94)
inline constexpr double kN11Half = 1.4680271113271892e-4;  // ε = 0.25

// density enhancement ρ(ξ,ζ)
inline constexpr double kRho153 = 4812.5081209432658;
inline constexpr double kRho0688 = 13333.298503543758;
inline constexpr double kRho2Star = 1203.3418636176404; // (2, ζ*(2))

// band integral ∫₀¹ N dΩ and rate at the reference point, ε = 0.25
inline constexpr double kBand11 = 9.8782670263194474e-5;
inline constexpr double kRate11 = 6392899.1707371945; // s⁻¹

// rate enhancements over the (1,1) baseline
inline constexpr double kRatio112 = 3.9499782314992534;
inline constexpr double kRatio115 = 6.7798289802953709;
inline constexpr double kRatioAtRes1 = 332.98073976523603; // at ζ = ζ*(1)
inline constexpr double kMaxRatio1 = 333.27108309996505;   // at ζ ≈ 52.755
inline constexpr double kMaxRatioArg1 = 52.755020016741043;
inline constexpr double kMaxRatio06 = 555.47501152639968; // at ζ ≈ 88.123
inline constexpr double kMaxRatioArg06 = 88.122773732792648;

// spectrum shape landmarks
inline constexpr double kHeightShift = 1.078099711276696; // max N(1,1)/max N(1,0)
inline constexpr double kPeak15Pos = 0.12802588731949124; // left peak, ζ = 15
inline constexpr double kPeak15Max = 1.0471850336971946e-3;
inline constexpr double kPeak12Pos = 0.14883403428656549; // left peak, ζ = 12
inline constexpr double kN53Half = 0.70648923950269818;   // peak height, ζ = 53
inline constexpr double kPeakRatio5315 = 674.65559263043055;
inline constexpr double kFwhm53 = 0.038184336444947163;
inline constexpr double kFwhm0 = 0.70236637726127676;

// relative closeness that stays relative for small magnitudes (doctest's
// Approx degrades to absolute near zero)
inline bool rel_close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

} // namespace frozen
