// sweep.hpp — parameter-space exploration over (ξ, ζ): dense grids of ρ or
// rate ratio, 1-D maximization over ζ, and spectrum shape classification.
#pragma once

#include "dce/params.hpp"
#include "dce/quadrature.hpp"

#include <string>
#include <vector>

namespace dce {

enum class Quantity { rho, rate_ratio };

std::string to_string(Quantity q);

struct SweepMetadata {
    ReferencePoint reference = kReference;
    double epsilon = kReference.epsilon;
    std::string timestamp; ///< empty unless the caller stamps it
};

/// Dense 2-D evaluation over the Cartesian (ξ, ζ) grid; values stored
/// row-major with row = ξ index.
struct SweepResult {
    std::vector<double> xi_grid;
    std::vector<double> zeta_grid;
    std::vector<double> values;
    Quantity quantity = Quantity::rho;
    SweepMetadata metadata;

    double at(std::size_t xi_index, std::size_t zeta_index) const {
        return values[xi_index * zeta_grid.size() + zeta_index];
    }
};

/// n evenly spaced values over [lo, hi], endpoints included (n ≥ 1;
/// n = 1 requires lo = hi).
std::vector<double> linspace(double lo, double hi, int n);

/// Evaluate rho or rate_ratio on every grid cell. Cells are evaluated in
/// parallel (capped by the DCE_THREADS environment variable, default all
/// cores); results are assembled by index, so the output is independent
/// of scheduling. A throwing cell fails the whole sweep with an error
/// locating the (ξ, ζ) cell.
SweepResult sweep_grid(const std::vector<double>& xi_grid,
                       const std::vector<double>& zeta_grid,
                       Quantity quantity, const QuadratureConfig& cfg = {});

struct MaximizeResult {
    double zeta_star = 0.0;
    double value = 0.0;
};

/// Golden-section maximization of rho or rate_ratio over ζ in
/// [zeta_lo, zeta_hi], refined to |Δζ| < tol and finished with one
/// parabolic-vertex polish through the final bracket (the quantities are
/// smooth near their maxima, so the polish buys several extra digits on
/// the argmax). The bracket must contain a single interior maximum; seed
/// it from resonance_zeta(ξ) ± 50%. Throws bracket_error when the maximum
/// sits at an endpoint.
MaximizeResult maximize_over_zeta(double xi, double zeta_lo, double zeta_hi,
                                  Quantity quantity,
                                  const QuadratureConfig& cfg = {},
                                  double tol = 1e-3);

enum class SpectrumShape { parabolic, two_peak, sharp_resonance };

std::string to_string(SpectrumShape s);

struct PeakReport {
    int n_peaks = 0;
    std::vector<double> peak_positions; ///< Ω values, strictly inside (0, 1)
    std::vector<double> peak_heights;
    SpectrumShape shape = SpectrumShape::parabolic;
    double fwhm = 0.0; ///< full width at half maximum of the tallest peak
};

/// Classify the sampled spectrum shape on an n_points ≥ 201 uniform grid.
/// Interior local maxima are strict against both neighbours; exact-tie
/// plateaus are merged into one candidate at their midpoint. Shapes:
/// two-peak when two maxima are found; sharp-resonance when one maximum
/// has FWHM below sharp_fwhm (a classifier constant, not physics); else
/// parabolic. Throws degenerate_grid_error if the count is not 1 or 2.
PeakReport classify_spectrum(const DimensionlessGroups& groups, double epsilon,
                             int n_points, double sharp_fwhm = 0.1);

} // namespace dce
