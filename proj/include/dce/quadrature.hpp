// quadrature.hpp — 1-D integration (adaptive Gauss–Kronrod plus a fixed-step
// trapezoid oracle) and the particle-creation-rate band integral.
#pragma once

#include "dce/params.hpp"

#include <functional>
#include <span>

namespace dce {

struct QuadratureConfig {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    int max_subdivisions = 2000;
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions_used = 0;
    bool converged = false;
};

/// Adaptive integration of f over [a, b]: Gauss–Kronrod 7–15 per panel,
/// bisecting the worst panel until the summed error estimate drops below
/// max(rel_tol·|value|, abs_tol) or max_subdivisions is exhausted (in which
/// case converged = false; no throw). A NaN from f is a hard error.
IntegralResult integrate_adaptive(const std::function<double(double)>& f,
                                  double a, double b,
                                  const QuadratureConfig& cfg = {});

/// Same, with the initial panels given by an ordered breakpoint list
/// (size ≥ 2). Seeding panel edges at known sharp features keeps narrow
/// spikes from being skipped by the first error estimates.
IntegralResult integrate_adaptive(const std::function<double(double)>& f,
                                  std::span<const double> breakpoints,
                                  const QuadratureConfig& cfg = {});

/// Composite trapezoid over n_panels uniform panels. No error estimate;
/// this is the independent cross-check for integrate_adaptive.
double integrate_trapezoid(const std::function<double(double)>& f,
                           double a, double b, long n_panels);

/// Particle creation rate R = ω₀·∫₀¹ N(Ω) dΩ in s⁻¹, with N the
/// dimensionless spectral density and ω₀ taken from ref. When the
/// resonance 1 + A·Ω² = 0 has an in-band root Ω_r, the integrator is
/// seeded with panel edges at Ω_r ± {1,3,10}·|g|Ω_r (the local width
/// scale) and at the mirrored dip 1−Ω_r. Throws convergence_error if the
/// quadrature does not converge.
double creation_rate(const DimensionlessGroups& groups, double epsilon,
                     const QuadratureConfig& cfg = {},
                     const ReferencePoint& ref = kReference);

/// creation_rate(ξ, ζ) / creation_rate(1, 1) against the frozen reference.
/// The (1,1) baseline is computed once per process (with the first cfg
/// seen) and cached; it is ε-independent because ε² cancels in the ratio.
double rate_ratio(double xi, double zeta, const QuadratureConfig& cfg = {});

/// Dimensionless band integral ∫₀¹ N(Ω) dΩ (creation_rate without the ω₀
/// factor), using the same resonance-seeded panels.
double band_integral(const DimensionlessGroups& groups, double epsilon,
                     const QuadratureConfig& cfg = {});

} // namespace dce
