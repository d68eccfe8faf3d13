// genform.hpp — the first-order spectral integral for arbitrary drive
// profiles, and the validation of the Dirac-delta approximation that
// reduces it to the closed form in spectrum.hpp.
//
// The drive enters through its Fourier transform F(ω) = ∫ f(t)e^{iωt} dt.
// The number of photons created per unit angular frequency is
//
//   N(ω) = [2ε²γ₀²/(πv²)] · ω/D_v(ω) ·
//          ∫₀^∞ (dω′/2π) · ω′ · |F(ω+ω′)|² / D_v(ω′),
//
// with D_v(ω) = (1+γ₀α₀ω²)² + γ₀²ω²/v². For the long damped-cosine drive
// f(t) = cos(ω₀t)e^{−|t|/τ} with ω₀τ ≫ 1, |F|² collapses onto
// (π/2)τ[δ(ω−ω₀)+δ(ω+ω₀)] and N/τ reproduces the closed form exactly.
#pragma once

#include "dce/params.hpp"
#include "dce/quadrature.hpp"

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace dce {

enum class DriveKind { harmonic_damped, tabulated };

/// Modulation profile f(t) of the Josephson energy, dimensionless, with
/// |f| < 1 and decay at both ends. Immutable after construction.
class DriveProfile {
public:
    /// f(t) = cos(ω₀t)·e^{−|t|/τ}. Requires ω₀ > 0, τ > 0.
    static DriveProfile harmonic_damped(double omega0, double tau);

    /// Piecewise-linear profile through (times[i], values[i]). Times must be
    /// strictly increasing; |values| < 1 everywhere; the first and last
    /// samples must satisfy |f| ≤ 10⁻³·max|f| (the profile has to have died
    /// off inside the tabulated window).
    static DriveProfile tabulated(std::vector<double> times,
                                  std::vector<double> values);

    DriveKind kind() const { return kind_; }
    double omega0() const; ///< harmonic-damped only
    double tau() const;    ///< harmonic-damped only
    const std::vector<double>& times() const { return times_; }
    const std::vector<double>& values() const { return values_; }

    /// f(t); zero outside the tabulated window for tabulated profiles.
    double eval(double t) const;

    /// Integration support: |t| ≤ 20τ for harmonic-damped (the e^{−20}
    /// tail is far below every tolerance used here), the sample window
    /// for tabulated.
    double support_begin() const;
    double support_end() const;

    /// Time scale used for spectral cutoffs: τ for harmonic-damped,
    /// window/40 for tabulated (consistent with the 40τ harmonic support).
    double effective_tau() const;

private:
    DriveProfile() = default;

    DriveKind kind_ = DriveKind::harmonic_damped;
    double omega0_ = 0.0;
    double tau_ = 0.0;
    std::vector<double> times_;
    std::vector<double> values_;
};

/// Load a tabulated profile from a two-column CSV with the mandatory
/// header `time_s,f`. Throws io_error on unreadable files and
/// domain_error on malformed rows or non-increasing times.
DriveProfile load_drive_csv(const std::string& path);

/// Exact transform of the damped cosine (even, hence real):
/// F(ω) = τ/[1+(ω−ω₀)²τ²] + τ/[1+(ω+ω₀)²τ²], in seconds.
/// Throws domain_error for tabulated profiles.
double drive_ft_analytic(const DriveProfile& profile, double omega);

/// Tolerances for the numeric Fourier transform. Pure-relative by default;
/// |F| spans many decades so an absolute floor would mask tail values.
struct FtConfig {
    double rel_tol = 1e-7;
    double abs_tol = 0.0;
    int max_doublings = 10;
};

/// F(ω) = ∫ f(t)e^{iωt} dt by composite Simpson over the profile support,
/// panels doubled until two successive refinements agree to tolerance.
/// The initial panel count resolves the fastest oscillation present, and
/// panel edges are pinned to the |t| = 0 kink (harmonic-damped) or the
/// sample nodes (tabulated). Throws convergence_error when the refinement
/// limit is reached without agreement.
std::complex<double> drive_ft_numeric(const DriveProfile& profile, double omega,
                                      const FtConfig& cfg = {});

/// Evaluate the general spectral integral N(ω) above, in seconds (divide
/// by τ to compare with the closed form). The inner quadrature is seeded
/// at ω′ = |ω ± ω₀| ± k/τ, k ∈ {1, 10, 100}, bracketing the Lorentzian
/// spikes of |F|², and truncated at ω′ = 5ω₀ + 50/τ; it runs with
/// quad.rel_tol and no absolute floor. Throws domain_error on ω ≤ 0 and
/// convergence_error if the quadrature fails.
double spectral_density_general(double omega, const CircuitParams& params,
                                const DriveProfile& profile,
                                const QuadratureConfig& quad = {});

struct DeltaProbe {
    double omega_frac;
    double general_over_tau;
    double closed_form;
    double rel_deviation;
    bool pass;
};

struct DeltaApproxReport {
    double omega0_tau = 0.0;
    double tol = 0.0;
    std::vector<DeltaProbe> probes;
    bool all_pass = false;
};

/// Compare the general integral (per unit τ) against the closed form at
/// the given probe fractions Ω ∈ (0, 1), for a damped-cosine drive with
/// the given ω₀τ. Requires ω₀τ ≥ 10 (the delta approximation presumes
/// ω₀τ ≫ 1); out-of-tolerance probes are reported, not thrown.
DeltaApproxReport validate_delta_approx(const DimensionlessGroups& groups,
                                        double epsilon, double omega0_tau,
                                        std::span<const double> probe_fracs,
                                        double tol,
                                        const QuadratureConfig& quad = {});

} // namespace dce
