#include "dce/spectrum.hpp"

#include "dce/errors.hpp"

#include <cmath>
#include <numbers>

namespace dce {

double denominator(double omega_frac, const DimensionlessGroups& groups) {
    const double o2 = omega_frac * omega_frac;
    const double lc = 1.0 + groups.A * o2;
    return lc * lc + groups.g * groups.g * o2;
}

double spectral_density(double omega_frac, const DimensionlessGroups& groups,
                        double epsilon) {
    if (omega_frac <= 0.0 || omega_frac >= 1.0)
        return 0.0;
    const double g2 = groups.g * groups.g;
    const double prefactor = epsilon * epsilon * g2 / (2.0 * std::numbers::pi);
    return prefactor * omega_frac * (1.0 - omega_frac) /
           (denominator(omega_frac, groups) * denominator(1.0 - omega_frac, groups));
}

Spectrum spectrum_grid(const DimensionlessGroups& groups, double epsilon,
                       int n_points) {
    if (n_points < 3)
        throw domain_error("spectrum_grid: need n_points >= 3");

    Spectrum s;
    s.groups = groups;
    s.epsilon = epsilon;
    s.omega_frac.reserve(n_points);
    s.density.reserve(n_points);
    const double step = 1.0 / static_cast<double>(n_points - 1);
    for (int i = 0; i < n_points; ++i) {
        const double omega_frac = (i == n_points - 1) ? 1.0 : step * static_cast<double>(i);
        s.omega_frac.push_back(omega_frac);
        s.density.push_back(spectral_density(omega_frac, groups, epsilon));
    }
    return s;
}

double rho(double xi, double zeta, const ReferencePoint& ref) {
    if (!(xi > 0.0))
        throw domain_error("rho: xi must be > 0");
    if (!(zeta >= 0.0))
        throw domain_error("rho: zeta must be >= 0");
    const double d_ref = denominator(0.5, groups_from(1.0, 1.0, ref));
    const double d = denominator(0.5, groups_from(xi, zeta, ref));
    const double q = d_ref / d;
    return xi * xi * q * q;
}

double resonance_zeta(double xi, const ReferencePoint& ref) {
    if (!(xi > 0.0))
        throw domain_error("resonance_zeta: xi must be > 0");
    const double a_exp = reference_A(ref);
    if (!(a_exp < 0.0))
        throw domain_error("resonance_zeta: reference A_exp >= 0, no resonance exists");
    return -4.0 / (xi * a_exp);
}

} // namespace dce
