#include "dce/params.hpp"

#include "dce/errors.hpp"

#include <cmath>

namespace dce {

double reference_A(const ReferencePoint& ref) {
    return ref.gamma0_exp * ref.alpha0_exp * ref.omega0 * ref.omega0;
}

double reference_g(const ReferencePoint& ref) {
    return ref.gamma0_exp * ref.omega0 / ref.v;
}

CircuitParams from_dimensionless(double xi, double zeta, const ReferencePoint& ref) {
    if (!(xi > 0.0))
        throw domain_error("from_dimensionless: xi must be > 0 (got " + std::to_string(xi) + ")");
    if (!(zeta >= 0.0))
        throw domain_error("from_dimensionless: zeta must be >= 0 (got " + std::to_string(zeta) + ")");
    return CircuitParams{
        xi * ref.gamma0_exp,
        zeta * ref.alpha0_exp,
        ref.omega0,
        ref.epsilon,
        ref.v,
    };
}

DimensionlessGroups to_groups(const CircuitParams& p, const ReferencePoint& ref) {
    return DimensionlessGroups{
        p.gamma0 / ref.gamma0_exp,
        p.alpha0 / ref.alpha0_exp,
        p.gamma0 * p.alpha0 * p.omega0 * p.omega0,
        p.gamma0 * p.omega0 / p.v,
    };
}

DimensionlessGroups groups_from(double xi, double zeta, const ReferencePoint& ref) {
    return to_groups(from_dimensionless(xi, zeta, ref), ref);
}

ValidationReport validate(const CircuitParams& p) {
    ValidationReport r;
    if (!(p.omega0 > 0.0))
        r.violations.push_back("omega0 must be positive");
    if (!(p.v > 0.0))
        r.violations.push_back("v must be positive");
    if (!(p.alpha0 >= 0.0))
        r.violations.push_back("alpha0 must be non-negative");
    if (!(p.epsilon > 0.0 && p.epsilon < 1.0))
        r.violations.push_back("modulation depth out of perturbative range (need 0 < epsilon < 1)");
    if (p.gamma0 == 0.0)
        r.violations.push_back("gamma0 = 0 makes g = 0; an in-band root of 1+A*Omega^2 "
                               "would be a true pole of the spectral density");
    if (p.gamma0 * p.alpha0 > 0.0)
        r.advisories.push_back("no resonance: gamma0*alpha0 > 0, so 1+gamma0*alpha0*omega^2 "
                               "never vanishes");
    return r;
}

} // namespace dce
