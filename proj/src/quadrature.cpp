#include "dce/quadrature.hpp"

#include "dce/errors.hpp"
#include "dce/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <queue>
#include <vector>

namespace dce {

namespace {

// Gauss–Kronrod 7–15 nodes and weights on [-1, 1] (symmetric; only the
// non-negative abscissae are stored). Standard QUADPACK constants.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
    double a, b;
    double value;
    double error;
};

// 15-point Kronrod estimate with the embedded 7-point Gauss value as the
// error reference. Throws on NaN from f.
PanelEstimate gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(center - half * kXgk[i]);
        fv[14 - i] = f(center + half * kXgk[i]);
    }
    fv[7] = f(center);
    for (double y : fv)
        if (std::isnan(y))
            throw convergence_error("integrate_adaptive: integrand returned NaN");

    double kronrod = kWgk[7] * fv[7];
    double gauss = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        kronrod += kWgk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1)
            gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
    }
    kronrod *= half;
    gauss *= half;
    return PanelEstimate{a, b, kronrod, std::abs(kronrod - gauss)};
}

struct WorstFirst {
    bool operator()(const PanelEstimate& x, const PanelEstimate& y) const {
        return x.error < y.error;
    }
};

} // namespace

IntegralResult integrate_adaptive(const std::function<double(double)>& f,
                                  std::span<const double> breakpoints,
                                  const QuadratureConfig& cfg) {
    if (breakpoints.size() < 2)
        throw domain_error("integrate_adaptive: need at least two breakpoints");
    if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol >= 0.0) || cfg.max_subdivisions < 1)
        throw domain_error("integrate_adaptive: invalid QuadratureConfig");
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw domain_error("integrate_adaptive: breakpoints must be strictly increasing");

    std::priority_queue<PanelEstimate, std::vector<PanelEstimate>, WorstFirst> panels;
    double value = 0.0;
    double error = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        PanelEstimate p = gk15(f, breakpoints[i], breakpoints[i + 1]);
        value += p.value;
        error += p.error;
        panels.push(p);
    }

    int subdivisions = 0;
    auto tolerance = [&] { return std::max(cfg.rel_tol * std::abs(value), cfg.abs_tol); };

    while (error > tolerance() && subdivisions < cfg.max_subdivisions) {
        PanelEstimate worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Panel narrower than machine spacing; cannot refine further.
            panels.push(worst);
            break;
        }
        PanelEstimate left = gk15(f, worst.a, mid);
        PanelEstimate right = gk15(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++subdivisions;
    }

    IntegralResult r;
    r.value = value;
    r.error_estimate = std::max(error, 0.0);
    r.subdivisions_used = subdivisions;
    r.converged = r.error_estimate <= tolerance();
    return r;
}

IntegralResult integrate_adaptive(const std::function<double(double)>& f,
                                  double a, double b,
                                  const QuadratureConfig& cfg) {
    if (!(a < b))
        throw domain_error("integrate_adaptive: need a < b");
    const double pts[2] = {a, b};
    return integrate_adaptive(f, pts, cfg);
}

double integrate_trapezoid(const std::function<double(double)>& f,
                           double a, double b, long n_panels) {
    if (!(a < b))
        throw domain_error("integrate_trapezoid: need a < b");
    if (n_panels < 1)
        throw domain_error("integrate_trapezoid: need n_panels >= 1");

    const double h = (b - a) / static_cast<double>(n_panels);
    double sum = 0.5 * (f(a) + f(b));
    for (long i = 1; i < n_panels; ++i)
        sum += f(a + h * static_cast<double>(i));
    if (std::isnan(sum))
        throw convergence_error("integrate_trapezoid: integrand returned NaN");
    return sum * h;
}

namespace {

// Panel edges for the band integral: [0, 1] plus, when 1 + A·Ω² has an
// in-band root Ω_r, edges at Ω_r ± {1,3,10}·|g|Ω_r and at the mirrored
// dip of D(1−Ω) around 1−Ω_r.
std::vector<double> band_breakpoints(const DimensionlessGroups& groups) {
    std::vector<double> pts{0.0, 1.0};
    if (groups.A < 0.0) {
        const double root = 1.0 / std::sqrt(-groups.A);
        if (root < 1.0) {
            const double width = std::abs(groups.g) * root;
            for (double k : {1.0, 3.0, 10.0}) {
                for (double s : {-1.0, 1.0}) {
                    for (double center : {root, 1.0 - root}) {
                        const double p = center + s * k * width;
                        if (p > 0.0 && p < 1.0)
                            pts.push_back(p);
                    }
                }
            }
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

} // namespace

double band_integral(const DimensionlessGroups& groups, double epsilon,
                     const QuadratureConfig& cfg) {
    const auto pts = band_breakpoints(groups);
    auto integrand = [&](double omega_frac) {
        return spectral_density(omega_frac, groups, epsilon);
    };
    IntegralResult r = integrate_adaptive(integrand, pts, cfg);
    if (!r.converged)
        throw convergence_error("band_integral: quadrature did not converge (error estimate " +
                                std::to_string(r.error_estimate) + ")");
    return r.value;
}

double creation_rate(const DimensionlessGroups& groups, double epsilon,
                     const QuadratureConfig& cfg, const ReferencePoint& ref) {
    return ref.omega0 * band_integral(groups, epsilon, cfg);
}

namespace {
std::once_flag g_baseline_once;
double g_baseline_rate = 0.0;
} // namespace

double rate_ratio(double xi, double zeta, const QuadratureConfig& cfg) {
    if (!(xi > 0.0))
        throw domain_error("rate_ratio: xi must be > 0");
    if (!(zeta >= 0.0))
        throw domain_error("rate_ratio: zeta must be >= 0");
    std::call_once(g_baseline_once, [&] {
        g_baseline_rate = creation_rate(groups_from(1.0, 1.0), kReference.epsilon, cfg);
    });
    const double rate = creation_rate(groups_from(xi, zeta), kReference.epsilon, cfg);
    return rate / g_baseline_rate;
}

} // namespace dce
