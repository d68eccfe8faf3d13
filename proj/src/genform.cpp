#include "dce/genform.hpp"

#include "dce/errors.hpp"
#include "dce/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace dce {

DriveProfile DriveProfile::harmonic_damped(double omega0, double tau) {
    if (!(omega0 > 0.0))
        throw domain_error("DriveProfile: omega0 must be > 0");
    if (!(tau > 0.0))
        throw domain_error("DriveProfile: tau must be > 0");
    DriveProfile p;
    p.kind_ = DriveKind::harmonic_damped;
    p.omega0_ = omega0;
    p.tau_ = tau;
    return p;
}

DriveProfile DriveProfile::tabulated(std::vector<double> times,
                                     std::vector<double> values) {
    if (times.size() != values.size())
        throw domain_error("DriveProfile: times and values sizes differ");
    if (times.size() < 2)
        throw domain_error("DriveProfile: need at least two samples");
    for (std::size_t i = 0; i + 1 < times.size(); ++i)
        if (!(times[i] < times[i + 1]))
            throw domain_error("DriveProfile: sample times must be strictly increasing");

    double peak = 0.0;
    for (double f : values) {
        if (!(std::abs(f) < 1.0))
            throw domain_error("DriveProfile: |f| must stay below 1");
        peak = std::max(peak, std::abs(f));
    }
    if (std::abs(values.front()) > 1e-3 * peak || std::abs(values.back()) > 1e-3 * peak)
        throw domain_error("DriveProfile: profile must decay at both ends "
                           "(|f| <= 1e-3 * max|f| at the first and last sample)");

    DriveProfile p;
    p.kind_ = DriveKind::tabulated;
    p.times_ = std::move(times);
    p.values_ = std::move(values);
    return p;
}

double DriveProfile::omega0() const {
    if (kind_ != DriveKind::harmonic_damped)
        throw domain_error("DriveProfile: omega0 is defined only for harmonic-damped profiles");
    return omega0_;
}

double DriveProfile::tau() const {
    if (kind_ != DriveKind::harmonic_damped)
        throw domain_error("DriveProfile: tau is defined only for harmonic-damped profiles");
    return tau_;
}

double DriveProfile::eval(double t) const {
    if (kind_ == DriveKind::harmonic_damped)
        return std::cos(omega0_ * t) * std::exp(-std::abs(t) / tau_);

    if (t <= times_.front() || t >= times_.back()) {
        if (t == times_.front()) return values_.front();
        if (t == times_.back()) return values_.back();
        return 0.0;
    }
    const auto it = std::upper_bound(times_.begin(), times_.end(), t);
    const std::size_t hi = static_cast<std::size_t>(it - times_.begin());
    const std::size_t lo = hi - 1;
    const double w = (t - times_[lo]) / (times_[hi] - times_[lo]);
    return values_[lo] + w * (values_[hi] - values_[lo]);
}

double DriveProfile::support_begin() const {
    return kind_ == DriveKind::harmonic_damped ? -20.0 * tau_ : times_.front();
}

double DriveProfile::support_end() const {
    return kind_ == DriveKind::harmonic_damped ? 20.0 * tau_ : times_.back();
}

double DriveProfile::effective_tau() const {
    return kind_ == DriveKind::harmonic_damped
               ? tau_
               : (times_.back() - times_.front()) / 40.0;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

DriveProfile load_drive_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("load_drive_csv: cannot open " + path);

    std::string line;
    if (!std::getline(in, line))
        throw domain_error("load_drive_csv: empty file " + path);
    if (trim(line) != "time_s,f")
        throw domain_error("load_drive_csv: expected header `time_s,f`, got `" + trim(line) + "`");

    std::vector<double> times, values;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty())
            continue;
        std::istringstream row(line);
        std::string t_str, f_str, extra;
        if (!std::getline(row, t_str, ',') || !std::getline(row, f_str, ',') ||
            std::getline(row, extra, ','))
            throw domain_error("load_drive_csv: expected two columns at line " +
                               std::to_string(lineno));
        try {
            std::size_t pos = 0;
            const double t = std::stod(trim(t_str), &pos);
            if (pos != trim(t_str).size()) throw std::invalid_argument("trailing");
            pos = 0;
            const double f = std::stod(trim(f_str), &pos);
            if (pos != trim(f_str).size()) throw std::invalid_argument("trailing");
            times.push_back(t);
            values.push_back(f);
        } catch (const std::exception&) {
            throw domain_error("load_drive_csv: malformed number at line " +
                               std::to_string(lineno));
        }
    }
    return DriveProfile::tabulated(std::move(times), std::move(values));
}

double drive_ft_analytic(const DriveProfile& profile, double omega) {
    if (profile.kind() != DriveKind::harmonic_damped)
        throw domain_error("drive_ft_analytic: closed form exists only for "
                           "harmonic-damped profiles");
    const double tau = profile.tau();
    const double dm = (omega - profile.omega0()) * tau;
    const double dp = (omega + profile.omega0()) * tau;
    return tau / (1.0 + dm * dm) + tau / (1.0 + dp * dp);
}

namespace {

// Composite Simpson of f(t)·e^{iωt} over [a, b] with n panels (n even).
template <typename F>
std::complex<double> simpson_ft(const F& f, double omega, double a, double b, long n) {
    const double h = (b - a) / static_cast<double>(n);
    auto term = [&](double t) {
        return f(t) * std::complex<double>(std::cos(omega * t), std::sin(omega * t));
    };
    std::complex<double> sum = term(a) + term(b);
    std::complex<double> odd = 0.0, even = 0.0;
    for (long i = 1; i < n; i += 2)
        odd += term(a + h * static_cast<double>(i));
    for (long i = 2; i < n; i += 2)
        even += term(a + h * static_cast<double>(i));
    return (sum + 4.0 * odd + 2.0 * even) * (h / 3.0);
}

long next_pow2(double x) {
    long n = 4;
    while (static_cast<double>(n) < x && n < (1L << 30))
        n <<= 1;
    return n;
}

} // namespace

std::complex<double> drive_ft_numeric(const DriveProfile& profile, double omega,
                                      const FtConfig& cfg) {
    // Integration cells: pieces on which the integrand is smooth.
    std::vector<double> cells;
    double osc_freq = std::abs(omega); // fastest angular frequency present
    if (profile.kind() == DriveKind::harmonic_damped) {
        cells = {profile.support_begin(), 0.0, profile.support_end()};
        osc_freq += profile.omega0();
    } else {
        cells = profile.times();
    }

    auto pass = [&](int doublings) {
        std::complex<double> total = 0.0;
        for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
            const double a = cells[i], b = cells[i + 1];
            // ≥ 8 points per oscillation period before any refinement.
            const double need = 8.0 * osc_freq * (b - a) / (2.0 * std::numbers::pi);
            const long n = next_pow2(std::max(4.0, need)) << doublings;
            total += simpson_ft([&](double t) { return profile.eval(t); }, omega, a, b, n);
        }
        return total;
    };

    std::complex<double> prev = pass(0);
    for (int d = 1; d <= cfg.max_doublings; ++d) {
        const std::complex<double> cur = pass(d);
        const double diff = std::abs(cur - prev);
        if (diff <= std::max(cfg.rel_tol * std::abs(cur), cfg.abs_tol))
            return cur;
        prev = cur;
    }
    throw convergence_error("drive_ft_numeric: refinement limit reached without "
                            "successive estimates agreeing to tolerance");
}

namespace {

// |F(ω)|², dispatching to the closed form when one exists.
double ft_squared(const DriveProfile& profile, double omega) {
    if (profile.kind() == DriveKind::harmonic_damped) {
        const double f = drive_ft_analytic(profile, omega);
        return f * f;
    }
    return std::norm(drive_ft_numeric(profile, omega));
}

} // namespace

double spectral_density_general(double omega, const CircuitParams& params,
                                const DriveProfile& profile,
                                const QuadratureConfig& quad) {
    if (!(omega > 0.0))
        throw domain_error("spectral_density_general: omega must be > 0");

    const DimensionlessGroups groups = to_groups(params);
    const double omega0 = params.omega0;
    const double w_frac = omega / omega0;
    const double big_t = omega0 * profile.effective_tau();
    const double u_cut = 5.0 + 50.0 / big_t;

    // Panel edges straddling the Lorentzian spikes of |F(ω+ω′)|², which sit
    // at ω′ = |ω ± ω₀| with width 1/τ and are far narrower than the band.
    std::vector<double> pts{0.0, u_cut};
    for (double center : {std::abs(w_frac - 1.0), std::abs(w_frac + 1.0)}) {
        for (double k : {1.0, 10.0, 100.0}) {
            for (double s : {-1.0, 1.0}) {
                const double p = center + s * k / big_t;
                if (p > 0.0 && p < u_cut)
                    pts.push_back(p);
            }
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    auto integrand = [&](double u) {
        return u * ft_squared(profile, (w_frac + u) * omega0) / denominator(u, groups);
    };

    // Pure-relative tolerance: the integral value scales as τ², far below
    // any fixed absolute floor.
    QuadratureConfig inner = quad;
    inner.abs_tol = 0.0;
    const IntegralResult inner_result = integrate_adaptive(integrand, pts, inner);
    if (!inner_result.converged)
        throw convergence_error("spectral_density_general: inner quadrature did not converge");

    const double g2 = groups.g * groups.g;
    const double pi = std::numbers::pi;
    const double eps2 = params.epsilon * params.epsilon;
    return (eps2 * g2 / (pi * pi)) * w_frac * omega0 * inner_result.value /
           denominator(w_frac, groups);
}

DeltaApproxReport validate_delta_approx(const DimensionlessGroups& groups,
                                        double epsilon, double omega0_tau,
                                        std::span<const double> probe_fracs,
                                        double tol,
                                        const QuadratureConfig& quad) {
    if (!(omega0_tau >= 10.0))
        throw domain_error("validate_delta_approx: omega0_tau must be >= 10 "
                           "(the delta approximation presumes omega0*tau >> 1)");
    for (double w : probe_fracs)
        if (!(w > 0.0 && w < 1.0))
            throw domain_error("validate_delta_approx: probe fractions must lie in (0, 1)");
    if (!(tol > 0.0))
        throw domain_error("validate_delta_approx: tol must be > 0");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw domain_error("validate_delta_approx: epsilon must lie in (0, 1)");

    CircuitParams params = from_dimensionless(groups.xi, groups.zeta);
    params.epsilon = epsilon;
    const double tau = omega0_tau / params.omega0;
    const DriveProfile profile = DriveProfile::harmonic_damped(params.omega0, tau);

    DeltaApproxReport report;
    report.omega0_tau = omega0_tau;
    report.tol = tol;
    report.all_pass = true;
    for (double w_frac : probe_fracs) {
        const double general =
            spectral_density_general(w_frac * params.omega0, params, profile, quad) / tau;
        const double closed = spectral_density(w_frac, groups, epsilon);
        const double rel = std::abs(general / closed - 1.0);
        const bool pass = rel <= tol;
        report.probes.push_back(DeltaProbe{w_frac, general, closed, rel, pass});
        report.all_pass = report.all_pass && pass;
    }
    return report;
}

} // namespace dce
