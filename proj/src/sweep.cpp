#include "dce/sweep.hpp"

#include "dce/errors.hpp"
#include "dce/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace dce {

std::string to_string(Quantity q) {
    return q == Quantity::rho ? "rho" : "rate_ratio";
}

std::string to_string(SpectrumShape s) {
    switch (s) {
        case SpectrumShape::parabolic: return "parabolic";
        case SpectrumShape::two_peak: return "two-peak";
        case SpectrumShape::sharp_resonance: return "sharp-resonance";
    }
    return "parabolic";
}

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 1)
        throw domain_error("linspace: need n >= 1");
    if (n == 1) {
        if (lo != hi)
            throw domain_error("linspace: n = 1 requires lo = hi");
        return {lo};
    }
    std::vector<double> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i)
        out.push_back(i == n - 1 ? hi
                                 : lo + (hi - lo) * static_cast<double>(i) /
                                            static_cast<double>(n - 1));
    return out;
}

namespace {

double evaluate_quantity(Quantity q, double xi, double zeta,
                         const QuadratureConfig& cfg) {
    return q == Quantity::rho ? rho(xi, zeta) : rate_ratio(xi, zeta, cfg);
}

unsigned sweep_thread_cap() {
    unsigned cap = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("DCE_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && parsed >= 1)
            cap = static_cast<unsigned>(parsed);
    }
    return cap;
}

} // namespace

SweepResult sweep_grid(const std::vector<double>& xi_grid,
                       const std::vector<double>& zeta_grid,
                       Quantity quantity, const QuadratureConfig& cfg) {
    if (xi_grid.empty() || zeta_grid.empty())
        throw domain_error("sweep_grid: grids must be non-empty");
    for (double xi : xi_grid)
        if (!(xi > 0.0))
            throw domain_error("sweep_grid: all xi values must be > 0");
    for (double zeta : zeta_grid)
        if (!(zeta >= 0.0))
            throw domain_error("sweep_grid: all zeta values must be >= 0");

    SweepResult result;
    result.xi_grid = xi_grid;
    result.zeta_grid = zeta_grid;
    result.quantity = quantity;
    result.values.assign(xi_grid.size() * zeta_grid.size(), 0.0);

    const std::size_t n_cells = result.values.size();
    const unsigned n_threads =
        static_cast<unsigned>(std::min<std::size_t>(sweep_thread_cap(), n_cells));

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::string first_error;

    auto worker = [&] {
        for (;;) {
            const std::size_t cell = next.fetch_add(1);
            if (cell >= n_cells)
                return;
            const std::size_t i = cell / zeta_grid.size();
            const std::size_t j = cell % zeta_grid.size();
            try {
                result.values[cell] =
                    evaluate_quantity(quantity, xi_grid[i], zeta_grid[j], cfg);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (first_error.empty())
                    first_error = "sweep_grid: cell (xi=" + std::to_string(xi_grid[i]) +
                                  ", zeta=" + std::to_string(zeta_grid[j]) +
                                  ") failed: " + e.what();
                next.store(n_cells); // drain the remaining work
                return;
            }
        }
    };

    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    if (!first_error.empty())
        throw convergence_error(first_error);
    return result;
}

MaximizeResult maximize_over_zeta(double xi, double zeta_lo, double zeta_hi,
                                  Quantity quantity, const QuadratureConfig& cfg,
                                  double tol) {
    if (!(xi > 0.0))
        throw domain_error("maximize_over_zeta: xi must be > 0");
    if (!(zeta_lo >= 0.0) || !(zeta_lo < zeta_hi))
        throw domain_error("maximize_over_zeta: need 0 <= zeta_lo < zeta_hi");
    if (!(tol > 0.0))
        throw domain_error("maximize_over_zeta: tol must be > 0");

    auto f = [&](double zeta) { return evaluate_quantity(quantity, xi, zeta, cfg); };

    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = zeta_lo, b = zeta_hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }

    double best_x = fc > fd ? c : d;
    double best_f = std::max(fc, fd);

    // Parabolic vertex through (a, c|d, b); near the maximum all swept
    // quantities are smooth, so this recovers several extra digits beyond
    // the golden-section bracket width.
    {
        const double x1 = a, x2 = best_x, x3 = b;
        const double f1 = f(x1), f2 = best_f, f3 = f(x3);
        const double num = (x2 - x1) * (x2 - x1) * (f2 - f3) -
                           (x2 - x3) * (x2 - x3) * (f2 - f1);
        const double den = (x2 - x1) * (f2 - f3) - (x2 - x3) * (f2 - f1);
        if (den != 0.0) {
            const double vertex = x2 - 0.5 * num / den;
            if (vertex > zeta_lo && vertex < zeta_hi) {
                const double fv = f(vertex);
                if (fv >= best_f) {
                    best_x = vertex;
                    best_f = fv;
                }
            }
        }
    }

    const double f_lo = f(zeta_lo), f_hi = f(zeta_hi);
    if (f_lo >= best_f || f_hi >= best_f || best_x - zeta_lo <= tol ||
        zeta_hi - best_x <= tol)
        throw bracket_error("maximize_over_zeta: maximum sits at a bracket endpoint "
                            "(bracket [" + std::to_string(zeta_lo) + ", " +
                            std::to_string(zeta_hi) + "] does not contain an "
                            "interior maximum)");

    return MaximizeResult{best_x, best_f};
}

PeakReport classify_spectrum(const DimensionlessGroups& groups, double epsilon,
                             int n_points, double sharp_fwhm) {
    if (n_points < 201)
        throw domain_error("classify_spectrum: need n_points >= 201");

    const Spectrum s = spectrum_grid(groups, epsilon, n_points);
    const auto& y = s.density;
    const auto& x = s.omega_frac;
    const std::size_t n = y.size();

    PeakReport report;

    // Runs of exactly equal samples are one candidate at the run midpoint;
    // the symmetric grid makes exact ties at Ω = 1/2 possible.
    std::size_t i = 1;
    while (i + 1 < n) {
        std::size_t j = i;
        while (j + 1 < n && y[j + 1] == y[i])
            ++j;
        if (j + 1 < n && y[i - 1] < y[i] && y[j + 1] < y[i]) {
            report.peak_positions.push_back(0.5 * (x[i] + x[j]));
            report.peak_heights.push_back(y[i]);
        }
        i = j + 1;
    }
    report.n_peaks = static_cast<int>(report.peak_positions.size());

    if (report.n_peaks < 1 || report.n_peaks > 2)
        throw degenerate_grid_error("classify_spectrum: found " +
                                    std::to_string(report.n_peaks) +
                                    " interior maxima; cannot classify");

    // FWHM of the tallest peak, with linear interpolation to the
    // half-height crossings (the endpoints are exact zeros, so both
    // crossings exist).
    const std::size_t tallest =
        report.peak_heights.size() == 2 && report.peak_heights[1] > report.peak_heights[0]
            ? 1
            : 0;
    const double half = 0.5 * report.peak_heights[tallest];
    std::size_t peak_index = 0;
    for (std::size_t k = 0; k < n; ++k)
        if (y[k] == report.peak_heights[tallest]) {
            peak_index = k;
            break;
        }
    double left = x.front();
    for (std::size_t k = peak_index; k-- > 0;) {
        if (y[k] < half) {
            const double w = (half - y[k]) / (y[k + 1] - y[k]);
            left = x[k] + w * (x[k + 1] - x[k]);
            break;
        }
    }
    double right = x.back();
    for (std::size_t k = peak_index + 1; k < n; ++k) {
        if (y[k] < half) {
            const double w = (y[k - 1] - half) / (y[k - 1] - y[k]);
            right = x[k - 1] + w * (x[k] - x[k - 1]);
            break;
        }
    }
    report.fwhm = right - left;

    if (report.n_peaks == 2)
        report.shape = SpectrumShape::two_peak;
    else if (report.fwhm < sharp_fwhm)
        report.shape = SpectrumShape::sharp_resonance;
    else
        report.shape = SpectrumShape::parabolic;
    return report;
}

} // namespace dce
