// acceptance.cpp — the acceptance gate: eight criteria, one verdict line
// each, exit 1 if any fails. Windows come from the frozen oracle values and
// the published magnitudes; everything here goes through the public API.
#include "dce/genform.hpp"
#include "dce/params.hpp"
#include "dce/quadrature.hpp"
#include "dce/spectrum.hpp"
#include "dce/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

using namespace dce;

namespace {

int g_failed = 0;

class Criterion {
public:
    void require(bool cond, const std::string& msg) {
        if (!cond) {
            if (!detail_.empty())
                detail_ += "; ";
            detail_ += msg;
            ok_ = false;
        }
    }
    void report(int index, const char* title) const {
        if (ok_)
            std::printf("[PASS] criterion %d: %s\n", index, title);
        else {
            std::printf("[FAIL] criterion %d: %s (%s)\n", index, title,
                        detail_.c_str());
            ++g_failed;
        }
    }

private:
    bool ok_ = true;
    std::string detail_;
};

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

bool in_window(double x, double lo, double hi) { return x >= lo && x <= hi; }

bool rel_close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

void run_criterion(int index, const char* title,
                   const std::function<void(Criterion&)>& body) {
    Criterion c;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("unhandled exception: ") + e.what());
    }
    c.report(index, title);
}

double grid_max(const Spectrum& s) {
    return *std::max_element(s.density.begin(), s.density.end());
}

} // namespace

int main() {
    run_criterion(1, "density enhancement fixed points", [](Criterion& c) {
        c.require(rho(1.0, 1.0) == 1.0, "rho(1,1) = " + num(rho(1.0, 1.0)));
        const double r53 = rho(1.0, 53.0);
        c.require(in_window(r53, 4.5e3, 5.2e3),
                  "rho(1,53) = " + num(r53) + " outside [4.5e3, 5.2e3]");
        const double r88 = rho(0.6, 88.0);
        c.require(in_window(r88, 1.25e4, 1.40e4),
                  "rho(0.6,88) = " + num(r88) + " outside [1.25e4, 1.40e4]");
    });

    run_criterion(2, "resonance locus of the density enhancement", [](Criterion& c) {
        const struct { double xi, center; } cases[] = {{1.0, 52.9}, {0.6, 88.2}};
        for (const auto& k : cases) {
            const double analytic = resonance_zeta(k.xi);
            const MaximizeResult m = maximize_over_zeta(
                k.xi, 0.5 * analytic, 1.5 * analytic, Quantity::rho);
            c.require(std::abs(m.zeta_star - k.center) <= 0.5,
                      "zeta*(xi=" + num(k.xi) + ") = " + num(m.zeta_star) +
                          " not within 0.5 of " + num(k.center));
            c.require(std::abs(m.zeta_star - analytic) <= 1e-6 * analytic,
                      "zeta*(xi=" + num(k.xi) + ") = " + num(m.zeta_star) +
                          " misses the analytic locus " + num(analytic));
        }
    });

    run_criterion(3, "zeta = 1 peak-height gain over zeta = 0", [](Criterion& c) {
        const double max1 = grid_max(spectrum_grid(groups_from(1.0, 1.0), 0.25, 20001));
        const double max0 = grid_max(spectrum_grid(groups_from(1.0, 0.0), 0.25, 20001));
        const double gain = max1 / max0;
        c.require(in_window(gain, 1.078 - 0.005, 1.078 + 0.005),
                  "height gain = " + num(gain) + " outside 1.078 +/- 0.005");
    });

    run_criterion(4, "rate enhancements at zeta = 12 and 15", [](Criterion& c) {
        const double r12 = rate_ratio(1.0, 12.0);
        c.require(in_window(r12, 3.7, 4.2),
                  "rate_ratio(1,12) = " + num(r12) + " outside [3.7, 4.2]");
        const double r15 = rate_ratio(1.0, 15.0);
        c.require(in_window(r15, 6.3, 7.2),
                  "rate_ratio(1,15) = " + num(r15) + " outside [6.3, 7.2]");
    });

    run_criterion(5, "maximal rate enhancement over zeta", [](Criterion& c) {
        const struct { double xi, lo, hi; } cases[] = {{1.0, 2.4e2, 3.6e2},
                                                       {0.6, 4.0e2, 6.0e2}};
        for (const auto& k : cases) {
            const double seed = resonance_zeta(k.xi);
            const MaximizeResult m = maximize_over_zeta(
                k.xi, 0.5 * seed, 1.5 * seed, Quantity::rate_ratio);
            c.require(in_window(m.value, k.lo, k.hi),
                      "max rate_ratio(xi=" + num(k.xi) + ") = " + num(m.value) +
                          " outside [" + num(k.lo) + ", " + num(k.hi) + "]");
        }
    });

    run_criterion(6, "spectrum shape ladder", [](Criterion& c) {
        for (double zeta : {0.0, 1.0}) {
            const PeakReport r = classify_spectrum(groups_from(1.0, zeta), 0.25, 2001);
            c.require(r.n_peaks == 1 &&
                          std::abs(r.peak_positions[0] - 0.5) <= 1e-3,
                      "zeta=" + num(zeta) + ": expected one peak at 1/2");
        }
        PeakReport fifteen;
        for (double zeta : {12.0, 15.0}) {
            const PeakReport r = classify_spectrum(groups_from(1.0, zeta), 0.25, 2001);
            c.require(r.n_peaks == 2,
                      "zeta=" + num(zeta) + ": expected two peaks, got " +
                          num(r.n_peaks));
            if (r.n_peaks == 2)
                c.require(std::abs(r.peak_positions[0] + r.peak_positions[1] - 1.0) <=
                              1e-3,
                          "zeta=" + num(zeta) + ": peaks not symmetric about 1/2");
            if (zeta == 15.0)
                fifteen = r;
        }
        const PeakReport res = classify_spectrum(groups_from(1.0, 53.0), 0.25, 2001);
        c.require(res.shape == SpectrumShape::sharp_resonance,
                  "zeta=53: expected sharp-resonance, got " + to_string(res.shape));
        if (res.n_peaks >= 1 && fifteen.n_peaks == 2) {
            const double ratio =
                res.peak_heights[0] /
                std::max(fifteen.peak_heights[0], fifteen.peak_heights[1]);
            c.require(in_window(ratio, 4e2, 2e3),
                      "resonant/two-peak height ratio = " + num(ratio) +
                          " outside [4e2, 2e3]");
        }
    });

    run_criterion(7, "spectral-density property suites", [](Criterion& c) {
        std::mt19937 rng(99u);
        std::uniform_real_distribution<double> om_dist(0.0, 1.0);
        std::uniform_real_distribution<double> xi_dist(0.5, 1.5);
        std::uniform_real_distribution<double> zeta_dist(0.0, 120.0);

        bool symmetric = true;
        for (int i = 0; i < 1000; ++i) {
            const DimensionlessGroups g = groups_from(xi_dist(rng), zeta_dist(rng));
            const double om = om_dist(rng);
            const double a = spectral_density(om, g, 0.25);
            const double b = spectral_density(1.0 - om, g, 0.25);
            if (std::abs(a - b) > 1e-10 * std::max(std::abs(a), std::abs(b)))
                symmetric = false;
        }
        c.require(symmetric, "reflection symmetry beyond 1e-10 relative");

        bool cut = true;
        const DimensionlessGroups gref = groups_from(1.0, 12.0);
        for (double om : {1.0, 1.0 + 1e-12, 1.2, 3.0, 50.0})
            cut = cut && spectral_density(om, gref, 0.25) == 0.0;
        for (int i = 0; i < 100; ++i)
            cut = cut && spectral_density(1.0 + 49.0 * om_dist(rng), gref, 0.25) == 0.0;
        c.require(cut, "density not exactly zero at or above the drive frequency");

        const double g_exp =
            kReference.gamma0_exp * kReference.omega0 / kReference.v;
        bool reduces = true;
        for (int i = 0; i < 500; ++i) {
            const double xi = xi_dist(rng);
            const double om = om_dist(rng);
            const double g = xi * g_exp;
            const double expected = 0.25 * 0.25 * g * g / (2.0 * std::numbers::pi) *
                                    om * (1.0 - om) /
                                    ((1.0 + g * g * om * om) *
                                     (1.0 + g * g * (1.0 - om) * (1.0 - om)));
            if (!rel_close(spectral_density(om, groups_from(xi, 0.0), 0.25), expected,
                           1e-12))
                reduces = false;
        }
        c.require(reduces, "zeta = 0 does not reduce to the linear-boundary form");

        bool scales = true;
        for (const auto& [xi, zeta] :
             {std::pair{1.0, 1.0}, std::pair{1.0, 12.0}, std::pair{0.8, 40.0}}) {
            const DimensionlessGroups g = groups_from(xi, zeta);
            if (!rel_close(band_integral(g, 0.5) / band_integral(g, 0.25), 4.0, 1e-12))
                scales = false;
        }
        c.require(scales, "rate does not scale as epsilon^2");

        bool agree = true;
        double worst = 0.0;
        for (double xi : linspace(0.6, 1.4, 5))
            for (double zeta : {0.0, 1.0, 12.0, 15.0, 53.0}) {
                const DimensionlessGroups g = groups_from(xi, zeta);
                const double adaptive = band_integral(g, 0.25);
                const double trapezoid = integrate_trapezoid(
                    [&](double om) { return spectral_density(om, g, 0.25); }, 0.0,
                    1.0, 100000);
                const double rel = std::abs(adaptive - trapezoid) / adaptive;
                worst = std::max(worst, rel);
                if (rel > 1e-5)
                    agree = false;
            }
        c.require(agree, "adaptive vs trapezoid disagreement up to " + num(worst));
    });

    run_criterion(8, "delta-limit validation of the general drive form",
                  [](Criterion& c) {
        const std::array<double, 3> probes{0.25, 0.5, 0.75};
        const std::array<double, 1> half{0.5};
        for (double zeta : {0.0, 1.0, 12.0}) {
            const DimensionlessGroups g = groups_from(1.0, zeta);
            const DeltaApproxReport r =
                validate_delta_approx(g, 0.25, 5000.0, probes, 0.02);
            c.require(r.all_pass,
                      "zeta=" + num(zeta) + ": general/closed mismatch above 2%");
            double prev = 1e9;
            for (double t : {100.0, 200.0, 400.0, 800.0, 1600.0}) {
                const DeltaApproxReport step =
                    validate_delta_approx(g, 0.25, t, half, 1.0);
                const double dev = step.probes[0].rel_deviation;
                c.require(dev < prev, "zeta=" + num(zeta) +
                                          ": deviation not decreasing at omega0*tau=" +
                                          num(t));
                prev = dev;
            }
        }
    });

    if (g_failed == 0) {
        std::printf("acceptance: all 8 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d of 8 criteria FAILED\n", g_failed);
    return 1;
}
