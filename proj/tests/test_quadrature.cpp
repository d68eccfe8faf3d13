// test_quadrature.cpp — adaptive integrator, trapezoid oracle, rate integral.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dce/errors.hpp"
#include "dce/params.hpp"
#include "dce/quadrature.hpp"
#include "dce/spectrum.hpp"
#include "frozen.hpp"

#include <array>
#include <cmath>
#include <limits>

using namespace dce;
using frozen::rel_close;

TEST_CASE("polynomials: x^2 over [0,1]") {
    const IntegralResult r = integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0);
    CHECK(r.converged);
    CHECK(std::abs(r.value - 1.0 / 3.0) < 1e-10);
    CHECK(r.error_estimate >= 0.0);
}

TEST_CASE("narrow Lorentzian stresses peak refinement") {
    const IntegralResult r = integrate_adaptive(
        [](double x) { return 1.0 / (1.0 + 1e6 * x * x); }, -1.0, 1.0);
    const double exact = 2.0 * std::atan(1e3) / 1e3;
    CHECK(r.converged);
    CHECK(rel_close(r.value, exact, 1e-8));
}

TEST_CASE("identically zero integrand converges to zero") {
    const IntegralResult r = integrate_adaptive([](double) { return 0.0; }, 0.0, 1.0);
    CHECK(r.converged);
    CHECK(r.value == 0.0);
    CHECK(r.error_estimate == 0.0);
}

TEST_CASE("converged implies the error estimate meets the tolerance") {
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-10;
    const IntegralResult r =
        integrate_adaptive([](double x) { return std::exp(-x) * std::sin(7.0 * x); },
                           0.0, 5.0, cfg);
    REQUIRE(r.converged);
    CHECK(r.error_estimate <=
          std::max(cfg.rel_tol * std::abs(r.value), cfg.abs_tol));
}

TEST_CASE("subdivision budget exhaustion reports, does not throw") {
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-15;
    cfg.abs_tol = 0.0;
    cfg.max_subdivisions = 1;
    IntegralResult r;
    CHECK_NOTHROW(r = integrate_adaptive(
                      [](double x) { return 1.0 / (1.0 + 1e6 * x * x); }, -1.0, 1.0,
                      cfg));
    CHECK_FALSE(r.converged);
    CHECK(r.error_estimate > 0.0);
}

TEST_CASE("NaN from the integrand is a hard error") {
    CHECK_THROWS_AS(integrate_adaptive(
                        [](double x) { return x < 0.5 ? 1.0 : std::nan(""); }, 0.0,
                        1.0),
                    convergence_error);
    CHECK_THROWS_AS(integrate_trapezoid(
                        [](double) { return std::numeric_limits<double>::quiet_NaN(); },
                        0.0, 1.0, 4),
                    convergence_error);
}

TEST_CASE("precondition violations") {
    auto f = [](double x) { return x; };
    CHECK_THROWS_AS(integrate_adaptive(f, 1.0, 1.0), domain_error);
    CHECK_THROWS_AS(integrate_adaptive(f, 2.0, 1.0), domain_error);
    CHECK_THROWS_AS(integrate_trapezoid(f, 1.0, 0.0, 10), domain_error);
    CHECK_THROWS_AS(integrate_trapezoid(f, 0.0, 1.0, 0), domain_error);
    QuadratureConfig bad;
    bad.rel_tol = 0.0;
    CHECK_THROWS_AS(integrate_adaptive(f, 0.0, 1.0, bad), domain_error);
    bad = {};
    bad.max_subdivisions = 0;
    CHECK_THROWS_AS(integrate_adaptive(f, 0.0, 1.0, bad), domain_error);
}

TEST_CASE("seeded breakpoints: same answer, validated input") {
    const std::array<double, 3> pts{0.0, 0.3, 1.0};
    const IntegralResult r =
        integrate_adaptive([](double x) { return x * x; }, pts);
    CHECK(r.converged);
    CHECK(std::abs(r.value - 1.0 / 3.0) < 1e-10);

    const std::array<double, 1> single{0.0};
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return x; }, single),
                    domain_error);
    const std::array<double, 3> unsorted{0.0, 0.7, 0.3};
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return x; }, unsorted),
                    domain_error);
}

TEST_CASE("trapezoid oracle: exact for linear, known bias for x^2") {
    CHECK(integrate_trapezoid([](double x) { return x; }, 0.0, 1.0, 1) == 0.5);
    CHECK(integrate_trapezoid([](double x) { return x * x; }, 0.0, 1.0, 2) == 0.375);
}

TEST_CASE("band integral and creation rate against frozen quadrature values") {
    const DimensionlessGroups g11 = groups_from(1.0, 1.0);
    CHECK(rel_close(band_integral(g11, 0.25), frozen::kBand11, 1e-7));
    CHECK(rel_close(creation_rate(g11, 0.25), frozen::kRate11, 1e-7));
    CHECK(creation_rate(g11, 0.0) == 0.0);
}

TEST_CASE("adaptive agrees with a 1e5-panel trapezoid on the rate integrand") {
    const DimensionlessGroups g = groups_from(1.0, 12.0);
    const double adaptive = band_integral(g, 0.25);
    const double trap = integrate_trapezoid(
        [&](double om) { return spectral_density(om, g, 0.25); }, 0.0, 1.0, 100000);
    CHECK(rel_close(adaptive, trap, 1e-6));
}

TEST_CASE("rate scales exactly as epsilon^2") {
    const DimensionlessGroups g = groups_from(1.0, 15.0);
    const double r1 = creation_rate(g, 0.25);
    const double r2 = creation_rate(g, 0.5);
    CHECK(rel_close(r2 / r1, 4.0, 1e-12));
}

TEST_CASE("band symmetry: full integral equals the doubled half band") {
    const DimensionlessGroups g = groups_from(1.0, 53.0);
    const double full = band_integral(g, 0.25);
    QuadratureConfig cfg;
    const IntegralResult half = integrate_adaptive(
        [&](double om) { return spectral_density(om, g, 0.25); }, 0.0, 0.5, cfg);
    REQUIRE(half.converged);
    CHECK(rel_close(full, 2.0 * half.value, 1e-6));
}

TEST_CASE("rate_ratio: unit baseline and frozen enhancements") {
    CHECK(rate_ratio(1.0, 1.0) == 1.0);
    CHECK(rel_close(rate_ratio(1.0, 12.0), frozen::kRatio112, 1e-7));
    CHECK(rel_close(rate_ratio(1.0, 15.0), frozen::kRatio115, 1e-7));
    CHECK(rel_close(rate_ratio(1.0, frozen::kZetaStar1), frozen::kRatioAtRes1, 1e-6));
    CHECK_THROWS_AS(rate_ratio(0.0, 1.0), domain_error);
    CHECK_THROWS_AS(rate_ratio(1.0, -1.0), domain_error);
}

TEST_CASE("resonance-seeded panels resolve the sharp zeta = 53 band") {
    // the peak near Omega_r carries most of the integral; a converged
    // adaptive result must match a dense trapezoid within 1e-5
    const DimensionlessGroups g = groups_from(1.0, 53.0);
    const double adaptive = band_integral(g, 0.25);
    const double trap = integrate_trapezoid(
        [&](double om) { return spectral_density(om, g, 0.25); }, 0.0, 1.0, 100000);
    CHECK(rel_close(adaptive, trap, 1e-5));
}
