// dce_main.cpp — `dce` command line tool: spectra, rates, sweeps, reports.
//
// Exit codes: 0 success, 1 usage error, 2 computation or I/O error.
// All frequencies are accepted in GHz (ordinary frequency) and converted
// to angular rad/s internally. All numeric output is fixed decimal.

#include "dce/emit.hpp"
#include "dce/errors.hpp"
#include "dce/genform.hpp"
#include "dce/params.hpp"
#include "dce/quadrature.hpp"
#include "dce/spectrum.hpp"
#include "dce/sweep.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

namespace {

using namespace dce;

// Serialize through one writer; file sinks fail loudly on the exit-2 path.
void write_to_sink(const std::string& path,
                   const std::function<void(std::ostream&)>& writer) {
    if (path.empty()) {
        writer(std::cout);
        std::cout.flush();
        if (!std::cout)
            throw io_error("writing to stdout failed");
        return;
    }
    std::ofstream file(path);
    if (!file)
        throw io_error("cannot open output file: " + path);
    writer(file);
    file.flush();
    if (!file)
        throw io_error("writing to " + path + " failed");
}

void check_epsilon(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw domain_error("epsilon must lie in (0, 1)");
}

struct QuadOptions {
    QuadratureConfig cfg;

    void attach(CLI::App* cmd) {
        cmd->add_option("--rel-tol", cfg.rel_tol, "Quadrature relative tolerance")
            ->capture_default_str();
        cmd->add_option("--abs-tol", cfg.abs_tol, "Quadrature absolute tolerance")
            ->capture_default_str();
        cmd->add_option("--max-subdiv", cfg.max_subdivisions,
                        "Quadrature subdivision budget")
            ->capture_default_str();
    }
};

int run(int argc, char** argv) {
    CLI::App app{"dce — dynamical-Casimir-effect spectra, rates and (xi, zeta) maps\n"
                 "for a SQUID-terminated waveguide with a generalized time-dependent\n"
                 "Robin boundary condition."};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "Config file (key=value; [subcommand] sections for subcommand flags)");
    app.failure_message(CLI::FailureMessage::help);

    // ---- spectrum ----
    auto* spectrum_cmd =
        app.add_subcommand("spectrum", "Sample the closed-form spectral density N(Omega)");
    double sp_xi = 1.0, sp_zeta = 0.0, sp_epsilon = kReference.epsilon;
    int sp_points = 2001;
    std::string sp_out, sp_format = "csv";
    bool sp_no_timestamp = false;
    spectrum_cmd->add_option("--xi", sp_xi, "gamma0 scale factor (> 0)")->required();
    spectrum_cmd->add_option("--zeta", sp_zeta, "alpha0 scale factor (>= 0)")->required();
    spectrum_cmd->add_option("--points", sp_points, "Grid size, endpoints included (>= 3)")
        ->capture_default_str();
    spectrum_cmd->add_option("--epsilon", sp_epsilon, "Modulation depth in (0, 1)")
        ->capture_default_str();
    spectrum_cmd->add_option("--out", sp_out, "Output file (default: stdout)");
    spectrum_cmd->add_option("--format", sp_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    spectrum_cmd->add_flag("--no-timestamp", sp_no_timestamp,
                           "Suppress the metadata timestamp (JSON only)");

    // ---- rate ----
    auto* rate_cmd = app.add_subcommand(
        "rate", "Particle-creation rate (default: ratio against the (1, 1) reference)");
    double rt_xi = 1.0, rt_zeta = 0.0, rt_epsilon = kReference.epsilon;
    std::string rt_out, rt_format = "plain";
    QuadOptions rt_quad;
    rate_cmd->add_option("--xi", rt_xi, "gamma0 scale factor (> 0)")->required();
    rate_cmd->add_option("--zeta", rt_zeta, "alpha0 scale factor (>= 0)")->required();
    rate_cmd->add_option("--epsilon", rt_epsilon,
                         "Modulation depth (only --si/--band depend on it)")
        ->capture_default_str();
    auto* rt_si = rate_cmd->add_flag("--si", "Report the SI rate in 1/s instead of the ratio");
    auto* rt_band =
        rate_cmd->add_flag("--band", "Report the dimensionless band integral instead");
    rt_si->excludes(rt_band);
    rt_band->excludes(rt_si);
    rate_cmd->add_option("--out", rt_out, "Output file (default: stdout)");
    rate_cmd->add_option("--format", rt_format, "Output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}))
        ->capture_default_str();
    rt_quad.attach(rate_cmd);

    // ---- rho ----
    auto* rho_cmd = app.add_subcommand(
        "rho", "Density enhancement at Omega = 1/2 relative to the (1, 1) reference");
    double rh_xi = 1.0, rh_zeta = 0.0;
    std::string rh_out, rh_format = "plain";
    rho_cmd->add_option("--xi", rh_xi, "gamma0 scale factor (> 0)")->required();
    rho_cmd->add_option("--zeta", rh_zeta, "alpha0 scale factor (>= 0)")->required();
    rho_cmd->add_option("--out", rh_out, "Output file (default: stdout)");
    rho_cmd->add_option("--format", rh_format, "Output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}))
        ->capture_default_str();

    // ---- sweep ----
    auto* sweep_cmd =
        app.add_subcommand("sweep", "Dense rho or rate-ratio map over the (xi, zeta) grid");
    double sw_xi_min = 0.5, sw_xi_max = 1.5, sw_zeta_min = 0.0, sw_zeta_max = 120.0;
    int sw_xi_steps = 50, sw_zeta_steps = 121;
    std::string sw_quantity = "rho", sw_out, sw_format = "json";
    bool sw_no_timestamp = false;
    QuadOptions sw_quad;
    sweep_cmd->add_option("--xi-min", sw_xi_min, "Lowest xi (> 0)")->capture_default_str();
    sweep_cmd->add_option("--xi-max", sw_xi_max, "Highest xi")->capture_default_str();
    sweep_cmd->add_option("--xi-steps", sw_xi_steps, "Number of xi grid points")
        ->capture_default_str();
    sweep_cmd->add_option("--zeta-min", sw_zeta_min, "Lowest zeta (>= 0)")
        ->capture_default_str();
    sweep_cmd->add_option("--zeta-max", sw_zeta_max, "Highest zeta")->capture_default_str();
    sweep_cmd->add_option("--zeta-steps", sw_zeta_steps, "Number of zeta grid points")
        ->capture_default_str();
    sweep_cmd->add_option("--quantity", sw_quantity, "Quantity to map")
        ->check(CLI::IsMember({"rho", "rate_ratio"}))
        ->capture_default_str();
    sweep_cmd->add_option("--out", sw_out, "Output file (default: stdout)");
    sweep_cmd->add_option("--format", sw_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sweep_cmd->add_flag("--no-timestamp", sw_no_timestamp,
                        "Suppress the metadata timestamp (JSON only)");
    sw_quad.attach(sweep_cmd);

    // ---- maximize ----
    auto* max_cmd = app.add_subcommand(
        "maximize", "Maximize rho or the rate ratio over zeta at fixed xi");
    double mx_xi = 1.0, mx_zeta_min = -1.0, mx_zeta_max = -1.0, mx_tol = 1e-3;
    std::string mx_quantity = "rho", mx_out, mx_format = "json";
    QuadOptions mx_quad;
    max_cmd->add_option("--xi", mx_xi, "gamma0 scale factor (> 0)")->required();
    max_cmd->add_option("--quantity", mx_quantity, "Quantity to maximize")
        ->check(CLI::IsMember({"rho", "rate_ratio"}))
        ->capture_default_str();
    auto* mx_lo = max_cmd->add_option(
        "--zeta-min", mx_zeta_min, "Bracket start (default: resonance zeta - 50%)");
    auto* mx_hi = max_cmd->add_option(
        "--zeta-max", mx_zeta_max, "Bracket end (default: resonance zeta + 50%)");
    mx_lo->needs(mx_hi);
    mx_hi->needs(mx_lo);
    max_cmd->add_option("--tol", mx_tol, "Bracket width target on zeta")
        ->capture_default_str();
    max_cmd->add_option("--out", mx_out, "Output file (default: stdout)");
    max_cmd->add_option("--format", mx_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    mx_quad.attach(max_cmd);

    // ---- classify ----
    auto* classify_cmd = app.add_subcommand(
        "classify", "Count spectrum peaks and classify the shape (JSON report)");
    double cl_xi = 1.0, cl_zeta = 0.0, cl_epsilon = kReference.epsilon, cl_sharp = 0.1;
    int cl_points = 2001;
    std::string cl_out;
    classify_cmd->add_option("--xi", cl_xi, "gamma0 scale factor (> 0)")->required();
    classify_cmd->add_option("--zeta", cl_zeta, "alpha0 scale factor (>= 0)")->required();
    classify_cmd->add_option("--points", cl_points, "Grid size (>= 201)")
        ->capture_default_str();
    classify_cmd->add_option("--epsilon", cl_epsilon, "Modulation depth in (0, 1)")
        ->capture_default_str();
    classify_cmd
        ->add_option("--sharp-fwhm", cl_sharp,
                     "FWHM (in Omega) below which one peak counts as sharp")
        ->capture_default_str();
    classify_cmd->add_option("--out", cl_out, "Output file (default: stdout)");

    // ---- validate-delta ----
    auto* delta_cmd = app.add_subcommand(
        "validate-delta",
        "Compare the general drive integral (per unit tau) with the closed form");
    double vd_xi = 1.0, vd_zeta = 0.0, vd_epsilon = kReference.epsilon;
    double vd_omega0_tau = 5000.0, vd_tol = 0.02;
    std::vector<double> vd_probes{0.25, 0.5, 0.75};
    std::string vd_out, vd_format = "json";
    QuadOptions vd_quad;
    delta_cmd->add_option("--xi", vd_xi, "gamma0 scale factor (> 0)")->required();
    delta_cmd->add_option("--zeta", vd_zeta, "alpha0 scale factor (>= 0)")->required();
    delta_cmd->add_option("--omega0-tau", vd_omega0_tau,
                          "Dimensionless drive duration omega0*tau (>= 10)")
        ->capture_default_str();
    delta_cmd->add_option("--probes", vd_probes, "Probe fractions Omega in (0, 1)")
        ->delimiter(',')
        ->capture_default_str();
    delta_cmd->add_option("--tol", vd_tol, "Relative deviation tolerance")
        ->capture_default_str();
    delta_cmd->add_option("--epsilon", vd_epsilon, "Modulation depth in (0, 1)")
        ->capture_default_str();
    delta_cmd->add_option("--out", vd_out, "Output file (default: stdout)");
    delta_cmd->add_option("--format", vd_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    vd_quad.attach(delta_cmd);

    // ---- validate-params ----
    auto* params_cmd = app.add_subcommand(
        "validate-params", "Check an SI operating point (defaults: the reference)");
    double vp_gamma0 = kReference.gamma0_exp, vp_alpha0 = kReference.alpha0_exp;
    double vp_f0_ghz = kReference.omega0 / (2.0 * std::numbers::pi * 1e9);
    double vp_epsilon = kReference.epsilon, vp_v = kReference.v;
    std::string vp_out;
    params_cmd->add_option("--gamma0", vp_gamma0, "gamma0 in m (signed)")
        ->capture_default_str();
    params_cmd->add_option("--alpha0", vp_alpha0, "alpha0 in s^2/m")
        ->capture_default_str();
    params_cmd->add_option("--f0-ghz", vp_f0_ghz, "Drive frequency in GHz")
        ->capture_default_str();
    params_cmd->add_option("--epsilon", vp_epsilon, "Modulation depth")
        ->capture_default_str();
    params_cmd->add_option("--v", vp_v, "Waveguide speed of light in m/s")
        ->capture_default_str();
    params_cmd->add_option("--out", vp_out, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11's own codes are remapped: anything but help/version is a
        // usage error and exits 1.
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (app.got_subcommand(spectrum_cmd)) {
        check_epsilon(sp_epsilon);
        const Spectrum s = spectrum_grid(groups_from(sp_xi, sp_zeta), sp_epsilon, sp_points);
        const std::string stamp =
            (sp_format == "json" && !sp_no_timestamp) ? iso8601_utc_now() : "";
        write_to_sink(sp_out, [&](std::ostream& os) {
            if (sp_format == "csv")
                write_spectrum_csv(os, s);
            else
                write_spectrum_json(os, s, stamp);
        });
    } else if (app.got_subcommand(rate_cmd)) {
        std::string quantity = "rate_ratio";
        double value = 0.0;
        if (*rt_si || *rt_band) {
            check_epsilon(rt_epsilon);
            const DimensionlessGroups groups = groups_from(rt_xi, rt_zeta);
            if (*rt_si) {
                quantity = "rate_si";
                value = creation_rate(groups, rt_epsilon, rt_quad.cfg);
            } else {
                quantity = "rate_band";
                value = band_integral(groups, rt_epsilon, rt_quad.cfg);
            }
        } else {
            value = rate_ratio(rt_xi, rt_zeta, rt_quad.cfg);
        }
        write_to_sink(rt_out, [&](std::ostream& os) {
            if (rt_format == "plain")
                os << format_number(value) << '\n';
            else if (rt_format == "csv")
                write_scalar_csv(os, rt_xi, rt_zeta, value);
            else
                write_scalar_json(os, quantity, rt_xi, rt_zeta, value);
        });
    } else if (app.got_subcommand(rho_cmd)) {
        const double value = rho(rh_xi, rh_zeta);
        write_to_sink(rh_out, [&](std::ostream& os) {
            if (rh_format == "plain")
                os << format_number(value) << '\n';
            else if (rh_format == "csv")
                write_scalar_csv(os, rh_xi, rh_zeta, value);
            else
                write_scalar_json(os, "rho", rh_xi, rh_zeta, value);
        });
    } else if (app.got_subcommand(sweep_cmd)) {
        const Quantity quantity =
            sw_quantity == "rho" ? Quantity::rho : Quantity::rate_ratio;
        SweepResult result =
            sweep_grid(linspace(sw_xi_min, sw_xi_max, sw_xi_steps),
                       linspace(sw_zeta_min, sw_zeta_max, sw_zeta_steps), quantity,
                       sw_quad.cfg);
        if (sw_format == "json" && !sw_no_timestamp)
            result.metadata.timestamp = iso8601_utc_now();
        write_to_sink(sw_out, [&](std::ostream& os) {
            if (sw_format == "csv")
                write_sweep_csv(os, result);
            else
                write_sweep_json(os, result);
        });
    } else if (app.got_subcommand(max_cmd)) {
        const Quantity quantity =
            mx_quantity == "rho" ? Quantity::rho : Quantity::rate_ratio;
        double lo = mx_zeta_min, hi = mx_zeta_max;
        if (mx_lo->count() == 0) {
            const double center = resonance_zeta(mx_xi);
            lo = 0.5 * center;
            hi = 1.5 * center;
        }
        const MaximizeResult m =
            maximize_over_zeta(mx_xi, lo, hi, quantity, mx_quad.cfg, mx_tol);
        write_to_sink(mx_out, [&](std::ostream& os) {
            if (mx_format == "csv")
                write_maximize_csv(os, mx_xi, m);
            else
                write_maximize_json(os, mx_quantity, mx_xi, m);
        });
    } else if (app.got_subcommand(classify_cmd)) {
        check_epsilon(cl_epsilon);
        const PeakReport report =
            classify_spectrum(groups_from(cl_xi, cl_zeta), cl_epsilon, cl_points, cl_sharp);
        write_to_sink(cl_out,
                      [&](std::ostream& os) { write_peak_report_json(os, report); });
    } else if (app.got_subcommand(delta_cmd)) {
        check_epsilon(vd_epsilon);
        const DeltaApproxReport report =
            validate_delta_approx(groups_from(vd_xi, vd_zeta), vd_epsilon, vd_omega0_tau,
                                  vd_probes, vd_tol, vd_quad.cfg);
        write_to_sink(vd_out, [&](std::ostream& os) {
            if (vd_format == "csv")
                write_delta_report_csv(os, report);
            else
                write_delta_report_json(os, report);
        });
    } else if (app.got_subcommand(params_cmd)) {
        const CircuitParams p{vp_gamma0, vp_alpha0,
                              2.0 * std::numbers::pi * vp_f0_ghz * 1e9, vp_epsilon, vp_v};
        const ValidationReport report = validate(p);
        write_to_sink(vp_out,
                      [&](std::ostream& os) { write_validation_json(os, report); });
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\nRun 'dce --help' for usage.\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
