#include "dce/emit.hpp"

#include "dce/errors.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace dce {

std::string format_number(double x) {
    if (!std::isfinite(x))
        throw domain_error("format_number: non-finite value");
    if (x == 0.0)
        return "0.000000000000";
    const double ax = std::fabs(x);
    int exp10 = static_cast<int>(std::floor(std::log10(ax)));
    // log10 can land a hair off at exact powers of ten; settle it exactly.
    if (std::pow(10.0, exp10 + 1) <= ax)
        ++exp10;
    else if (std::pow(10.0, exp10) > ax)
        --exp10;
    const int decimals = std::max(12 - exp10, 0);
    std::ostringstream os;
    os << std::fixed << std::setprecision(decimals) << x;
    return os.str();
}

std::string iso8601_utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

namespace {

void write_json_string(std::ostream& os, const std::string& s) {
    os << '"';
    for (char c : s) {
        switch (c) {
            case '"': os << "\\\""; break;
            case '\\': os << "\\\\"; break;
            case '\n': os << "\\n"; break;
            case '\r': os << "\\r"; break;
            case '\t': os << "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x",
                                  static_cast<unsigned>(static_cast<unsigned char>(c)));
                    os << buf;
                } else {
                    os << c;
                }
        }
    }
    os << '"';
}

void write_number_array(std::ostream& os, const std::vector<double>& xs) {
    os << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            os << ", ";
        os << format_number(xs[i]);
    }
    os << ']';
}

void write_string_array(std::ostream& os, const std::vector<std::string>& xs) {
    os << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            os << ", ";
        write_json_string(os, xs[i]);
    }
    os << ']';
}

void write_reference_json(std::ostream& os, const ReferencePoint& ref,
                          const char* indent) {
    os << "{\n";
    os << indent << "  \"gamma0_exp\": " << format_number(ref.gamma0_exp) << ",\n";
    os << indent << "  \"alpha0_exp\": " << format_number(ref.alpha0_exp) << ",\n";
    os << indent << "  \"omega0\": " << format_number(ref.omega0) << ",\n";
    os << indent << "  \"epsilon\": " << format_number(ref.epsilon) << ",\n";
    os << indent << "  \"v\": " << format_number(ref.v) << "\n";
    os << indent << "}";
}

} // namespace

void write_spectrum_csv(std::ostream& os, const Spectrum& s) {
    os << "omega_frac,density\n";
    for (std::size_t i = 0; i < s.omega_frac.size(); ++i)
        os << format_number(s.omega_frac[i]) << ',' << format_number(s.density[i])
           << '\n';
}

void write_sweep_csv(std::ostream& os, const SweepResult& r) {
    os << "xi,zeta,value\n";
    for (std::size_t i = 0; i < r.xi_grid.size(); ++i)
        for (std::size_t j = 0; j < r.zeta_grid.size(); ++j)
            os << format_number(r.xi_grid[i]) << ',' << format_number(r.zeta_grid[j])
               << ',' << format_number(r.at(i, j)) << '\n';
}

void write_scalar_csv(std::ostream& os, double xi, double zeta, double value) {
    os << "xi,zeta,value\n";
    os << format_number(xi) << ',' << format_number(zeta) << ','
       << format_number(value) << '\n';
}

void write_maximize_csv(std::ostream& os, double xi, const MaximizeResult& m) {
    os << "xi,zeta_star,value\n";
    os << format_number(xi) << ',' << format_number(m.zeta_star) << ','
       << format_number(m.value) << '\n';
}

void write_delta_report_csv(std::ostream& os, const DeltaApproxReport& r) {
    os << "omega_frac,general_over_tau,closed_form,rel_deviation,pass\n";
    for (const DeltaProbe& p : r.probes)
        os << format_number(p.omega_frac) << ',' << format_number(p.general_over_tau)
           << ',' << format_number(p.closed_form) << ','
           << format_number(p.rel_deviation) << ',' << (p.pass ? "true" : "false")
           << '\n';
}

void write_spectrum_json(std::ostream& os, const Spectrum& s,
                         const std::string& timestamp) {
    os << "{\n";
    os << "  \"omega_frac\": ";
    write_number_array(os, s.omega_frac);
    os << ",\n  \"density\": ";
    write_number_array(os, s.density);
    os << ",\n  \"metadata\": {\n";
    os << "    \"xi\": " << format_number(s.groups.xi) << ",\n";
    os << "    \"zeta\": " << format_number(s.groups.zeta) << ",\n";
    os << "    \"A\": " << format_number(s.groups.A) << ",\n";
    os << "    \"g\": " << format_number(s.groups.g) << ",\n";
    os << "    \"epsilon\": " << format_number(s.epsilon);
    if (!timestamp.empty()) {
        os << ",\n    \"timestamp\": ";
        write_json_string(os, timestamp);
    }
    os << "\n  }\n}\n";
}

void write_sweep_json(std::ostream& os, const SweepResult& r) {
    os << "{\n";
    os << "  \"quantity\": ";
    write_json_string(os, to_string(r.quantity));
    os << ",\n  \"xi_grid\": ";
    write_number_array(os, r.xi_grid);
    os << ",\n  \"zeta_grid\": ";
    write_number_array(os, r.zeta_grid);
    os << ",\n  \"values\": [\n";
    for (std::size_t i = 0; i < r.xi_grid.size(); ++i) {
        os << "    [";
        for (std::size_t j = 0; j < r.zeta_grid.size(); ++j) {
            if (j)
                os << ", ";
            os << format_number(r.at(i, j));
        }
        os << (i + 1 < r.xi_grid.size() ? "],\n" : "]\n");
    }
    os << "  ],\n";
    os << "  \"metadata\": {\n";
    os << "    \"reference\": ";
    write_reference_json(os, r.metadata.reference, "    ");
    os << ",\n    \"epsilon\": " << format_number(r.metadata.epsilon);
    if (!r.metadata.timestamp.empty()) {
        os << ",\n    \"timestamp\": ";
        write_json_string(os, r.metadata.timestamp);
    }
    os << "\n  }\n}\n";
}

void write_peak_report_json(std::ostream& os, const PeakReport& r) {
    os << "{\n";
    os << "  \"n_peaks\": " << r.n_peaks << ",\n";
    os << "  \"peak_positions\": ";
    write_number_array(os, r.peak_positions);
    os << ",\n  \"peak_heights\": ";
    write_number_array(os, r.peak_heights);
    os << ",\n  \"shape\": ";
    write_json_string(os, to_string(r.shape));
    os << "\n}\n";
}

void write_scalar_json(std::ostream& os, const std::string& quantity, double xi,
                       double zeta, double value) {
    os << "{\n";
    os << "  \"quantity\": ";
    write_json_string(os, quantity);
    os << ",\n  \"xi\": " << format_number(xi);
    os << ",\n  \"zeta\": " << format_number(zeta);
    os << ",\n  \"value\": " << format_number(value);
    os << "\n}\n";
}

void write_maximize_json(std::ostream& os, const std::string& quantity, double xi,
                         const MaximizeResult& m) {
    os << "{\n";
    os << "  \"quantity\": ";
    write_json_string(os, quantity);
    os << ",\n  \"xi\": " << format_number(xi);
    os << ",\n  \"zeta_star\": " << format_number(m.zeta_star);
    os << ",\n  \"value\": " << format_number(m.value);
    os << "\n}\n";
}

void write_validation_json(std::ostream& os, const ValidationReport& r) {
    os << "{\n";
    os << "  \"valid\": " << (r.valid() ? "true" : "false") << ",\n";
    os << "  \"violations\": ";
    write_string_array(os, r.violations);
    os << ",\n  \"advisories\": ";
    write_string_array(os, r.advisories);
    os << "\n}\n";
}

void write_delta_report_json(std::ostream& os, const DeltaApproxReport& r) {
    os << "{\n";
    os << "  \"omega0_tau\": " << format_number(r.omega0_tau) << ",\n";
    os << "  \"tol\": " << format_number(r.tol) << ",\n";
    os << "  \"probes\": [\n";
    for (std::size_t i = 0; i < r.probes.size(); ++i) {
        const DeltaProbe& p = r.probes[i];
        os << "    {\"omega_frac\": " << format_number(p.omega_frac)
           << ", \"general_over_tau\": " << format_number(p.general_over_tau)
           << ", \"closed_form\": " << format_number(p.closed_form)
           << ", \"rel_deviation\": " << format_number(p.rel_deviation)
           << ", \"pass\": " << (p.pass ? "true" : "false") << '}'
           << (i + 1 < r.probes.size() ? ",\n" : "\n");
    }
    os << "  ],\n";
    os << "  \"all_pass\": " << (r.all_pass ? "true" : "false") << "\n}\n";
}

} // namespace dce
