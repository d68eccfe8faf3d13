// emit.hpp — fixed-schema CSV/JSON serialization with a shared number format.
#pragma once

#include "dce/genform.hpp"
#include "dce/params.hpp"
#include "dce/spectrum.hpp"
#include "dce/sweep.hpp"

#include <iosfwd>
#include <string>

namespace dce {

/// Fixed-decimal rendering with decimals = max(12 − floor(log10|x|), 0):
/// at least 13 significant digits everywhere, no exponent notation, and
/// 1.0 prints as 1.000000000000 (zero as 0.000000000000). Throws
/// domain_error on non-finite input — NaN/Inf must never reach a sink.
std::string format_number(double x);

/// UTC wall clock as ISO-8601 (2026-01-31T12:00:00Z).
std::string iso8601_utc_now();

// CSV writers: RFC-4180-style, mandatory header row, '.' decimal
// separator, LF line endings. Data sections carry no timestamps.
void write_spectrum_csv(std::ostream& os, const Spectrum& s);
void write_sweep_csv(std::ostream& os, const SweepResult& r);
void write_scalar_csv(std::ostream& os, double xi, double zeta, double value);
void write_maximize_csv(std::ostream& os, double xi, const MaximizeResult& m);
void write_delta_report_csv(std::ostream& os, const DeltaApproxReport& r);

// JSON writers: UTF-8, fixed key order, two-space indent, newline
// terminated. Timestamps appear only inside "metadata" and only when
// non-empty, so identical invocations with timestamps suppressed are
// byte-identical.
void write_spectrum_json(std::ostream& os, const Spectrum& s,
                         const std::string& timestamp = {});
void write_sweep_json(std::ostream& os, const SweepResult& r);
void write_peak_report_json(std::ostream& os, const PeakReport& r);
void write_scalar_json(std::ostream& os, const std::string& quantity,
                       double xi, double zeta, double value);
void write_maximize_json(std::ostream& os, const std::string& quantity,
                         double xi, const MaximizeResult& m);
void write_validation_json(std::ostream& os, const ValidationReport& r);
void write_delta_report_json(std::ostream& os, const DeltaApproxReport& r);

} // namespace dce
