#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "zipflaw/analysis.hpp"

namespace zipflaw {

/// Round to `digits` significant digits (the %.*g convention).
double round_sig(double x, int digits);

/// "raw" for bin_size 0, otherwise "bin<size>".
std::string series_label(std::size_t bin_size);

/// JSON report. Fit values carry 6 significant digits; each predicted
/// delta is the exact double quotient of the rounded gamma and alpha it
/// sits next to, so the relation holds on the reported values themselves.
/// Trailing newline included.
std::string report_json(const AnalysisResult& result, const AnalysisConfig& config);

/// Human summary, 3-decimal columns. One-regime table: bin_size, alpha,
/// gamma, delta, delta'; two-regime table: bin_size, alpha1, alpha2,
/// gamma1, gamma2, delta1, delta'1, delta2, delta'2, i*, f(i*). The
/// delta' columns divide the 3-decimal roundings, as the tables they
/// mirror do.
std::string summary_table(const AnalysisResult& result);

// Plot-data TSVs round-trip exactly: %.17g values, '#'-prefixed header.
void write_series_tsv(std::ostream& out, const BinnedSeries& series);
BinnedSeries read_series_tsv(std::istream& in);
void write_deviance_tsv(std::ostream& out, const DevianceCurve& curve);
DevianceCurve read_deviance_tsv(std::istream& in);

/// Build every figure the report describes, as (filename, svg) pairs in
/// report order. Points come from the series/deviance TSVs referenced by
/// the report, resolved against `dir`; lines and markers come from the
/// report's own rounded values. Rendering from a written report therefore
/// reproduces the figures byte for byte.
std::vector<std::pair<std::string, std::string>> figures_from_report(
    const std::string& report_json_text, const std::filesystem::path& dir);

}  // namespace zipflaw
