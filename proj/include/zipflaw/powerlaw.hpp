#pragma once

#include <span>
#include <vector>

#include "zipflaw/binning.hpp"

namespace zipflaw {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Ordinary least squares through (ln x, ln y).
struct LogLogFit {
    double slope = 0.0;
    double intercept = 0.0;  // natural-log scale
    double r_squared = 0.0;
    double sse_log = 0.0;    // summed squared residuals in log-log space
    std::size_t n_points = 0;
};

/// One fitted Zipfian law. `exponent` carries the law's sign convention:
/// alpha and gamma are -slope (positive for decaying data), delta +slope.
struct PowerLawFit {
    double exponent = 0.0;
    double log_intercept = 0.0;  // natural-log scale
    double r_squared = 0.0;
    double sse_log = 0.0;
    std::size_t n_points = 0;
};

/// Requires >= 2 points, strictly positive coordinates and at least two
/// distinct x values. Constant y fits exactly with slope 0 and r^2 = 1.
LogLogFit fit_loglog(std::span<const Point> points);

// The three laws, over raw records or binned means. Rank-frequency and
// meaning-distribution fit against rank (exponent = -slope); the
// meaning-frequency law fits senses against frequency (exponent = +slope).
PowerLawFit fit_rank_frequency(const RankedLexicon& lex);
PowerLawFit fit_rank_frequency(const BinnedSeries& series);
PowerLawFit fit_meaning_distribution(const RankedLexicon& lex);
PowerLawFit fit_meaning_distribution(const BinnedSeries& series);
PowerLawFit fit_meaning_frequency(const RankedLexicon& lex);
PowerLawFit fit_meaning_frequency(const BinnedSeries& series);

/// delta predicted from the other two exponents: gamma / alpha.
double predicted_delta(double alpha, double gamma);

// Point extractors shared with the breakpoint machinery.
std::vector<Point> rank_frequency_points(const RankedLexicon& lex);
std::vector<Point> rank_frequency_points(const BinnedSeries& series);
std::vector<Point> meaning_distribution_points(const RankedLexicon& lex);
std::vector<Point> meaning_distribution_points(const BinnedSeries& series);
std::vector<Point> meaning_frequency_points(const RankedLexicon& lex);
std::vector<Point> meaning_frequency_points(const BinnedSeries& series);

}  // namespace zipflaw
