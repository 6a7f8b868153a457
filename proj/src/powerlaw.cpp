#include "zipflaw/powerlaw.hpp"

#include <cmath>

#include "zipflaw/errors.hpp"

namespace zipflaw {

namespace {

// Log-transform with domain check; reused by the deviance scan.
void check_positive(std::span<const Point> points) {
    for (const auto& p : points)
        if (!(p.x > 0.0) || !(p.y > 0.0))
            throw DomainError("log-log fit requires strictly positive coordinates");
}

}  // namespace

LogLogFit fit_loglog(std::span<const Point> points) {
    const std::size_t n = points.size();
    if (n < 2) throw DegenerateFitError("log-log fit needs at least 2 points");
    check_positive(points);

    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        lx[i] = std::log(points[i].x);
        ly[i] = std::log(points[i].y);
    }

    long double sum_x = 0, sum_y = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sum_x += lx[i];
        sum_y += ly[i];
    }
    const long double mean_x = sum_x / n;
    const long double mean_y = sum_y / n;

    long double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const long double dx = lx[i] - mean_x;
        const long double dy = ly[i] - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx <= 0)
        throw DegenerateFitError("log-log fit needs at least 2 distinct x values");

    LogLogFit fit;
    fit.n_points = n;
    fit.slope = static_cast<double>(sxy / sxx);
    fit.intercept = static_cast<double>(mean_y - (sxy / sxx) * mean_x);

    // Residuals summed directly: no cancellation when the fit is near exact.
    long double sse = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const long double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
        sse += r * r;
    }
    fit.sse_log = static_cast<double>(sse);
    fit.r_squared = syy > 0 ? static_cast<double>(1.0L - sse / syy) : 1.0;
    if (fit.r_squared < 0.0) fit.r_squared = 0.0;
    if (fit.r_squared > 1.0) fit.r_squared = 1.0;
    return fit;
}

namespace {

PowerLawFit from_loglog(const LogLogFit& raw, double sign) {
    PowerLawFit fit;
    fit.exponent = sign * raw.slope;
    fit.log_intercept = raw.intercept;
    fit.r_squared = raw.r_squared;
    fit.sse_log = raw.sse_log;
    fit.n_points = raw.n_points;
    return fit;
}

}  // namespace

std::vector<Point> rank_frequency_points(const RankedLexicon& lex) {
    std::vector<Point> pts;
    pts.reserve(lex.size());
    for (const auto& rec : lex.records)
        pts.push_back({static_cast<double>(rec.rank), rec.frequency});
    return pts;
}

std::vector<Point> rank_frequency_points(const BinnedSeries& series) {
    std::vector<Point> pts;
    pts.reserve(series.bins.size());
    for (const auto& bin : series.bins)
        pts.push_back({bin.mean_rank, bin.mean_frequency});
    return pts;
}

std::vector<Point> meaning_distribution_points(const RankedLexicon& lex) {
    std::vector<Point> pts;
    pts.reserve(lex.size());
    for (const auto& rec : lex.records)
        pts.push_back({static_cast<double>(rec.rank), rec.senses});
    return pts;
}

std::vector<Point> meaning_distribution_points(const BinnedSeries& series) {
    std::vector<Point> pts;
    pts.reserve(series.bins.size());
    for (const auto& bin : series.bins)
        pts.push_back({bin.mean_rank, bin.mean_senses});
    return pts;
}

std::vector<Point> meaning_frequency_points(const RankedLexicon& lex) {
    std::vector<Point> pts;
    pts.reserve(lex.size());
    for (const auto& rec : lex.records)
        pts.push_back({rec.frequency, rec.senses});
    return pts;
}

std::vector<Point> meaning_frequency_points(const BinnedSeries& series) {
    std::vector<Point> pts;
    pts.reserve(series.bins.size());
    for (const auto& bin : series.bins)
        pts.push_back({bin.mean_frequency, bin.mean_senses});
    return pts;
}

PowerLawFit fit_rank_frequency(const RankedLexicon& lex) {
    return from_loglog(fit_loglog(rank_frequency_points(lex)), -1.0);
}

PowerLawFit fit_rank_frequency(const BinnedSeries& series) {
    return from_loglog(fit_loglog(rank_frequency_points(series)), -1.0);
}

PowerLawFit fit_meaning_distribution(const RankedLexicon& lex) {
    return from_loglog(fit_loglog(meaning_distribution_points(lex)), -1.0);
}

PowerLawFit fit_meaning_distribution(const BinnedSeries& series) {
    return from_loglog(fit_loglog(meaning_distribution_points(series)), -1.0);
}

PowerLawFit fit_meaning_frequency(const RankedLexicon& lex) {
    return from_loglog(fit_loglog(meaning_frequency_points(lex)), 1.0);
}

PowerLawFit fit_meaning_frequency(const BinnedSeries& series) {
    return from_loglog(fit_loglog(meaning_frequency_points(series)), 1.0);
}

double predicted_delta(double alpha, double gamma) {
    if (!(alpha > 0.0)) throw DomainError("predicted_delta requires alpha > 0");
    return gamma / alpha;
}

}  // namespace zipflaw
