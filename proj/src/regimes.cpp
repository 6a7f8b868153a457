#include "zipflaw/regimes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zipflaw/errors.hpp"

namespace zipflaw {

DevianceCurve deviance_scan(std::span<const Point> points, std::size_t min_segment) {
    const std::size_t n = points.size();
    if (min_segment < 2) throw DomainError("min_segment must be >= 2");
    if (n < 2 * min_segment)
        throw InsufficientDataError("deviance scan needs at least " +
                                    std::to_string(2 * min_segment) + " points, got " +
                                    std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (!(points[i].x > 0.0) || !(points[i].y > 0.0))
            throw DomainError("deviance scan requires strictly positive coordinates");
        if (i > 0 && !(points[i].x > points[i - 1].x))
            throw DomainError("deviance scan requires strictly increasing x");
    }

    // Prefix sums of the log coordinates; long double keeps the
    // cancellation in the segment moments far below the fit noise.
    std::vector<long double> px(n + 1, 0), py(n + 1, 0), pxx(n + 1, 0), pxy(n + 1, 0),
        pyy(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const long double lx = std::log(points[i].x);
        const long double ly = std::log(points[i].y);
        px[i + 1] = px[i] + lx;
        py[i + 1] = py[i] + ly;
        pxx[i + 1] = pxx[i] + lx * lx;
        pxy[i + 1] = pxy[i] + lx * ly;
        pyy[i + 1] = pyy[i] + ly * ly;
    }
    auto segment_sse = [&](std::size_t a, std::size_t b) {  // [a, b)
        const long double m = static_cast<long double>(b - a);
        const long double sx = px[b] - px[a];
        const long double sy = py[b] - py[a];
        const long double sxx = pxx[b] - pxx[a] - sx * sx / m;
        const long double sxy = pxy[b] - pxy[a] - sx * sy / m;
        const long double syy = pyy[b] - pyy[a] - sy * sy / m;
        long double sse = syy - sxy * sxy / sxx;  // sxx > 0: x strictly increasing
        return sse > 0 ? sse : 0.0L;
    };

    DevianceCurve curve;
    curve.min_segment = min_segment;
    curve.n_points = n;
    curve.candidates.reserve(n - 2 * min_segment + 1);
    for (std::size_t k = min_segment; k + min_segment <= n; ++k) {
        DevianceCandidate cand;
        cand.split_index = k;
        cand.split_rank = 0.5 * (points[k - 1].x + points[k].x);
        cand.deviance = static_cast<double>(segment_sse(0, k) + segment_sse(k, n));
        curve.candidates.push_back(cand);
    }
    return curve;
}

std::vector<DevianceCandidate> local_minima(const DevianceCurve& curve) {
    const auto& c = curve.candidates;
    if (c.empty()) throw DomainError("local_minima on an empty deviance curve");
    std::vector<DevianceCandidate> minima;
    std::size_t i = 0;
    while (i < c.size()) {
        std::size_t j = i;  // [i, j] = plateau of equal deviance
        while (j + 1 < c.size() && c[j + 1].deviance == c[i].deviance) ++j;
        const bool falls_in = i == 0 || c[i - 1].deviance > c[i].deviance;
        const bool rises_out = j + 1 == c.size() || c[j + 1].deviance > c[j].deviance;
        if (falls_in && rises_out) minima.push_back(c[i]);
        i = j + 1;
    }
    return minima;
}

const DevianceCandidate& choose_candidate(const DevianceCurve& curve,
                                          BreakpointStrategy strategy,
                                          std::optional<std::size_t> manual_split) {
    const auto& c = curve.candidates;
    if (c.empty()) throw DomainError("breakpoint selection on an empty deviance curve");
    switch (strategy) {
        case BreakpointStrategy::global_min: {
            std::size_t best = 0;
            for (std::size_t i = 1; i < c.size(); ++i)
                if (c[i].deviance < c[best].deviance) best = i;
            return c[best];
        }
        case BreakpointStrategy::first_local_min: {
            // local_minima never returns empty on a non-empty curve: the
            // leftmost plateau of the global minimum always qualifies.
            for (std::size_t i = 0; i < c.size(); ++i) {
                std::size_t j = i;
                while (j + 1 < c.size() && c[j + 1].deviance == c[i].deviance) ++j;
                const bool falls_in = i == 0 || c[i - 1].deviance > c[i].deviance;
                const bool rises_out = j + 1 == c.size() || c[j + 1].deviance > c[j].deviance;
                if (falls_in && rises_out) return c[i];
                i = j;
            }
            return c.front();  // unreachable
        }
        case BreakpointStrategy::manual: {
            if (!manual_split)
                throw DomainError("manual breakpoint strategy needs a split index");
            for (const auto& cand : c)
                if (cand.split_index == *manual_split) return cand;
            throw DomainError("manual split index " + std::to_string(*manual_split) +
                              " is not an admissible candidate");
        }
    }
    throw DomainError("unknown breakpoint strategy");
}

namespace {

template <typename Series>
Breakpoint select_impl(const DevianceCurve& curve, const Series& series,
                       BreakpointStrategy strategy,
                       std::optional<std::size_t> manual_split) {
    const DevianceCandidate& cand = choose_candidate(curve, strategy, manual_split);
    Breakpoint bp;
    bp.split_index = cand.split_index;
    bp.i_star = cand.split_rank;
    bp.f_of_i_star = breakpoint_frequency(series, cand.split_rank);
    bp.provenance = strategy;
    return bp;
}

// Rank interval convention: rank r owns [r - 0.5, r + 0.5), so a midpoint
// breakpoint like 4.5 belongs to the first rank of the second regime.
std::size_t containing_rank(double i_star, std::size_t n, const char* what) {
    const double r = std::floor(i_star + 0.5);
    if (!(r >= 1.0) || r > static_cast<double>(n))
        throw DomainError(std::string(what) + ": breakpoint rank " +
                          std::to_string(i_star) + " outside the series range");
    return static_cast<std::size_t>(r);
}

}  // namespace

double breakpoint_frequency(const RankedLexicon& lex, double i_star) {
    const std::size_t r = containing_rank(i_star, lex.size(), "breakpoint_frequency");
    return lex.records[r - 1].frequency;
}

double breakpoint_frequency(const BinnedSeries& series, double i_star) {
    const std::size_t covered = series.bins.size() * series.bin_size;
    const std::size_t r = containing_rank(i_star, covered, "breakpoint_frequency");
    return series.bins[(r - 1) / series.bin_size].mean_frequency;
}

Breakpoint select_breakpoint(const DevianceCurve& curve, const RankedLexicon& lex,
                             BreakpointStrategy strategy,
                             std::optional<std::size_t> manual_split) {
    return select_impl(curve, lex, strategy, manual_split);
}

Breakpoint select_breakpoint(const DevianceCurve& curve, const BinnedSeries& series,
                             BreakpointStrategy strategy,
                             std::optional<std::size_t> manual_split) {
    return select_impl(curve, series, strategy, manual_split);
}

namespace {

PowerLawFit fit_segment(const std::vector<Point>& pts, double sign, const char* segment) {
    if (pts.size() < 2)
        throw DegenerateFitError(std::string(segment) + " has fewer than 2 points");
    LogLogFit raw;
    try {
        raw = fit_loglog(pts);
    } catch (const DegenerateFitError& e) {
        throw DegenerateFitError(std::string(segment) + ": " + e.what());
    }
    PowerLawFit fit;
    fit.exponent = sign * raw.slope;
    fit.log_intercept = raw.intercept;
    fit.r_squared = raw.r_squared;
    fit.sse_log = raw.sse_log;
    fit.n_points = raw.n_points;
    return fit;
}

// Rank-split laws: regime 1 is x <= i_star. Frequency-split law: regime 1
// is x >= f(i_star), the boundary going to regime 1 in both cases.
TwoRegimeFit split_fit(const std::vector<Point>& pts, const Breakpoint& bp,
                       bool split_on_frequency, double sign) {
    std::vector<Point> regime1, regime2;
    for (const auto& p : pts) {
        const bool first = split_on_frequency ? p.x >= bp.f_of_i_star : p.x <= bp.i_star;
        (first ? regime1 : regime2).push_back(p);
    }
    TwoRegimeFit fit;
    fit.fit1 = fit_segment(regime1, sign, "regime 1");
    fit.fit2 = fit_segment(regime2, sign, "regime 2");
    fit.breakpoint = bp;
    fit.total_deviance = fit.fit1.sse_log + fit.fit2.sse_log;
    return fit;
}

}  // namespace

TwoRegimeFit two_regime_fit_rank_frequency(const RankedLexicon& lex, const Breakpoint& bp) {
    return split_fit(rank_frequency_points(lex), bp, false, -1.0);
}

TwoRegimeFit two_regime_fit_rank_frequency(const BinnedSeries& series, const Breakpoint& bp) {
    return split_fit(rank_frequency_points(series), bp, false, -1.0);
}

TwoRegimeFit two_regime_fit_meaning_distribution(const RankedLexicon& lex,
                                                 const Breakpoint& bp) {
    return split_fit(meaning_distribution_points(lex), bp, false, -1.0);
}

TwoRegimeFit two_regime_fit_meaning_distribution(const BinnedSeries& series,
                                                 const Breakpoint& bp) {
    return split_fit(meaning_distribution_points(series), bp, false, -1.0);
}

TwoRegimeFit two_regime_fit_meaning_frequency(const RankedLexicon& lex,
                                              const Breakpoint& bp) {
    return split_fit(meaning_frequency_points(lex), bp, true, 1.0);
}

TwoRegimeFit two_regime_fit_meaning_frequency(const BinnedSeries& series,
                                              const Breakpoint& bp) {
    return split_fit(meaning_frequency_points(series), bp, true, 1.0);
}

std::pair<double, double> predicted_deltas(double alpha1, double alpha2, double gamma1,
                                           double gamma2) {
    if (!(alpha1 > 0.0) || !(alpha2 > 0.0))
        throw DomainError("predicted_deltas requires positive alpha exponents");
    return {gamma1 / alpha1, gamma2 / alpha2};
}

}  // namespace zipflaw
