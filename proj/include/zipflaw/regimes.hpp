#pragma once

#include <optional>
#include <utility>

#include "zipflaw/powerlaw.hpp"

namespace zipflaw {

struct DevianceCandidate {
    std::size_t split_index = 0;  // number of points in the left segment
    double split_rank = 0.0;      // midpoint of the x-values adjacent to the split
    double deviance = 0.0;        // sse_log(left fit) + sse_log(right fit)
};

struct DevianceCurve {
    std::vector<DevianceCandidate> candidates;  // split_index ascending
    std::size_t min_segment = 0;
    std::size_t n_points = 0;
};

enum class BreakpointStrategy { global_min, first_local_min, manual };

struct Breakpoint {
    std::size_t split_index = 0;
    double i_star = 0.0;       // rank-scale breakpoint
    double f_of_i_star = 0.0;  // frequency at the breakpoint
    BreakpointStrategy provenance = BreakpointStrategy::global_min;
};

struct TwoRegimeFit {
    PowerLawFit fit1;  // low ranks / high frequencies
    PowerLawFit fit2;  // high ranks / low frequencies
    Breakpoint breakpoint;
    double total_deviance = 0.0;  // fit1.sse_log + fit2.sse_log
};

/// Exhaustive scan: for every split leaving at least min_segment points per
/// side, both sides are fit independently in log-log space and the summed
/// squared error recorded. Points must have strictly increasing positive x.
DevianceCurve deviance_scan(std::span<const Point> points, std::size_t min_segment = 3);

/// Candidates strictly below both neighbours; boundary candidates compare
/// against their single neighbour. A plateau counts once, at its leftmost
/// index. Ordered by split_index ascending.
std::vector<DevianceCandidate> local_minima(const DevianceCurve& curve);

/// Strategy selection on the curve alone; deviance ties keep the earliest
/// split. `manual_split` is the requested split_index (manual strategy only).
const DevianceCandidate& choose_candidate(const DevianceCurve& curve,
                                          BreakpointStrategy strategy,
                                          std::optional<std::size_t> manual_split = {});

// Breakpoint selection: i_star is the chosen candidate's split_rank; the
// frequency at the breakpoint is looked up in the series.
Breakpoint select_breakpoint(const DevianceCurve& curve, const RankedLexicon& lex,
                             BreakpointStrategy strategy,
                             std::optional<std::size_t> manual_split = {});
Breakpoint select_breakpoint(const DevianceCurve& curve, const BinnedSeries& series,
                             BreakpointStrategy strategy,
                             std::optional<std::size_t> manual_split = {});

/// Frequency at a (possibly fractional) rank: the record whose rank
/// interval [i - 0.5, i + 0.5) contains i_star, or for binned input the
/// mean frequency of the bin whose rank interval contains i_star.
double breakpoint_frequency(const RankedLexicon& lex, double i_star);
double breakpoint_frequency(const BinnedSeries& series, double i_star);

// Independent per-side fits, no continuity constraint. The rank laws split
// at rank <= i_star; the meaning-frequency law splits at frequency >=
// f(i_star), the boundary itself belonging to regime 1.
TwoRegimeFit two_regime_fit_rank_frequency(const RankedLexicon& lex, const Breakpoint& bp);
TwoRegimeFit two_regime_fit_rank_frequency(const BinnedSeries& series, const Breakpoint& bp);
TwoRegimeFit two_regime_fit_meaning_distribution(const RankedLexicon& lex, const Breakpoint& bp);
TwoRegimeFit two_regime_fit_meaning_distribution(const BinnedSeries& series, const Breakpoint& bp);
TwoRegimeFit two_regime_fit_meaning_frequency(const RankedLexicon& lex, const Breakpoint& bp);
TwoRegimeFit two_regime_fit_meaning_frequency(const BinnedSeries& series, const Breakpoint& bp);

/// Per-regime predictions (gamma1 / alpha1, gamma2 / alpha2).
std::pair<double, double> predicted_deltas(double alpha1, double alpha2,
                                           double gamma1, double gamma2);

}  // namespace zipflaw
