#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zipflaw/binning.hpp"
#include "zipflaw/lexicon.hpp"
#include "zipflaw/regimes.hpp"

namespace zipflaw {

enum class RegimeMode { one, two, both };

struct AnalysisConfig {
    // Exactly one of frequency_file / tokens_file; meanings_file required.
    std::string frequency_file;
    std::string tokens_file;
    std::string meanings_file;
    TokenFilterConfig filter;

    bool include_raw = true;             // analyze the unbinned series
    std::vector<std::size_t> bin_sizes;  // additional equal-size binnings

    RegimeMode mode = RegimeMode::both;
    BreakpointStrategy strategy = BreakpointStrategy::first_local_min;
    std::optional<std::size_t> manual_split;
    std::size_t min_segment = 3;
    RemainderPolicy remainder_policy = RemainderPolicy::strict;

    std::string output_dir = ".";
    bool write_report = true;
    bool write_plot_data = true;
    bool write_figures = false;
};

/// Throws DomainError on a config violating its invariants (one input
/// source, meanings present, bin sizes >= 1).
void validate_config(const AnalysisConfig& config);

struct InputSummary {
    std::string frequency_file;
    std::string tokens_file;
    std::string meanings_file;
    std::size_t lemmas = 0;
    std::size_t dropped_corpus_only = 0;
    std::size_t dropped_dictionary_only = 0;
};

struct OneRegimeAnalysis {
    PowerLawFit rank_frequency;
    PowerLawFit meaning_distribution;
    PowerLawFit meaning_frequency;
};

/// The breakpoint is detected once, on the rank-frequency series; its rank
/// i* carries over to the meaning-distribution split and its frequency
/// f(i*) to the meaning-frequency split.
struct TwoRegimeAnalysis {
    DevianceCurve curve;
    Breakpoint breakpoint;
    TwoRegimeFit rank_frequency;
    TwoRegimeFit meaning_distribution;
    TwoRegimeFit meaning_frequency;
};

struct SeriesAnalysis {
    std::size_t bin_size = 0;  // 0 = raw (unbinned)
    BinnedSeries series;
    std::optional<OneRegimeAnalysis> one_regime;
    std::optional<TwoRegimeAnalysis> two_regime;
};

struct AnalysisResult {
    InputSummary input;
    std::vector<SeriesAnalysis> series;
};

/// Ingest the configured corpus source plus the meanings table, intersect
/// and rank. Errors propagate from the lexicon module.
std::pair<RankedLexicon, InputSummary> load_input(const AnalysisConfig& config);

/// Fit one series under the config's regime mode. `label_bin_size` is the
/// value recorded in the result (0 for raw); the series itself is always a
/// BinnedSeries, size-1 bins representing the raw records exactly.
SeriesAnalysis analyze_series(const BinnedSeries& series, std::size_t label_bin_size,
                              const AnalysisConfig& config);

/// Raw series first (when requested), then each configured bin size in
/// config order.
AnalysisResult analyze(const RankedLexicon& lexicon, InputSummary input,
                       const AnalysisConfig& config);

}  // namespace zipflaw
