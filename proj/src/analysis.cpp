#include "zipflaw/analysis.hpp"

#include <fstream>

#include "zipflaw/errors.hpp"

namespace zipflaw {

void validate_config(const AnalysisConfig& config) {
    const bool has_freq = !config.frequency_file.empty();
    const bool has_tokens = !config.tokens_file.empty();
    if (has_freq == has_tokens)
        throw DomainError("exactly one corpus source required: a frequency file or a token file");
    if (config.meanings_file.empty())
        throw DomainError("a meanings file is required");
    for (std::size_t b : config.bin_sizes)
        if (b < 1) throw DomainError("bin sizes must be >= 1");
    if (!config.include_raw && config.bin_sizes.empty())
        throw DomainError("nothing to analyze: raw disabled and no bin sizes given");
    if (config.strategy == BreakpointStrategy::manual && !config.manual_split &&
        config.mode != RegimeMode::one)
        throw DomainError("manual breakpoint strategy needs a split index");
    if (config.write_figures && !config.write_plot_data)
        throw DomainError("figures need the plot data files; enable plot data output");
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open '" + path + "'");
    return in;
}

template <typename F>
auto ingest_file(const std::string& path, F&& parse) {
    auto in = open_or_throw(path);
    try {
        return parse(in);
    } catch (const ParseError& e) {
        throw Error(path + ": " + e.what());
    }
}

}  // namespace

std::pair<RankedLexicon, InputSummary> load_input(const AnalysisConfig& config) {
    validate_config(config);

    FrequencyTable freq;
    if (!config.frequency_file.empty())
        freq = ingest_file(config.frequency_file,
                           [](std::istream& in) { return ingest_frequency_table(in); });
    else
        freq = ingest_file(config.tokens_file, [&](std::istream& in) {
            return ingest_token_stream(in, config.filter);
        });
    const MeaningTable meanings = ingest_file(
        config.meanings_file, [](std::istream& in) { return ingest_meaning_table(in); });

    const JoinedTable joined = intersect(freq, meanings);

    InputSummary summary;
    summary.frequency_file = config.frequency_file;
    summary.tokens_file = config.tokens_file;
    summary.meanings_file = config.meanings_file;
    summary.lemmas = joined.entries.size();
    summary.dropped_corpus_only = joined.dropped_corpus_only;
    summary.dropped_dictionary_only = joined.dropped_dictionary_only;
    return {rank(joined), std::move(summary)};
}

SeriesAnalysis analyze_series(const BinnedSeries& series, std::size_t label_bin_size,
                              const AnalysisConfig& config) {
    SeriesAnalysis out;
    out.bin_size = label_bin_size;
    out.series = series;

    if (config.mode != RegimeMode::two) {
        OneRegimeAnalysis one;
        one.rank_frequency = fit_rank_frequency(series);
        one.meaning_distribution = fit_meaning_distribution(series);
        one.meaning_frequency = fit_meaning_frequency(series);
        out.one_regime = std::move(one);
    }
    if (config.mode != RegimeMode::one) {
        TwoRegimeAnalysis two;
        const auto rf_points = rank_frequency_points(series);
        two.curve = deviance_scan(rf_points, config.min_segment);
        two.breakpoint =
            select_breakpoint(two.curve, series, config.strategy, config.manual_split);
        two.rank_frequency = two_regime_fit_rank_frequency(series, two.breakpoint);
        two.meaning_distribution = two_regime_fit_meaning_distribution(series, two.breakpoint);
        two.meaning_frequency = two_regime_fit_meaning_frequency(series, two.breakpoint);
        out.two_regime = std::move(two);
    }
    return out;
}

AnalysisResult analyze(const RankedLexicon& lexicon, InputSummary input,
                       const AnalysisConfig& config) {
    validate_config(config);
    AnalysisResult result;
    result.input = std::move(input);
    if (config.include_raw)
        result.series.push_back(
            analyze_series(equal_size_bin(lexicon, 1), 0, config));
    for (std::size_t b : config.bin_sizes)
        result.series.push_back(analyze_series(
            equal_size_bin(lexicon, b, config.remainder_policy), b, config));
    return result;
}

}  // namespace zipflaw
