#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zipflaw/analysis.hpp"
#include "zipflaw/binning.hpp"
#include "zipflaw/errors.hpp"
#include "zipflaw/report.hpp"
#include "zipflaw/synth.hpp"

namespace fs = std::filesystem;
using namespace zipflaw;

namespace {

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw DomainError("short write on '" + path.string() + "'");
}

int cmd_bins(std::size_t n) {
    const auto sizes = valid_bin_sizes(n);
    for (std::size_t i = 0; i < sizes.size(); ++i)
        std::cout << (i ? " " : "") << sizes[i];
    std::cout << "\n";
    return 0;
}

int cmd_analyze(const AnalysisConfig& config) {
    auto [lexicon, input] = load_input(config);
    const AnalysisResult result = analyze(lexicon, std::move(input), config);

    const fs::path out_dir = config.output_dir;
    fs::create_directories(out_dir);

    if (config.write_plot_data) {
        for (const auto& s : result.series) {
            const std::string label = series_label(s.bin_size);
            {
                std::ostringstream tsv;
                write_series_tsv(tsv, s.series);
                write_file(out_dir / ("series_" + label + ".tsv"), tsv.str());
            }
            if (s.two_regime) {
                std::ostringstream tsv;
                write_deviance_tsv(tsv, s.two_regime->curve);
                write_file(out_dir / ("deviance_" + label + ".tsv"), tsv.str());
            }
        }
    }

    const std::string json_text = report_json(result, config);
    const std::string summary = summary_table(result);
    if (config.write_report) {
        write_file(out_dir / "report.json", json_text);
        write_file(out_dir / "summary.txt", summary);
    }
    if (config.write_figures)
        for (const auto& [name, svg] : figures_from_report(json_text, out_dir))
            write_file(out_dir / name, svg);

    std::cout << summary;
    return 0;
}

int cmd_plot(const std::string& report_path, std::string out_dir) {
    std::ifstream in(report_path, std::ios::binary);
    if (!in) throw DomainError("cannot open '" + report_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();

    const fs::path report_dir = fs::path(report_path).parent_path();
    if (out_dir.empty()) out_dir = report_dir.empty() ? "." : report_dir.string();
    fs::create_directories(out_dir);

    const auto figures = figures_from_report(buf.str(), report_dir);
    for (const auto& [name, svg] : figures) write_file(fs::path(out_dir) / name, svg);
    std::cout << figures.size() << " figures written to " << out_dir << "\n";
    return 0;
}

int cmd_synth(const SynthSpec& spec, IntegerizeMode mode, const std::string& freq_path,
              const std::string& meanings_path, const std::string& spec_out) {
    const RankedLexicon lexicon = generate(spec);
    const IntegerizeResult integ = integerize(lexicon, mode);

    std::ofstream freq_out(freq_path, std::ios::binary);
    if (!freq_out) throw DomainError("cannot write '" + freq_path + "'");
    std::ofstream meanings_out(meanings_path, std::ios::binary);
    if (!meanings_out) throw DomainError("cannot write '" + meanings_path + "'");
    write_lexicon_tables(freq_out, meanings_out, integ.lexicon);

    if (!spec_out.empty()) {
        std::ofstream out(spec_out, std::ios::binary);
        if (!out) throw DomainError("cannot write '" + spec_out + "'");
        write_synth_spec(out, spec);
    }
    std::cout << "n=" << integ.lexicon.size() << " integerized=" << integ.changed
              << " max_rel_change=" << integ.max_rel_change << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rank-frequency, meaning-distribution and meaning-frequency power laws:\n"
                 "fit lexicons in one- or two-regime form and report the exponents."};
    app.require_subcommand(1);

    auto* bins = app.add_subcommand("bins", "List the bin sizes that divide n evenly");
    std::size_t bins_n = 0;
    bins->add_option("n", bins_n, "lexicon size")->required();

    auto* analyze_cmd =
        app.add_subcommand("analyze", "Fit the three laws and write reports");
    AnalysisConfig config;
    std::vector<std::string> exclude_tags;
    bool no_raw = false, drop_tail = false, no_report = false, no_plot_data = false;
    analyze_cmd->add_option("--frequencies", config.frequency_file,
                            "lemma\\tcount TSV input");
    analyze_cmd->add_option("--tokens", config.tokens_file,
                            "form\\tlemma\\ttag token stream input");
    analyze_cmd->add_option("--meanings", config.meanings_file,
                            "lemma\\tsenses TSV input")->required();
    analyze_cmd->add_option("--exclude-tags", exclude_tags,
                            "tag classes dropped from the token stream "
                            "(default: punctuation number proper_noun)");
    analyze_cmd->add_option("--bins", config.bin_sizes, "equal-size bin sizes to analyze");
    analyze_cmd->add_flag("--no-raw", no_raw, "skip the unbinned series");
    analyze_cmd
        ->add_option("--mode", config.mode, "one | two | both regimes")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, RegimeMode>{{"one", RegimeMode::one},
                                              {"two", RegimeMode::two},
                                              {"both", RegimeMode::both}}));
    analyze_cmd
        ->add_option("--strategy", config.strategy, "breakpoint choice on the deviance curve")
        ->transform(CLI::CheckedTransformer(std::map<std::string, BreakpointStrategy>{
            {"global-min", BreakpointStrategy::global_min},
            {"first-local-min", BreakpointStrategy::first_local_min},
            {"manual", BreakpointStrategy::manual}}));
    std::size_t manual_split = 0;
    auto* split_opt = analyze_cmd->add_option("--split-index", manual_split,
                                              "left segment size for --strategy manual");
    analyze_cmd->add_option("--min-segment", config.min_segment,
                            "minimum points per regime in the scan");
    analyze_cmd->add_flag("--drop-tail", drop_tail,
                          "drop the remainder instead of requiring divisibility");
    analyze_cmd->add_option("--out", config.output_dir, "output directory");
    analyze_cmd->add_flag("--no-report", no_report, "skip report.json and summary.txt");
    analyze_cmd->add_flag("--no-plot-data", no_plot_data, "skip series/deviance TSVs");
    analyze_cmd->add_flag("--svg", config.write_figures, "render SVG figures");

    auto* plot = app.add_subcommand("plot", "Render SVG figures from a saved report");
    std::string report_path, plot_out;
    plot->add_option("--report", report_path, "report.json from analyze")->required();
    plot->add_option("--out", plot_out, "output directory (default: the report's)");

    auto* synth = app.add_subcommand("synth", "Generate a power-law lexicon");
    SynthSpec spec;
    std::string spec_path, freq_path, meanings_path, spec_out;
    IntegerizeMode integerize_mode = IntegerizeMode::round;
    synth->add_option("--spec", spec_path, "key=value spec file (flags override)");
    auto* opt_n = synth->add_option("--n", spec.n, "lexicon size");
    auto* opt_a1 = synth->add_option("--alpha1", spec.alpha1, "regime-1 frequency exponent");
    auto* opt_a2 = synth->add_option("--alpha2", spec.alpha2, "regime-2 frequency exponent");
    auto* opt_is = synth->add_option("--i-star", spec.i_star, "regime boundary rank (default n)");
    auto* opt_c = synth->add_option("--c", spec.c, "frequency prefactor");
    auto* opt_g1 = synth->add_option("--gamma1", spec.gamma1, "regime-1 senses exponent");
    auto* opt_g2 = synth->add_option("--gamma2", spec.gamma2, "regime-2 senses exponent");
    auto* opt_d = synth->add_option("--d", spec.d, "senses prefactor");
    auto* opt_sigma = synth->add_option("--sigma", spec.noise_sigma, "lognormal noise sigma");
    auto* opt_seed = synth->add_option("--seed", spec.seed, "noise seed");
    synth
        ->add_option("--integerize", integerize_mode, "round | floor frequencies")
        ->transform(CLI::CheckedTransformer(std::map<std::string, IntegerizeMode>{
            {"round", IntegerizeMode::round}, {"floor", IntegerizeMode::floor}}));
    synth->add_option("--out-frequencies", freq_path, "frequency TSV output")->required();
    synth->add_option("--out-meanings", meanings_path, "meanings TSV output")->required();
    synth->add_option("--write-spec", spec_out, "also save the effective spec");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*bins) return cmd_bins(bins_n);
        if (*analyze_cmd) {
            config.include_raw = !no_raw;
            config.write_report = !no_report;
            config.write_plot_data = !no_plot_data;
            if (drop_tail) config.remainder_policy = RemainderPolicy::drop_tail;
            if (*split_opt) config.manual_split = manual_split;
            if (!exclude_tags.empty())
                config.filter.excluded_tags = {exclude_tags.begin(), exclude_tags.end()};
            return cmd_analyze(config);
        }
        if (*plot) return cmd_plot(report_path, plot_out);
        if (*synth) {
            if (!spec_path.empty()) {
                std::ifstream in(spec_path);
                if (!in) throw DomainError("cannot open '" + spec_path + "'");
                SynthSpec from_file;
                try {
                    from_file = parse_synth_spec(in);
                } catch (const ParseError& e) {
                    throw Error(spec_path + ": " + e.what());
                }
                if (!*opt_n) spec.n = from_file.n;
                if (!*opt_a1) spec.alpha1 = from_file.alpha1;
                if (!*opt_a2) spec.alpha2 = from_file.alpha2;
                if (!*opt_is) spec.i_star = from_file.i_star;
                if (!*opt_c) spec.c = from_file.c;
                if (!*opt_g1) spec.gamma1 = from_file.gamma1;
                if (!*opt_g2) spec.gamma2 = from_file.gamma2;
                if (!*opt_d) spec.d = from_file.d;
                if (!*opt_sigma) spec.noise_sigma = from_file.noise_sigma;
                if (!*opt_seed) spec.seed = from_file.seed;
            } else if (!*opt_is) {
                spec.i_star = spec.n;  // single regime unless told otherwise
            }
            return cmd_synth(spec, integerize_mode, freq_path, meanings_path, spec_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "zipflaw: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
