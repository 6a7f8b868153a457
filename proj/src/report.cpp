#include "zipflaw/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "zipflaw/errors.hpp"
#include "zipflaw/svg_plot.hpp"

namespace zipflaw {

using json = nlohmann::ordered_json;

double round_sig(double x, int digits) {
    if (!std::isfinite(x) || x == 0.0) return x;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return std::strtod(buf, nullptr);
}

std::string series_label(std::size_t bin_size) {
    return bin_size == 0 ? "raw" : "bin" + std::to_string(bin_size);
}

namespace {

constexpr int kJsonDigits = 6;

double r6(double x) { return round_sig(x, kJsonDigits); }

json fit_json(const PowerLawFit& fit) {
    return {{"exponent", r6(fit.exponent)},
            {"log_intercept", r6(fit.log_intercept)},
            {"r_squared", r6(fit.r_squared)},
            {"sse_log", r6(fit.sse_log)},
            {"n_points", fit.n_points}};
}

json two_fit_json(const TwoRegimeFit& fit) {
    return {{"fit1", fit_json(fit.fit1)},
            {"fit2", fit_json(fit.fit2)},
            {"total_deviance", r6(fit.total_deviance)}};
}

const char* mode_name(RegimeMode mode) {
    switch (mode) {
        case RegimeMode::one: return "one";
        case RegimeMode::two: return "two";
        case RegimeMode::both: return "both";
    }
    return "?";
}

const char* strategy_name(BreakpointStrategy strategy) {
    switch (strategy) {
        case BreakpointStrategy::global_min: return "global_min";
        case BreakpointStrategy::first_local_min: return "first_local_min";
        case BreakpointStrategy::manual: return "manual";
    }
    return "?";
}

json one_regime_json(const OneRegimeAnalysis& one) {
    json j;
    j["rank_frequency"] = fit_json(one.rank_frequency);
    j["meaning_distribution"] = fit_json(one.meaning_distribution);
    j["meaning_frequency"] = fit_json(one.meaning_frequency);
    // The predicted delta is the exact quotient of the rounded exponents
    // reported above, so the relation checks out on the report itself.
    const double alpha = r6(one.rank_frequency.exponent);
    const double gamma = r6(one.meaning_distribution.exponent);
    const double delta = r6(one.meaning_frequency.exponent);
    const double predicted = gamma / alpha;
    j["alpha"] = alpha;
    j["gamma"] = gamma;
    j["delta"] = delta;
    j["delta_predicted"] = predicted;
    j["delta_abs_diff"] = r6(std::fabs(delta - predicted));
    return j;
}

json two_regime_json(const TwoRegimeAnalysis& two, const std::string& label,
                     bool with_files) {
    json j;
    if (with_files) j["deviance_file"] = "deviance_" + label + ".tsv";
    j["breakpoint"] = {{"split_index", two.breakpoint.split_index},
                       {"i_star", r6(two.breakpoint.i_star)},
                       {"f_of_i_star", r6(two.breakpoint.f_of_i_star)},
                       {"strategy", strategy_name(two.breakpoint.provenance)}};
    j["rank_frequency"] = two_fit_json(two.rank_frequency);
    j["meaning_distribution"] = two_fit_json(two.meaning_distribution);
    j["meaning_frequency"] = two_fit_json(two.meaning_frequency);
    const double a1 = r6(two.rank_frequency.fit1.exponent);
    const double a2 = r6(two.rank_frequency.fit2.exponent);
    const double g1 = r6(two.meaning_distribution.fit1.exponent);
    const double g2 = r6(two.meaning_distribution.fit2.exponent);
    const double d1 = r6(two.meaning_frequency.fit1.exponent);
    const double d2 = r6(two.meaning_frequency.fit2.exponent);
    const double p1 = g1 / a1;
    const double p2 = g2 / a2;
    j["alpha1"] = a1;
    j["alpha2"] = a2;
    j["gamma1"] = g1;
    j["gamma2"] = g2;
    j["delta1"] = d1;
    j["delta2"] = d2;
    j["delta1_predicted"] = p1;
    j["delta2_predicted"] = p2;
    j["delta1_abs_diff"] = r6(std::fabs(d1 - p1));
    j["delta2_abs_diff"] = r6(std::fabs(d2 - p2));
    return j;
}

}  // namespace

std::string report_json(const AnalysisResult& result, const AnalysisConfig& config) {
    json doc;
    doc["tool"] = "zipflaw";
    doc["input"] = {{"frequency_file", result.input.frequency_file},
                    {"tokens_file", result.input.tokens_file},
                    {"meanings_file", result.input.meanings_file},
                    {"lemmas", result.input.lemmas},
                    {"dropped_corpus_only", result.input.dropped_corpus_only},
                    {"dropped_dictionary_only", result.input.dropped_dictionary_only}};
    json options;
    options["mode"] = mode_name(config.mode);
    options["strategy"] = strategy_name(config.strategy);
    if (config.manual_split) options["manual_split"] = *config.manual_split;
    options["min_segment"] = config.min_segment;
    options["remainder_policy"] =
        config.remainder_policy == RemainderPolicy::strict ? "strict" : "drop_tail";
    options["include_raw"] = config.include_raw;
    options["bin_sizes"] = config.bin_sizes;
    doc["options"] = options;

    doc["analyses"] = json::array();
    for (const auto& s : result.series) {
        const std::string label = series_label(s.bin_size);
        json entry;
        entry["label"] = label;
        entry["bin_size"] = s.bin_size;
        entry["n_points"] = s.series.bins.size();
        entry["dropped_records"] = s.series.dropped;
        if (config.write_plot_data) entry["series_file"] = "series_" + label + ".tsv";
        if (s.one_regime) entry["one_regime"] = one_regime_json(*s.one_regime);
        if (s.two_regime)
            entry["two_regime"] =
                two_regime_json(*s.two_regime, label, config.write_plot_data);
        doc["analyses"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

namespace {

std::size_t visual_length(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++n;  // count codepoints, not bytes
    return n;
}

std::string pad(const std::string& s, std::size_t width) {
    const std::size_t len = visual_length(s);
    return std::string(len < width ? width - len : 0, ' ') + s;
}

std::string fixed3(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

std::string fixed1(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f", x);
    return buf;
}

double round3(double x) { return std::round(x * 1000.0) / 1000.0; }

}  // namespace

std::string summary_table(const AnalysisResult& result) {
    constexpr std::size_t w = 9;
    std::string out;

    bool any_one = false, any_two = false;
    for (const auto& s : result.series) {
        any_one = any_one || s.one_regime.has_value();
        any_two = any_two || s.two_regime.has_value();
    }

    if (any_one) {
        out += "one regime\n";
        out += pad("bin_size", w);
        for (const char* h : {"α", "γ", "δ", "δ'"}) out += pad(h, w);
        out += "\n";
        for (const auto& s : result.series) {
            if (!s.one_regime) continue;
            const double alpha = round3(s.one_regime->rank_frequency.exponent);
            const double gamma = round3(s.one_regime->meaning_distribution.exponent);
            const double delta = round3(s.one_regime->meaning_frequency.exponent);
            out += pad(series_label(s.bin_size), w);
            out += pad(fixed3(alpha), w);
            out += pad(fixed3(gamma), w);
            out += pad(fixed3(delta), w);
            out += pad(fixed3(gamma / alpha), w);
            out += "\n";
        }
    }
    if (any_two) {
        if (any_one) out += "\n";
        out += "two regimes\n";
        out += pad("bin_size", w);
        for (const char* h : {"α1", "α2", "γ1", "γ2", "δ1", "δ'1", "δ2", "δ'2"})
            out += pad(h, w);
        out += pad("i*", 10) + pad("f(i*)", 15) + "\n";
        for (const auto& s : result.series) {
            if (!s.two_regime) continue;
            const auto& t = *s.two_regime;
            const double a1 = round3(t.rank_frequency.fit1.exponent);
            const double a2 = round3(t.rank_frequency.fit2.exponent);
            const double g1 = round3(t.meaning_distribution.fit1.exponent);
            const double g2 = round3(t.meaning_distribution.fit2.exponent);
            const double d1 = round3(t.meaning_frequency.fit1.exponent);
            const double d2 = round3(t.meaning_frequency.fit2.exponent);
            out += pad(series_label(s.bin_size), w);
            for (double v : {a1, a2, g1, g2, d1, g1 / a1, d2, g2 / a2})
                out += pad(fixed3(v), w);
            out += pad(fixed1(t.breakpoint.i_star), 10);
            out += pad(fixed3(t.breakpoint.f_of_i_star), 15);
            out += "\n";
        }
    }
    return out;
}

namespace {

std::vector<std::string> tsv_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto tab = line.find('\t', start);
        fields.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
        if (tab == std::string::npos) break;
        start = tab + 1;
    }
    return fields;
}

double tsv_double(const std::string& field, std::size_t line) {
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (field.empty() || end != field.c_str() + field.size())
        throw ParseError(line, "invalid number '" + field + "'");
    return v;
}

}  // namespace

void write_series_tsv(std::ostream& out, const BinnedSeries& series) {
    out << "# bin_index\tmean_rank\tmean_frequency\tmean_senses\tmember_count\n";
    char buf[144];
    for (std::size_t i = 0; i < series.bins.size(); ++i) {
        const Bin& bin = series.bins[i];
        std::snprintf(buf, sizeof buf, "%zu\t%.17g\t%.17g\t%.17g\t%zu\n", i + 1,
                      bin.mean_rank, bin.mean_frequency, bin.mean_senses,
                      bin.member_count);
        out << buf;
    }
}

BinnedSeries read_series_tsv(std::istream& in) {
    BinnedSeries series;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto fields = tsv_fields(line);
        if (fields.size() != 5) throw ParseError(lineno, "expected 5 tab-separated fields");
        Bin bin;
        bin.mean_rank = tsv_double(fields[1], lineno);
        bin.mean_frequency = tsv_double(fields[2], lineno);
        bin.mean_senses = tsv_double(fields[3], lineno);
        bin.member_count = static_cast<std::size_t>(tsv_double(fields[4], lineno));
        series.bins.push_back(bin);
    }
    series.bin_size = series.bins.empty() ? 1 : series.bins.front().member_count;
    series.dropped = 0;
    return series;
}

void write_deviance_tsv(std::ostream& out, const DevianceCurve& curve) {
    out << "# split_index\tsplit_rank\tdeviance\n";
    char buf[96];
    for (const auto& c : curve.candidates) {
        std::snprintf(buf, sizeof buf, "%zu\t%.17g\t%.17g\n", c.split_index, c.split_rank,
                      c.deviance);
        out << buf;
    }
}

DevianceCurve read_deviance_tsv(std::istream& in) {
    DevianceCurve curve;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto fields = tsv_fields(line);
        if (fields.size() != 3) throw ParseError(lineno, "expected 3 tab-separated fields");
        DevianceCandidate cand;
        cand.split_index = static_cast<std::size_t>(tsv_double(fields[0], lineno));
        cand.split_rank = tsv_double(fields[1], lineno);
        cand.deviance = tsv_double(fields[2], lineno);
        curve.candidates.push_back(cand);
    }
    if (!curve.candidates.empty()) {
        curve.min_segment = curve.candidates.front().split_index;
        curve.n_points = curve.candidates.back().split_index + curve.min_segment;
    }
    return curve;
}

namespace {

struct LawView {
    const char* key;
    const char* name;       // figure title fragment
    const char* x_label;
    const char* y_label;
    double sign;            // exponent -> log-log slope
    bool split_on_frequency;
};

constexpr LawView kLaws[] = {
    {"rank_frequency", "rank-frequency", "rank", "frequency", -1.0, false},
    {"meaning_distribution", "meaning distribution", "rank", "senses", -1.0, false},
    {"meaning_frequency", "meaning-frequency", "frequency", "senses", 1.0, true},
};

std::vector<Point> law_points(const LawView& law, const BinnedSeries& series) {
    if (law.key == std::string("rank_frequency")) return rank_frequency_points(series);
    if (law.key == std::string("meaning_distribution"))
        return meaning_distribution_points(series);
    return meaning_frequency_points(series);
}

FigureLine line_from_fit(const json& fit, double sign, double x_min, double x_max) {
    FigureLine line;
    line.slope = sign * fit.at("exponent").get<double>();
    line.intercept = fit.at("log_intercept").get<double>();
    line.x_min = x_min;
    line.x_max = x_max;
    return line;
}

std::pair<double, double> x_range(const std::vector<Point>& points) {
    if (points.empty())
        throw DomainError("a fitted segment has no points on its side of the breakpoint");
    double lo = points.front().x, hi = points.front().x;
    for (const auto& p : points) {
        lo = std::min(lo, p.x);
        hi = std::max(hi, p.x);
    }
    return {lo, hi};
}

BinnedSeries load_series(const std::filesystem::path& dir, const json& entry) {
    if (!entry.contains("series_file"))
        throw DomainError("report carries no plot data files; rerun the analysis with "
                          "plot data enabled");
    const auto path = dir / entry.at("series_file").get<std::string>();
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open '" + path.string() + "'");
    return read_series_tsv(in);
}

}  // namespace

std::vector<std::pair<std::string, std::string>> figures_from_report(
    const std::string& report_json_text, const std::filesystem::path& dir) {
    json doc;
    try {
        doc = json::parse(report_json_text);
    } catch (const std::exception& e) {
        throw ParseError(0, std::string("report is not valid JSON: ") + e.what());
    }

    std::vector<std::pair<std::string, std::string>> figures;
    for (const auto& entry : doc.at("analyses")) {
        const std::string label = entry.at("label").get<std::string>();
        const BinnedSeries series = load_series(dir, entry);

        if (entry.contains("one_regime")) {
            const json& one = entry.at("one_regime");
            for (const LawView& law : kLaws) {
                Figure fig;
                fig.title = label + " " + law.name;
                fig.x_label = law.x_label;
                fig.y_label = law.y_label;
                fig.points = law_points(law, series);
                const auto [lo, hi] = x_range(fig.points);
                fig.lines.push_back(line_from_fit(one.at(law.key), law.sign, lo, hi));
                figures.emplace_back(label + "_" + law.key + ".svg", render_svg(fig));
            }
        }
        if (entry.contains("two_regime")) {
            const json& two = entry.at("two_regime");
            const json& bp = two.at("breakpoint");
            const double i_star = bp.at("i_star").get<double>();
            const double f_star = bp.at("f_of_i_star").get<double>();
            for (const LawView& law : kLaws) {
                Figure fig;
                fig.title = label + " " + law.name + " (two regimes)";
                fig.x_label = law.x_label;
                fig.y_label = law.y_label;
                fig.points = law_points(law, series);
                fig.marker_x = law.split_on_frequency ? f_star : i_star;
                std::vector<Point> first, second;
                for (const auto& p : fig.points) {
                    const bool in_first =
                        law.split_on_frequency ? p.x >= f_star : p.x <= i_star;
                    (in_first ? first : second).push_back(p);
                }
                const json& fits = two.at(law.key);
                const auto [lo1, hi1] = x_range(first);
                const auto [lo2, hi2] = x_range(second);
                fig.lines.push_back(line_from_fit(fits.at("fit1"), law.sign, lo1, hi1));
                fig.lines.push_back(line_from_fit(fits.at("fit2"), law.sign, lo2, hi2));
                figures.emplace_back(label + "_" + law.key + "_two.svg", render_svg(fig));
            }
            if (two.contains("deviance_file")) {
                const auto path = dir / two.at("deviance_file").get<std::string>();
                std::ifstream in(path);
                if (!in) throw DomainError("cannot open '" + path.string() + "'");
                const DevianceCurve curve = read_deviance_tsv(in);
                Figure fig;
                fig.title = label + " deviance scan";
                fig.x_label = "split rank";
                fig.y_label = "deviance";
                fig.log_y = false;
                fig.marker_x = i_star;
                for (const auto& c : curve.candidates)
                    fig.points.push_back({c.split_rank, c.deviance});
                figures.emplace_back(label + "_deviance.svg", render_svg(fig));
            }
        }
    }
    return figures;
}

}  // namespace zipflaw
