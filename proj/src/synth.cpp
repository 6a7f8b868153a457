#include "zipflaw/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include "zipflaw/errors.hpp"
#include "zipflaw/rng.hpp"

namespace zipflaw {

void validate(const SynthSpec& spec) {
    if (spec.n < 4) throw DomainError("synth spec: n must be >= 4");
    if (!(spec.alpha1 > 0.0) || !(spec.alpha2 > 0.0))
        throw DomainError("synth spec: alpha exponents must be > 0");
    if (spec.i_star < 1 || spec.i_star > spec.n)
        throw DomainError("synth spec: i_star must lie in [1, n]");
    if (!(spec.c > 0.0)) throw DomainError("synth spec: c must be > 0");
    if (spec.gamma1 < 0.0 || spec.gamma2 < 0.0)
        throw DomainError("synth spec: gamma exponents must be >= 0");
    if (!(spec.d >= 1.0)) throw DomainError("synth spec: d must be >= 1");
    if (spec.noise_sigma < 0.0) throw DomainError("synth spec: noise_sigma must be >= 0");
}

namespace {

double two_branch(double i, double i_star, double prefactor, double e1, double e2) {
    if (i <= i_star) return prefactor * std::pow(i, -e1);
    return prefactor * std::pow(i_star, e2 - e1) * std::pow(i, -e2);
}

std::string padded_lemma(std::size_t index, std::size_t width) {
    std::string digits = std::to_string(index);
    return "w" + std::string(width > digits.size() ? width - digits.size() : 0, '0') + digits;
}

void sort_and_rank(RankedLexicon& lex) {
    std::stable_sort(lex.records.begin(), lex.records.end(),
                     [](const LexiconRecord& a, const LexiconRecord& b) {
                         return a.frequency > b.frequency;
                     });
    for (std::size_t i = 0; i < lex.records.size(); ++i) lex.records[i].rank = i + 1;
}

}  // namespace

RankedLexicon generate(const SynthSpec& spec) {
    validate(spec);
    const std::size_t width = std::to_string(spec.n).size();
    SplitMix64 rng(spec.seed);

    RankedLexicon lex;
    lex.records.reserve(spec.n);
    for (std::size_t i = 1; i <= spec.n; ++i) {
        const double x = static_cast<double>(i);
        const double istar = static_cast<double>(spec.i_star);
        double f = two_branch(x, istar, spec.c, spec.alpha1, spec.alpha2);
        double mu = two_branch(x, istar, spec.d, spec.gamma1, spec.gamma2);
        if (spec.noise_sigma > 0.0) {
            f *= std::exp(spec.noise_sigma * rng.normal());
            mu *= std::exp(spec.noise_sigma * rng.normal());
        }
        LexiconRecord rec;
        rec.rank = i;
        rec.lemma = padded_lemma(i, width);
        rec.frequency = f;
        rec.senses = std::max(1.0, mu);
        lex.records.push_back(std::move(rec));
    }
    sort_and_rank(lex);
    return lex;
}

IntegerizeResult integerize(const RankedLexicon& lex, IntegerizeMode mode) {
    IntegerizeResult result;
    result.lexicon = lex;
    std::size_t below = 0;
    for (auto& rec : result.lexicon.records) {
        const double f = rec.frequency;
        const double fi = mode == IntegerizeMode::round ? std::round(f) : std::floor(f);
        if (fi < 1.0) {
            ++below;
            continue;
        }
        if (fi != f) {
            ++result.changed;
            result.max_rel_change = std::max(result.max_rel_change, std::fabs(fi - f) / f);
        }
        rec.frequency = fi;
    }
    if (below > 0)
        throw DomainError("integerize: " + std::to_string(below) +
                          " frequencies would fall below 1");
    sort_and_rank(result.lexicon);
    return result;
}

namespace {

double parse_real(const std::string& value, std::size_t line) {
    std::size_t used = 0;
    double parsed;
    try {
        parsed = std::stod(value, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "invalid number '" + value + "'");
    }
    if (used != value.size()) throw ParseError(line, "invalid number '" + value + "'");
    return parsed;
}

std::uint64_t parse_integer(const std::string& value, std::size_t line) {
    if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(line, "invalid integer '" + value + "'");
    try {
        return std::stoull(value);
    } catch (const std::exception&) {
        throw ParseError(line, "integer out of range '" + value + "'");
    }
}

std::string strip(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

SynthSpec parse_synth_spec(std::istream& in) {
    SynthSpec spec;
    bool saw_i_star = false;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string text = strip(raw);
        if (text.empty() || text[0] == '#') continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) throw ParseError(line, "expected key=value");
        const std::string key = strip(text.substr(0, eq));
        const std::string value = strip(text.substr(eq + 1));
        if (key == "n")
            spec.n = static_cast<std::size_t>(parse_integer(value, line));
        else if (key == "alpha1")
            spec.alpha1 = parse_real(value, line);
        else if (key == "alpha2")
            spec.alpha2 = parse_real(value, line);
        else if (key == "i_star") {
            spec.i_star = static_cast<std::size_t>(parse_integer(value, line));
            saw_i_star = true;
        } else if (key == "c")
            spec.c = parse_real(value, line);
        else if (key == "gamma1")
            spec.gamma1 = parse_real(value, line);
        else if (key == "gamma2")
            spec.gamma2 = parse_real(value, line);
        else if (key == "d")
            spec.d = parse_real(value, line);
        else if (key == "noise_sigma")
            spec.noise_sigma = parse_real(value, line);
        else if (key == "seed")
            spec.seed = parse_integer(value, line);
        else
            throw ParseError(line, "unknown key '" + key + "'");
    }
    if (!saw_i_star) spec.i_star = spec.n;  // single regime by default
    return spec;
}

void write_synth_spec(std::ostream& out, const SynthSpec& spec) {
    char buf[64];
    auto real = [&](const char* key, double v) {
        std::snprintf(buf, sizeof buf, "%s = %.17g\n", key, v);
        out << buf;
    };
    out << "n = " << spec.n << "\n";
    real("alpha1", spec.alpha1);
    real("alpha2", spec.alpha2);
    out << "i_star = " << spec.i_star << "\n";
    real("c", spec.c);
    real("gamma1", spec.gamma1);
    real("gamma2", spec.gamma2);
    real("d", spec.d);
    real("noise_sigma", spec.noise_sigma);
    out << "seed = " << spec.seed << "\n";
}

}  // namespace zipflaw
