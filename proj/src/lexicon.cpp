#include "zipflaw/lexicon.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>

#include "zipflaw/errors.hpp"

namespace zipflaw {

namespace {

std::string trim(const std::string& s) {
    const char* ws = " \t\r\n";
    auto begin = s.find_first_not_of(ws);
    if (begin == std::string::npos) return {};
    auto end = s.find_last_not_of(ws);
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_fields(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        auto pos = line.find(delimiter, start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

bool skippable(const std::string& line) {
    if (!line.empty() && line.front() == '#') return true;
    return trim(line).empty();
}

Count parse_count(const std::string& field, std::size_t line_number,
                  const char* what) {
    std::string s = trim(field);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(line_number,
                         std::string(what) + " is not a positive integer: '" + s + "'");
    Count value = 0;
    for (char ch : s) {
        Count digit = static_cast<Count>(ch - '0');
        if (value > (UINT64_MAX - digit) / 10)
            throw ParseError(line_number, std::string(what) + " overflows: '" + s + "'");
        value = value * 10 + digit;
    }
    if (value < 1)
        throw ParseError(line_number, std::string(what) + " must be >= 1, got 0");
    return value;
}

// Shared two-column "lemma <delim> count" reader.
std::map<std::string, Count> ingest_two_column(std::istream& in, char delimiter,
                                               const char* count_name) {
    std::map<std::string, Count> entries;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (skippable(line)) continue;
        auto fields = split_fields(line, delimiter);
        if (fields.size() != 2)
            throw ParseError(line_number, "expected 2 fields, got " +
                                              std::to_string(fields.size()));
        std::string lemma = trim(fields[0]);
        if (lemma.empty())
            throw ParseError(line_number, "empty lemma");
        entries[lemma] += parse_count(fields[1], line_number, count_name);
    }
    return entries;
}

}  // namespace

FrequencyTable ingest_frequency_table(std::istream& in, char delimiter) {
    return FrequencyTable{ingest_two_column(in, delimiter, "count")};
}

MeaningTable ingest_meaning_table(std::istream& in, char delimiter) {
    return MeaningTable{ingest_two_column(in, delimiter, "sense count")};
}

FrequencyTable ingest_token_stream(std::istream& in, const TokenFilterConfig& config,
                                   char delimiter) {
    FrequencyTable table;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (skippable(line)) continue;
        auto fields = split_fields(line, delimiter);
        if (fields.size() != 3)
            throw ParseError(line_number, "expected 3 fields (surface, lemma, tag), got " +
                                              std::to_string(fields.size()));
        std::string lemma = trim(fields[1]);
        if (lemma.empty())
            throw ParseError(line_number, "empty lemma");
        std::string tag = trim(fields[2]);
        if (config.excluded_tags.count(tag)) continue;
        ++table.entries[lemma];
    }
    return table;
}

JoinedTable intersect(const FrequencyTable& freq, const MeaningTable& meanings) {
    JoinedTable joined;
    for (const auto& [lemma, count] : freq.entries) {
        auto it = meanings.entries.find(lemma);
        if (it == meanings.entries.end())
            ++joined.dropped_corpus_only;
        else
            joined.entries.emplace(lemma, std::make_pair(count, it->second));
    }
    joined.dropped_dictionary_only = meanings.entries.size() - joined.entries.size();
    return joined;
}

RankedLexicon rank(const JoinedTable& joined) {
    if (joined.entries.empty())
        throw DomainError("cannot rank an empty lexicon");
    RankedLexicon lex;
    lex.records.reserve(joined.entries.size());
    for (const auto& [lemma, counts] : joined.entries) {
        lex.records.push_back({0, lemma, static_cast<double>(counts.first),
                               static_cast<double>(counts.second)});
    }
    // frequency descending, ties by lemma ascending; the map already yields
    // lemmas in byte order, and stable_sort keeps it that way.
    std::stable_sort(lex.records.begin(), lex.records.end(),
                     [](const LexiconRecord& a, const LexiconRecord& b) {
                         return a.frequency > b.frequency;
                     });
    for (std::size_t i = 0; i < lex.records.size(); ++i)
        lex.records[i].rank = i + 1;
    return lex;
}

void write_frequency_table(std::ostream& out, const FrequencyTable& table) {
    out << "# lemma\tcount\n";
    for (const auto& [lemma, count] : table.entries)
        out << lemma << '\t' << count << '\n';
}

void write_meaning_table(std::ostream& out, const MeaningTable& table) {
    out << "# lemma\tsenses\n";
    for (const auto& [lemma, count] : table.entries)
        out << lemma << '\t' << count << '\n';
}

void write_lexicon_tables(std::ostream& freq_out, std::ostream& meanings_out,
                          const RankedLexicon& lex) {
    FrequencyTable freq;
    MeaningTable meanings;
    for (const auto& rec : lex.records) {
        double f = std::round(rec.frequency);
        double mu = std::round(rec.senses);
        if (f < 1.0 || mu < 1.0)
            throw DomainError("lexicon value for '" + rec.lemma +
                              "' rounds below 1; integerize first");
        freq.entries[rec.lemma] = static_cast<Count>(f);
        meanings.entries[rec.lemma] = static_cast<Count>(mu);
    }
    write_frequency_table(freq_out, freq);
    write_meaning_table(meanings_out, meanings);
}

}  // namespace zipflaw
