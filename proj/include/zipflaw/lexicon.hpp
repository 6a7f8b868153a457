#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace zipflaw {

using Count = std::uint64_t;

/// Lemma -> token count. Keys are trimmed and non-empty, counts >= 1.
struct FrequencyTable {
    std::map<std::string, Count> entries;
};

/// Lemma -> number of dictionary senses, each >= 1.
struct MeaningTable {
    std::map<std::string, Count> entries;
};

/// One lemma of a ranked lexicon. Frequency and senses are doubles so
/// corpus counts and synthetic real-valued lexicons share the type.
struct LexiconRecord {
    std::size_t rank = 0;    // 1-based, dense
    std::string lemma;
    double frequency = 0.0;  // non-increasing in rank
    double senses = 0.0;     // >= 1
};

struct RankedLexicon {
    std::vector<LexiconRecord> records;
    std::size_t size() const { return records.size(); }
};

/// Annotation tag classes dropped by ingest_token_stream. Tags are
/// compared verbatim after whitespace trimming (case-sensitive).
struct TokenFilterConfig {
    std::set<std::string> excluded_tags{"punctuation", "number", "proper_noun"};
};

/// Lemmas present in both the corpus and the dictionary, with the
/// per-side counts of lemmas that fell out of the intersection.
struct JoinedTable {
    std::map<std::string, std::pair<Count, Count>> entries;  // lemma -> (frequency, senses)
    std::size_t dropped_corpus_only = 0;
    std::size_t dropped_dictionary_only = 0;
};

// Input files are UTF-8 and delimiter-separated (tab by default), one
// record per line. Blank lines and lines starting with '#' are skipped;
// error line numbers count every physical line. Duplicate lemma lines
// have their counts summed.

FrequencyTable ingest_frequency_table(std::istream& in, char delimiter = '\t');

MeaningTable ingest_meaning_table(std::istream& in, char delimiter = '\t');

/// Lines of (surface form, lemma, tag class); lines whose tag is excluded
/// are dropped, the rest are counted by lemma.
FrequencyTable ingest_token_stream(std::istream& in,
                                   const TokenFilterConfig& config = {},
                                   char delimiter = '\t');

JoinedTable intersect(const FrequencyTable& freq, const MeaningTable& meanings);

/// Sort by frequency descending, ties by lemma ascending in byte order,
/// and assign ranks 1..n. Throws DomainError on an empty table.
RankedLexicon rank(const JoinedTable& joined);

void write_frequency_table(std::ostream& out, const FrequencyTable& table);
void write_meaning_table(std::ostream& out, const MeaningTable& table);

/// Write a lexicon back out as the frequency/meanings pair of files.
/// Values are rounded to the nearest integer and must land >= 1.
void write_lexicon_tables(std::ostream& freq_out, std::ostream& meanings_out,
                          const RankedLexicon& lex);

}  // namespace zipflaw
