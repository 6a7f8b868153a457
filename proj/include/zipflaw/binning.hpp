#pragma once

#include "zipflaw/lexicon.hpp"

namespace zipflaw {

enum class RemainderPolicy { strict, drop_tail };

struct Bin {
    double mean_rank = 0.0;
    double mean_frequency = 0.0;
    double mean_senses = 0.0;
    std::size_t member_count = 0;
};

/// Equal-size bins over a rank-ordered lexicon. `dropped` counts the tail
/// records discarded under RemainderPolicy::drop_tail (0 otherwise).
struct BinnedSeries {
    std::size_t bin_size = 1;
    std::vector<Bin> bins;
    std::size_t dropped = 0;
};

/// All positive divisors of n, ascending.
std::vector<std::size_t> valid_bin_sizes(std::size_t n);

/// Consecutive rank-ordered blocks of bin_size records, averaged per bin.
/// In strict mode bin_size must divide lex.size() (DivisibilityError
/// otherwise, naming the nearest divisors).
BinnedSeries equal_size_bin(const RankedLexicon& lex, std::size_t bin_size,
                            RemainderPolicy policy = RemainderPolicy::strict);

}  // namespace zipflaw
