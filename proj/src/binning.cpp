#include "zipflaw/binning.hpp"

#include <algorithm>

#include "zipflaw/errors.hpp"

namespace zipflaw {

std::vector<std::size_t> valid_bin_sizes(std::size_t n) {
    if (n < 1) throw DomainError("valid_bin_sizes requires n >= 1");
    std::vector<std::size_t> low, high;
    for (std::size_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

BinnedSeries equal_size_bin(const RankedLexicon& lex, std::size_t bin_size,
                            RemainderPolicy policy) {
    const std::size_t n = lex.size();
    if (bin_size < 1) throw DomainError("bin size must be >= 1");
    if (n == 0) throw DomainError("cannot bin an empty lexicon");
    if (policy == RemainderPolicy::strict && n % bin_size != 0) {
        auto divisors = valid_bin_sizes(n);
        std::size_t below = 1, above = n;
        for (auto d : divisors) {
            if (d < bin_size) below = d;
            if (d > bin_size) { above = d; break; }
        }
        throw DivisibilityError(bin_size, n, below, above);
    }

    BinnedSeries series;
    series.bin_size = bin_size;
    series.dropped = n % bin_size;
    const std::size_t full_bins = n / bin_size;
    series.bins.reserve(full_bins);
    for (std::size_t b = 0; b < full_bins; ++b) {
        long double sum_rank = 0, sum_freq = 0, sum_senses = 0;
        for (std::size_t i = b * bin_size; i < (b + 1) * bin_size; ++i) {
            const auto& rec = lex.records[i];
            sum_rank += rec.rank;
            sum_freq += rec.frequency;
            sum_senses += rec.senses;
        }
        Bin bin;
        bin.member_count = bin_size;
        bin.mean_rank = static_cast<double>(sum_rank / bin_size);
        bin.mean_frequency = static_cast<double>(sum_freq / bin_size);
        bin.mean_senses = static_cast<double>(sum_senses / bin_size);
        series.bins.push_back(bin);
    }
    return series;
}

}  // namespace zipflaw
