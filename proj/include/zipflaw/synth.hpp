#pragma once

#include <cstdint>
#include <iosfwd>

#include "zipflaw/lexicon.hpp"

namespace zipflaw {

/// Ground-truth generator for single- or two-regime power-law lexicons.
/// With alpha2 == alpha1 and i_star == n the output is a single regime.
/// The regime-2 prefactor is forced to c * i_star^(alpha2 - alpha1) so the
/// branches meet at i_star; the senses curve is built the same way from
/// (d, gamma1, gamma2).
struct SynthSpec {
    std::size_t n = 0;
    double alpha1 = 1.0;
    double alpha2 = 1.0;
    std::size_t i_star = 0;  // n for a single regime
    double c = 1000.0;       // frequency prefactor
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double d = 1.0;          // senses prefactor
    double noise_sigma = 0.0;
    std::uint64_t seed = 0;
};

/// Throws DomainError if the spec violates its invariants
/// (n >= 4, alpha > 0, 1 <= i_star <= n, c > 0, gamma >= 0, d >= 1, sigma >= 0).
void validate(const SynthSpec& spec);

/// f(i) = c * i^-alpha1 for i <= i_star, c * i_star^(alpha2-alpha1) * i^-alpha2
/// beyond; senses analogous with d/gamma1/gamma2, clamped at 1 from below.
/// With noise_sigma > 0 every curve value is multiplied by exp(sigma * z),
/// z standard normal from SplitMix64(seed); per index the frequency draw
/// comes first, then the senses draw. Records are re-sorted by frequency
/// and re-ranked afterwards, so the output satisfies RankedLexicon's
/// invariants for any noise realization.
RankedLexicon generate(const SynthSpec& spec);

enum class IntegerizeMode { round, floor };

struct IntegerizeResult {
    RankedLexicon lexicon;
    std::size_t changed = 0;        // records whose frequency moved
    double max_rel_change = 0.0;    // largest |f_int - f| / f
};

/// Convert frequencies to integers >= 1 and re-rank. Throws DomainError
/// (with the offender count) if any frequency would land below 1.
IntegerizeResult integerize(const RankedLexicon& lex, IntegerizeMode mode);

/// Flat key=value lines (n, alpha1, alpha2, i_star, c, gamma1, gamma2, d,
/// noise_sigma, seed); '#' comments and blank lines are skipped.
SynthSpec parse_synth_spec(std::istream& in);
void write_synth_spec(std::ostream& out, const SynthSpec& spec);

}  // namespace zipflaw
