#pragma once

#include <cstdint>

namespace zipflaw {

/// splitmix64: the state advances by the 64-bit golden-gamma constant and
/// the output is mixed with two xorshift-multiply rounds (Steele, Lea &
/// Flood's SplitMix with Vigna's reference constants). Picked because the
/// one-line state transition reproduces bit-identically in any language.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform double in the open interval (0, 1):
    /// ((next() >> 12) + 0.5) * 2^-52.
    double uniform01();

    /// Standard normal variate: inverse normal CDF applied to uniform01().
    double normal();

private:
    std::uint64_t state_;
};

/// Inverse of the standard normal CDF on (0, 1), evaluated with Wichura's
/// AS 241 PPND16 rational approximation (relative error below 1e-15).
double inverse_normal_cdf(double p);

}  // namespace zipflaw
