#include <cmath>
#include <vector>

#include "doctest.h"
#include "zipflaw/binning.hpp"
#include "zipflaw/errors.hpp"
#include "zipflaw/powerlaw.hpp"
#include "zipflaw/rng.hpp"

using namespace zipflaw;

namespace {

RankedLexicon power_lexicon(std::size_t n, double c, double alpha, double d, double gamma) {
    RankedLexicon lex;
    for (std::size_t i = 1; i <= n; ++i) {
        LexiconRecord rec;
        rec.rank = i;
        rec.lemma = "w" + std::to_string(i);
        rec.frequency = c * std::pow(static_cast<double>(i), -alpha);
        rec.senses = d * std::pow(static_cast<double>(i), -gamma);
        lex.records.push_back(rec);
    }
    return lex;
}

// Uncentered normal-equations solution, the closed form
//   slope = (n*Sxy - Sx*Sy) / (n*Sxx - Sx^2),  intercept = (Sy - slope*Sx) / n
// computed in extended precision. Deliberately a different formula from the
// library's centered two-pass fit.
struct OracleFit {
    double slope, intercept;
};

OracleFit normal_equations(const std::vector<Point>& pts) {
    long double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const long double n = static_cast<long double>(pts.size());
    for (const auto& p : pts) {
        const long double lx = std::log(static_cast<long double>(p.x));
        const long double ly = std::log(static_cast<long double>(p.y));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const long double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const long double intercept = (sy - slope * sx) / n;
    return {static_cast<double>(slope), static_cast<double>(intercept)};
}

std::vector<Point> random_points(std::uint64_t seed, std::size_t n) {
    SplitMix64 rng(seed);
    std::vector<Point> pts(n);
    for (auto& p : pts) {
        p.x = std::exp(10.0 * rng.uniform01() - 2.0);
        p.y = std::exp(12.0 * rng.uniform01() - 4.0);
    }
    return pts;
}

}  // namespace

TEST_CASE("an exact decaying power law fits with slope -1 and zero error") {
    const std::vector<Point> pts{{1, 100}, {10, 10}, {100, 1}};
    const auto fit = fit_loglog(pts);
    CHECK(fit.slope == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(fit.r_squared == doctest::Approx(1.0));
    CHECK(fit.sse_log <= 1e-18);
    CHECK(fit.n_points == 3);
}

TEST_CASE("constant y fits with slope 0 and intercept ln c") {
    const double c = 17.5;
    const std::vector<Point> pts{{1, c}, {2, c}, {4, c}};
    const auto fit = fit_loglog(pts);
    CHECK(fit.slope == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(fit.intercept == doctest::Approx(std::log(c)).epsilon(1e-15));
    CHECK(fit.r_squared == doctest::Approx(1.0));
}

TEST_CASE("fit matches the closed-form normal equations on random data") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto pts = random_points(seed, 10);
        const auto fit = fit_loglog(pts);
        const auto oracle = normal_equations(pts);
        CHECK(std::fabs(fit.slope - oracle.slope) <= 1e-12);
        CHECK(std::fabs(fit.intercept - oracle.intercept) <= 1e-12);
    }
}

TEST_CASE("fit rejects degenerate input") {
    CHECK_THROWS_AS(fit_loglog(std::vector<Point>{{1, 2}}), DegenerateFitError);
    CHECK_THROWS_AS(fit_loglog(std::vector<Point>{{1, 2}, {1, 3}, {1, 4}}),
                    DegenerateFitError);
    CHECK_THROWS_AS(fit_loglog(std::vector<Point>{{1, 2}, {0, 3}}), DomainError);
    CHECK_THROWS_AS(fit_loglog(std::vector<Point>{{1, 2}, {2, -3}}), DomainError);
    CHECK_THROWS_AS(fit_loglog(std::vector<Point>{}), DegenerateFitError);
}

TEST_CASE("rank-frequency fit recovers exact exponents") {
    CHECK(fit_rank_frequency(power_lexicon(100, 1000, 1.0, 1, 0)).exponent ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(fit_rank_frequency(power_lexicon(100, 5e7, 2.5, 1, 0)).exponent ==
          doctest::Approx(2.5).epsilon(1e-9));
}

TEST_CASE("meaning-distribution fit recovers gamma, flat senses give zero") {
    CHECK(fit_meaning_distribution(power_lexicon(100, 100, 1, 100, 0.5)).exponent ==
          doctest::Approx(0.5).epsilon(1e-9));
    CHECK(fit_meaning_distribution(power_lexicon(100, 100, 1, 3, 0)).exponent ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("meaning-frequency fit recovers delta as a growth exponent") {
    const auto lex = power_lexicon(1000, 1e8, 2.0, 1000, 1.0);
    CHECK(fit_meaning_frequency(lex).exponent == doctest::Approx(0.5).epsilon(1e-9));
    const auto flat = power_lexicon(1000, 1e8, 2.0, 3, 0.0);
    CHECK(fit_meaning_frequency(flat).exponent == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("fitted delta equals gamma/alpha exactly on exact laws") {
    const double alphas[] = {0.5, 1.0, 1.5, 2.0, 2.5};
    const double gammas[] = {0.1, 0.3, 0.5, 0.7, 0.9};
    for (double a : alphas)
        for (double g : gammas) {
            const auto lex = power_lexicon(1000, 1e9, a, 1e4, g);
            const double delta = fit_meaning_frequency(lex).exponent;
            CHECK(std::fabs(delta - g / a) <= 1e-9);
        }
}

TEST_CASE("predicted delta divides gamma by alpha") {
    CHECK(std::fabs(predicted_delta(2.199, 0.388) - 0.176) <= 0.002);
    CHECK(std::fabs(predicted_delta(1.459, 0.261) - 0.178) <= 0.002);
    for (double g : {0.0, 0.3, 1.7}) CHECK(predicted_delta(1.0, g) == g);
    CHECK_THROWS_AS(predicted_delta(0.0, 0.5), DomainError);
    CHECK_THROWS_AS(predicted_delta(-1.0, 0.5), DomainError);
}

TEST_CASE("scaling y shifts only the intercept; scaling x only per slope") {
    const auto pts = random_points(42, 30);
    const auto base = fit_loglog(pts);
    const double c = 37.0;
    auto scaled = pts;
    for (auto& p : scaled) p.y *= c;
    const auto yfit = fit_loglog(scaled);
    CHECK(yfit.slope == doctest::Approx(base.slope).epsilon(1e-9));
    CHECK(yfit.intercept == doctest::Approx(base.intercept + std::log(c)).epsilon(1e-9));
    scaled = pts;
    for (auto& p : scaled) p.x *= c;
    const auto xfit = fit_loglog(scaled);
    CHECK(xfit.slope == doctest::Approx(base.slope).epsilon(1e-9));
}

TEST_CASE("r squared is symmetric in the two variables") {
    const auto pts = random_points(9, 40);
    auto swapped = pts;
    for (auto& p : swapped) std::swap(p.x, p.y);
    CHECK(fit_loglog(pts).r_squared ==
          doctest::Approx(fit_loglog(swapped).r_squared).epsilon(1e-12));
}

TEST_CASE("bin-size-1 series fit equals the raw lexicon fit exactly") {
    const auto lex = power_lexicon(60, 1234, 1.3, 55, 0.4);
    const auto series = equal_size_bin(lex, 1);
    const auto a = fit_rank_frequency(lex);
    const auto b = fit_rank_frequency(series);
    CHECK(a.exponent == b.exponent);
    CHECK(a.log_intercept == b.log_intercept);
    CHECK(a.r_squared == b.r_squared);
    CHECK(a.sse_log == b.sse_log);
    const auto c = fit_meaning_frequency(lex);
    const auto d = fit_meaning_frequency(series);
    CHECK(c.exponent == d.exponent);
    CHECK(c.sse_log == d.sse_log);
}
