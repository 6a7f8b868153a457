// Acceptance gate: one PASS/FAIL line per criterion, exit 0 only if all pass.
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "zipflaw/analysis.hpp"
#include "zipflaw/binning.hpp"
#include "zipflaw/errors.hpp"
#include "zipflaw/powerlaw.hpp"
#include "zipflaw/regimes.hpp"
#include "zipflaw/report.hpp"
#include "zipflaw/rng.hpp"
#include "zipflaw/synth.hpp"

using namespace zipflaw;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Failure {
    std::string detail;
};

void require(bool ok, const std::string& detail) {
    if (!ok) throw Failure{detail};
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---- criterion 1: frozen reference exponent rows ----

void check_exponent_relations() {
    struct OneRow {
        double alpha, gamma, predicted;
    };
    const OneRow one_rows[] = {
        {2.199, 0.388, 0.176}, {1.459, 0.261, 0.178}, {2.228, 0.471, 0.211},
        {2.286, 0.478, 0.209}, {2.347, 0.484, 0.206}, {1.483, 0.304, 0.205},
        {1.513, 0.306, 0.202}, {1.542, 0.312, 0.202},
    };
    for (const auto& row : one_rows) {
        const double got = predicted_delta(row.alpha, row.gamma);
        require(std::fabs(got - row.predicted) <= 0.002,
                "predicted_delta(" + std::to_string(row.alpha) + ", " +
                    std::to_string(row.gamma) + ") = " + std::to_string(got));
    }

    struct TwoRow {
        double a1, a2, g1, g2, p1, p2;
    };
    const TwoRow two_rows[] = {
        {1.414, 4.483, 0.419, 0.298, 0.296, 0.066},
        {1.480, 4.560, 0.494, 0.402, 0.334, 0.088},
        {1.600, 4.707, 0.503, 0.388, 0.314, 0.082},
        {1.707, 4.800, 0.512, 0.375, 0.300, 0.078},
        {0.853, 1.537, 0.065, 0.287, 0.076, 0.187},
        {1.281, 1.583, 0.098, 0.405, 0.076, 0.256},
        {1.404, 1.583, 0.102, 0.436, 0.073, 0.275},
        {1.495, 1.577, 0.110, 0.459, 0.074, 0.291},
    };
    for (const auto& row : two_rows) {
        const auto [p1, p2] = predicted_deltas(row.a1, row.a2, row.g1, row.g2);
        require(std::fabs(p1 - row.p1) <= 0.002 && std::fabs(p2 - row.p2) <= 0.002,
                "predicted_deltas(" + std::to_string(row.a1) + ", " +
                    std::to_string(row.a2) + ", ...) = (" + std::to_string(p1) + ", " +
                    std::to_string(p2) + ")");
    }
}

// ---- criterion 2: exact single-regime recovery at scale ----

void check_single_regime_recovery() {
    const auto start = Clock::now();
    SynthSpec spec;
    spec.n = 50000;
    spec.alpha1 = spec.alpha2 = 1.0;
    spec.i_star = spec.n;
    spec.c = 1e9;
    spec.gamma1 = spec.gamma2 = 0.5;
    spec.d = 1e6;
    const auto lex = generate(spec);
    const auto fit = fit_rank_frequency(lex);
    require(std::fabs(fit.exponent - 1.0) <= 1e-6,
            "alpha = " + std::to_string(fit.exponent));
    require(fit.sse_log < 1e-12, "sse_log = " + std::to_string(fit.sse_log));
    const double elapsed = seconds_since(start);
    require(elapsed < 5.0, "took " + std::to_string(elapsed) + " s");
}

// ---- criterion 3: two-regime breakpoint recovery, raw and binned ----

void check_two_regime_recovery() {
    const auto start = Clock::now();
    SynthSpec spec;
    spec.n = 3082;
    spec.alpha1 = 1.0;
    spec.alpha2 = 2.0;
    spec.i_star = 300;
    spec.c = 1e9;
    spec.gamma1 = 0.5;
    spec.gamma2 = 0.3;
    spec.d = 1e4;
    const auto lex = generate(spec);

    const auto curve = deviance_scan(rank_frequency_points(lex), 3);
    const auto bp = select_breakpoint(curve, lex, BreakpointStrategy::global_min);
    require(bp.i_star == 299.5 || bp.i_star == 300.5,
            "raw breakpoint at " + std::to_string(bp.i_star));
    const auto rf = two_regime_fit_rank_frequency(lex, bp);
    require(std::fabs(rf.fit1.exponent - 1.0) <= 0.02,
            "alpha1 = " + std::to_string(rf.fit1.exponent));
    require(std::fabs(rf.fit2.exponent - 2.0) <= 0.02,
            "alpha2 = " + std::to_string(rf.fit2.exponent));

    // On the bin-23 series the admissible splits are 23 ranks apart, so the
    // detected breakpoint can sit at most one grid step from rank 300.
    const auto series = equal_size_bin(lex, 23);
    const auto binned_curve = deviance_scan(rank_frequency_points(series), 3);
    const auto binned_bp =
        select_breakpoint(binned_curve, series, BreakpointStrategy::global_min);
    require(std::fabs(binned_bp.i_star - 300.0) <= 23.5,
            "bin-23 breakpoint at " + std::to_string(binned_bp.i_star));
    const double elapsed = seconds_since(start);
    require(elapsed < 10.0, "took " + std::to_string(elapsed) + " s");
}

// ---- criterion 4: the delta = gamma/alpha identity on exact laws ----

void check_delta_identity_grid() {
    for (int ia = 0; ia < 5; ++ia)
        for (int ig = 0; ig < 5; ++ig) {
            const double alpha = 0.5 + 0.5 * ia;   // 0.5 .. 2.5
            const double gamma = 0.1 + 0.2 * ig;   // 0.1 .. 0.9
            RankedLexicon lex;
            for (std::size_t i = 1; i <= 1000; ++i) {
                const double r = static_cast<double>(i);
                lex.records.push_back({i, "w" + std::to_string(i),
                                       1e9 * std::pow(r, -alpha),
                                       1e4 * std::pow(r, -gamma)});
            }
            const double delta = fit_meaning_frequency(lex).exponent;
            require(std::fabs(delta - gamma / alpha) <= 1e-9,
                    "delta off by " + std::to_string(delta - gamma / alpha) + " at (" +
                        std::to_string(alpha) + ", " + std::to_string(gamma) + ")");
        }
}

// ---- criterion 5: closed-form normal equations oracle ----

void check_least_squares_oracle() {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        SplitMix64 rng(seed);
        std::vector<Point> pts(10);
        for (auto& p : pts) {
            p.x = std::exp(10.0 * rng.uniform01() - 2.0);
            p.y = std::exp(12.0 * rng.uniform01() - 4.0);
        }
        long double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const auto& p : pts) {
            const long double lx = std::log(static_cast<long double>(p.x));
            const long double ly = std::log(static_cast<long double>(p.y));
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
        }
        const long double n = 10;
        const long double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        const long double intercept = (sy - slope * sx) / n;
        const auto fit = fit_loglog(pts);
        require(std::fabs(fit.slope - static_cast<double>(slope)) <= 1e-10,
                "slope mismatch at seed " + std::to_string(seed));
        require(std::fabs(fit.intercept - static_cast<double>(intercept)) <= 1e-10,
                "intercept mismatch at seed " + std::to_string(seed));
    }
}

// ---- criterion 6: double-loop deviance oracle ----

long double naive_sse(const std::vector<Point>& pts, std::size_t a, std::size_t b) {
    const std::size_t m = b - a;
    long double mx = 0, my = 0;
    for (std::size_t i = a; i < b; ++i) {
        mx += std::log(static_cast<long double>(pts[i].x));
        my += std::log(static_cast<long double>(pts[i].y));
    }
    mx /= m;
    my /= m;
    long double sxx = 0, sxy = 0;
    for (std::size_t i = a; i < b; ++i) {
        const long double dx = std::log(static_cast<long double>(pts[i].x)) - mx;
        const long double dy = std::log(static_cast<long double>(pts[i].y)) - my;
        sxx += dx * dx;
        sxy += dx * dy;
    }
    const long double slope = sxx > 0 ? sxy / sxx : 0.0L;
    long double sse = 0;
    for (std::size_t i = a; i < b; ++i) {
        const long double dx = std::log(static_cast<long double>(pts[i].x)) - mx;
        const long double r = std::log(static_cast<long double>(pts[i].y)) - my - slope * dx;
        sse += r * r;
    }
    return sse;
}

// Log-spaced x with gaps bounded away from zero keeps every short
// segment well conditioned, so the two sides of the comparison differ
// only by genuine algorithmic error and not by slope blow-up.
std::vector<Point> random_scan_points(std::uint64_t seed, std::size_t n) {
    SplitMix64 rng(seed);
    std::vector<Point> pts(n);
    double lx = 0.0;
    for (auto& p : pts) {
        lx += 0.05 + 0.2 * rng.uniform01();
        p.x = std::exp(lx);
        p.y = std::exp(4.0 * rng.uniform01() - 2.0);
    }
    return pts;
}

void check_deviance_oracle() {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        SplitMix64 sizes(seed * 7919);
        const std::size_t n = 20 + static_cast<std::size_t>(sizes.next() % 181);
        const auto pts = random_scan_points(seed, n);
        const auto curve = deviance_scan(pts, 3);
        for (const auto& cand : curve.candidates) {
            const double expected = static_cast<double>(
                naive_sse(pts, 0, cand.split_index) + naive_sse(pts, cand.split_index, n));
            require(std::fabs(cand.deviance - expected) <= 1e-10,
                    "deviance mismatch at seed " + std::to_string(seed) + " split " +
                        std::to_string(cand.split_index));
        }
    }
}

// ---- criterion 7: binning identities ----

RankedLexicon random_lexicon(std::uint64_t seed, std::size_t n) {
    SplitMix64 rng(seed);
    RankedLexicon lex;
    for (std::size_t i = 1; i <= n; ++i)
        lex.records.push_back({i, "w" + std::to_string(i),
                               std::exp(8.0 * rng.uniform01()),
                               1.0 + 30.0 * rng.uniform01()});
    std::sort(lex.records.begin(), lex.records.end(),
              [](const LexiconRecord& a, const LexiconRecord& b) {
                  return a.frequency > b.frequency;
              });
    for (std::size_t i = 0; i < n; ++i) lex.records[i].rank = i + 1;
    return lex;
}

void check_binning_identities() {
    const auto lex = random_lexicon(3, 120);

    const auto unit = equal_size_bin(lex, 1);
    require(unit.bins.size() == lex.size(), "bin size 1 changed the point count");
    for (std::size_t i = 0; i < lex.size(); ++i) {
        const auto& bin = unit.bins[i];
        const auto& rec = lex.records[i];
        require(bin.mean_rank == static_cast<double>(rec.rank) &&
                    bin.mean_frequency == rec.frequency && bin.mean_senses == rec.senses,
                "bin size 1 is not the identity at rank " + std::to_string(rec.rank));
    }

    long double raw_mass = 0;
    for (const auto& rec : lex.records) raw_mass += rec.frequency;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto rlex = random_lexicon(seed, 120);
        long double mass = 0;
        for (const auto& rec : rlex.records) mass += rec.frequency;
        for (std::size_t b : {2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30, 40, 60, 120}) {
            const auto series = equal_size_bin(rlex, b);
            long double binned_mass = 0;
            for (const auto& bin : series.bins)
                binned_mass += static_cast<long double>(bin.mean_frequency) *
                               static_cast<long double>(bin.member_count);
            require(std::fabs(static_cast<double>((binned_mass - mass) / mass)) <= 1e-9,
                    "mass drift at seed " + std::to_string(seed) + " bin " +
                        std::to_string(b));
        }
    }
    (void)raw_mass;

    for (std::size_t b = 1; b <= 130; ++b) {
        bool threw = false;
        try {
            equal_size_bin(lex, b);
        } catch (const DivisibilityError&) {
            threw = true;
        }
        require(threw == (120 % b != 0),
                "divisibility error mismatch at bin size " + std::to_string(b));
    }
}

// ---- criterion 8: split dominance ----

void check_split_dominance() {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        SplitMix64 sizes(seed * 104729);
        const std::size_t n = 20 + static_cast<std::size_t>(sizes.next() % 61);
        const auto pts = random_scan_points(seed + 5000, n);
        const double single = fit_loglog(pts).sse_log;
        const auto curve = deviance_scan(pts, 3);
        for (const auto& cand : curve.candidates)
            require(cand.deviance <= single + 1e-12,
                    "split " + std::to_string(cand.split_index) + " at seed " +
                        std::to_string(seed) + " fits worse than one line");
    }
}

// ---- criterion 9: end-to-end determinism of the analyze command ----

int run_cli(const std::string& args) {
    const std::string cmd = std::string(ZIPFLAW_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{"cannot read " + path.string()};
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void check_end_to_end_determinism() {
    const fs::path fixtures(ZIPFLAW_FIXTURE_DIR);
    const auto freq = fixtures / "single_regime_frequencies.tsv";
    const auto meanings = fixtures / "single_regime_meanings.tsv";
    require(fs::exists(freq) && fs::exists(meanings), "fixture corpus missing");

    const auto base = fs::temp_directory_path() /
                      ("zipflaw_acceptance_" + std::to_string(::getpid()));
    const auto out1 = base / "run1";
    const auto out2 = base / "run2";
    fs::create_directories(out1);
    fs::create_directories(out2);

    const std::string args = "analyze --frequencies '" + freq.string() +
                             "' --meanings '" + meanings.string() +
                             "' --bins 25 --svg --out '";
    require(run_cli(args + out1.string() + "'") == 0, "first analyze run failed");
    require(run_cli(args + out2.string() + "'") == 0, "second analyze run failed");

    std::map<std::string, fs::path> files1;
    for (const auto& entry : fs::directory_iterator(out1))
        files1.emplace(entry.path().filename().string(), entry.path());
    require(files1.count("report.json") == 1 && files1.count("summary.txt") == 1,
            "report bundle incomplete");
    std::size_t svgs = 0;
    for (const auto& [name, path] : files1) {
        if (fs::path(name).extension() == ".svg") ++svgs;
        const auto other = out2 / name;
        require(fs::exists(other), name + " missing from the second run");
        require(slurp(path) == slurp(other), name + " differs between runs");
    }
    require(svgs > 0, "no figures were rendered");
    fs::remove_all(base);
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
        {"exponent relations on the reference rows", check_exponent_relations},
        {"single-regime recovery at n=50000", check_single_regime_recovery},
        {"two-regime breakpoint recovery at n=3082", check_two_regime_recovery},
        {"delta identity across the exponent grid", check_delta_identity_grid},
        {"least-squares fit vs normal-equations oracle", check_least_squares_oracle},
        {"deviance scan vs double-loop oracle", check_deviance_oracle},
        {"binning identities", check_binning_identities},
        {"split dominance over the single fit", check_split_dominance},
        {"end-to-end determinism of analyze", check_end_to_end_determinism},
    };

    bool all_pass = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string verdict = "PASS";
        std::string detail;
        try {
            criteria[i].second();
        } catch (const Failure& f) {
            verdict = "FAIL";
            detail = f.detail;
            all_pass = false;
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
            all_pass = false;
        }
        std::cout << verdict << "  " << (i + 1) << ". " << criteria[i].first;
        if (!detail.empty()) std::cout << "  [" << detail << "]";
        std::cout << "\n";
    }
    return all_pass ? 0 : 1;
}
