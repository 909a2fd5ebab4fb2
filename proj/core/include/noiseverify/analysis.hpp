#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "noiseverify/bitstring.hpp"
#include "noiseverify/common_coin.hpp"
#include "noiseverify/continuum_logic.hpp"
#include "noiseverify/session.hpp"

namespace noiseverify {

// One Monte Carlo cell.  false_accepts counts equal_presumed verdicts in
// both modes; with unequal inputs that is the error count and the target
// is 2^-k, with equal inputs the target is 1 (one-sided error means every
// equal pair must land on equal_presumed, so sigma collapses to zero and
// pass demands an exact hit).
struct TrialReport {
    std::uint32_t k = 0;
    std::uint64_t L = 0;
    std::uint64_t trials = 0;
    std::uint64_t false_accepts = 0;
    double rate = 0.0;
    double expected = 0.0;
    double sigma = 0.0;
    bool pass = false;
    bool unequal = true;
};

BitString random_bitstring(std::mt19937_64& rng, std::size_t length);
// Uniform over ordered pairs with a != b (rejection on the second draw).
std::pair<BitString, BitString> random_unequal_pair(std::mt19937_64& rng, std::size_t length);

// Runs `trials` independent loopback sessions, each under a fresh child
// coin, with string pairs drawn uniformly (conditioned on inequality when
// unequal is set).  Deterministic in `seed`.
TrialReport mc_error_rate(std::uint32_t k, std::uint64_t L, std::uint64_t trials, bool unequal,
                          std::uint64_t seed);

// Convenience harness: both roles in-process, verdicts from both sides,
// lengths filled in since the harness sees both inputs.
std::pair<VerificationVerdict, VerificationVerdict> verify_loopback(const BitString& a,
                                                                    const BitString& b,
                                                                    const CoinSeed& seed,
                                                                    double epsilon);

// Exhaustive enumeration of every coin table on a small instance: each of
// the 2*L*k cells (position, branch, component) independently takes +-1,
// so there are 2^(2Lk) tables.  For every ordered string pair the report
// counts the tables under which the two fingerprints coincide; for unequal
// pairs that count over the total is the exact false-accept probability.
struct OraclePair {
    BitString a, b;
    std::uint64_t equal_tables = 0;
};

struct OracleReport {
    std::uint32_t L = 0;
    std::uint32_t k = 0;
    std::uint64_t tables = 0;
    std::vector<OraclePair> unequal_pairs;
    bool uniform = false;                  // every unequal pair shares one count
    std::uint64_t common_equal_tables = 0; // that count when uniform
    std::uint64_t num = 0, den = 0;        // reduced fraction common/tables
    bool equal_pairs_never_reject = false;
};

// Requires 1 <= L <= 3, 1 <= k <= 3 and 2*L*k <= 18; throws std::domain_error.
OracleReport exhaustive_oracle(std::uint32_t L, std::uint32_t k);

// The classical randomized equality check the fingerprint scheme mirrors:
// strings map to GF(2) vectors via (1-s)/2 and each of the k checks
// compares one random inner product.  table supplies the k random vectors,
// L bits each, vector j at bits [j*L, (j+1)*L).
bool gf2_baseline(const BitString& a, const BitString& b, std::uint32_t k, std::uint64_t table);

struct Gf2Report {
    std::uint32_t L = 0;
    std::uint32_t k = 0;
    std::uint64_t tables = 0;  // 2^(L*k)
    std::vector<OraclePair> unequal_pairs;
    bool uniform = false;
    std::uint64_t common_equal_tables = 0;
    std::uint64_t num = 0, den = 0;
    bool equal_pairs_never_reject = false;
};

Gf2Report gf2_exhaustive(std::uint32_t L, std::uint32_t k);

// Empirical time-averages of every orthogonality relation the algebra
// rests on, continuum and telegraph alike: basis self/cross products,
// hyperspace products against basis and hyperspace vectors, telegraph
// cross-correlation including a time shift, and many-fold telegraph
// products against member and foreign rows.  Each estimate must land
// within 4/sqrt(n) of its 0-or-1 target.
struct OrthogonalityCheck {
    std::string name;
    double estimate = 0.0;
    double target = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct OrthogonalityReport {
    std::uint64_t n = 0;
    std::vector<OrthogonalityCheck> checks;
    bool all_pass = false;
};

OrthogonalityReport orthogonality_suite(const CoinSeed& seed, std::uint64_t n);

// Communication-cost arithmetic for a verification at string length L over
// a channel of the given rate.  k follows the strict rule (2^-k < epsilon);
// the reduced row drops one component, which is the variant whose error
// bound sits just above epsilon, and is reported alongside with its own
// bound so both component counts are visible.
struct ScenarioReport {
    std::uint64_t L = 0;
    double channel_rate = 0.0;
    double epsilon = 0.0;
    std::uint32_t k = 0;
    double protocol_time = 0.0;  // k / channel_rate
    double naive_time = 0.0;     // L / channel_rate
    double error_bound = 0.0;    // 2^-k
    std::uint32_t k_reduced = 0;
    double protocol_time_reduced = 0.0;
    double error_bound_reduced = 0.0;
};

ScenarioReport scenario_report(std::uint64_t L, double channel_rate, double epsilon);

// Continuum comparator statistics on unequal strings: the per-sample
// negative-product frequency against its 1/2 target, and the probability
// that m inspected samples all stay nonnegative against 2^-m.
struct SurvivalRow {
    std::uint32_t m = 0;
    std::uint64_t trials = 0;
    std::uint64_t accepts = 0;
    double rate = 0.0;
    double expected = 0.0;  // 2^-m
    double sigma = 0.0;
    bool pass = false;
};

struct ContinuumStats {
    std::uint64_t L = 0;
    std::uint64_t samples = 0;
    std::uint64_t negatives = 0;
    double negative_rate = 0.0;
    double negative_sigma = 0.0;  // binomial at p = 1/2
    bool negative_pass = false;
    std::vector<SurvivalRow> survival;
    bool all_pass = false;
};

ContinuumStats continuum_comparator_stats(std::uint64_t L, std::uint64_t n_samples,
                                          std::uint64_t trials_per_m, std::uint32_t max_m,
                                          std::uint64_t seed);

// Correlation-time comparison between one low-pass filtered noise and the
// product of n_factors independently filtered noises; the product's
// correlation time should shrink by about 1/n_factors.
struct BandwidthReport {
    std::size_t n_factors = 0;
    double cutoff = 0.0;
    double tau_single = 0.0;
    double tau_product = 0.0;
    double tau_predicted = 0.0;  // 1/(2*pi*cutoff) for the single noise
    double ratio = 0.0;          // tau_product / tau_single
    bool single_pass = false;    // tau_single within 30% of predicted
    bool ratio_pass = false;     // ratio within 30% of 1/n_factors
};

BandwidthReport bandwidth_report(const CoinSeed& seed, std::size_t n_factors,
                                 std::uint64_t n_samples, double cutoff);

// Renderers.  CSV rows follow `k,L,trials,false_accepts,rate,expected,sigma,pass`
// for trial reports; other reports use one self-describing header each.
std::string trial_csv_header();
std::string to_csv(const TrialReport& r);
std::string to_text(const TrialReport& r);
std::string to_text(const OracleReport& r);
std::string to_csv(const OracleReport& r);
std::string to_text(const Gf2Report& r);
std::string to_text(const OrthogonalityReport& r);
std::string to_csv(const OrthogonalityReport& r);
std::string to_text(const ScenarioReport& r);
std::string to_csv(const ScenarioReport& r);
std::string to_text(const ContinuumStats& r);
std::string to_csv(const ContinuumStats& r);
std::string to_text(const BandwidthReport& r);

}  // namespace noiseverify
