#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "noiseverify/analysis.hpp"

using namespace noiseverify;

namespace {

int count_fields(const std::string& csv_row) {
    int n = 1;
    for (char c : csv_row)
        if (c == ',') ++n;
    return n;
}

}  // namespace

TEST_CASE("random strings are reproducible and unequal pairs differ") {
    std::mt19937_64 a(7), b(7);
    CHECK(random_bitstring(a, 100) == random_bitstring(b, 100));
    for (int n = 0; n < 200; ++n) {
        auto [x, y] = random_unequal_pair(a, 1 + n % 8);
        CHECK(x.length() == y.length());
        CHECK(x != y);
        for (auto v : x.bits()) CHECK((v == -1 || v == 1));
    }
}

TEST_CASE("monte carlo cells land on the predicted false-accept rate") {
    TrialReport r = mc_error_rate(2, 3, 20000, true, 1);
    CHECK(r.k == 2);
    CHECK(r.L == 3);
    CHECK(r.trials == 20000);
    CHECK(r.unequal);
    CHECK(r.expected == 0.25);
    CHECK(r.rate == static_cast<double>(r.false_accepts) / r.trials);
    CHECK(r.sigma == doctest::Approx(std::sqrt(0.25 * 0.75 / 20000)));
    CHECK(std::abs(r.rate - 0.25) < 3 * r.sigma);
    CHECK(r.pass);
}

TEST_CASE("equal-input cells must hit their target exactly") {
    TrialReport r = mc_error_rate(6, 16, 2000, false, 2);
    CHECK_FALSE(r.unequal);
    CHECK(r.expected == 1.0);
    CHECK(r.false_accepts == r.trials);  // every equal pair accepted
    CHECK(r.rate == 1.0);
    CHECK(r.sigma == 0.0);
    CHECK(r.pass);
}

TEST_CASE("monte carlo cells are deterministic in the seed") {
    TrialReport a = mc_error_rate(3, 8, 5000, true, 42);
    TrialReport b = mc_error_rate(3, 8, 5000, true, 42);
    CHECK(a.false_accepts == b.false_accepts);
    TrialReport c = mc_error_rate(3, 8, 5000, true, 43);
    // different seeds should explore different trials; identical counts are
    // possible but identical full runs would be a wiring bug, so compare a
    // second cell as well before concluding anything
    CHECK((a.false_accepts != c.false_accepts ||
           mc_error_rate(4, 8, 5000, true, 42).false_accepts !=
               mc_error_rate(4, 8, 5000, true, 43).false_accepts));
}

TEST_CASE("monte carlo validates its parameters") {
    CHECK_THROWS_AS((void)mc_error_rate(0, 4, 10, true, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)mc_error_rate(2, 0, 10, true, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)mc_error_rate(2, 4, 0, true, 1), std::invalid_argument);
}

TEST_CASE("loopback harness fills in the lengths it can see") {
    CoinSeed seed = CoinSeed::from_uint64(5);
    BitString a = BitString::parse("+-+-");
    auto [vi, vr] = verify_loopback(a, a, seed, 0.01);
    CHECK(vi.decision == Decision::EqualPresumed);
    REQUIRE(vi.lengths_known.has_value());
    CHECK(vi.lengths_known->first == 4);
    CHECK(vi.lengths_known->second == 4);
    REQUIRE(vr.lengths_known.has_value());
}

TEST_CASE("exhaustive oracle nails the collision fraction on tiny instances") {
    OracleReport r11 = exhaustive_oracle(1, 1);
    CHECK(r11.tables == 4);  // 2 cells, each +-1
    CHECK(r11.uniform);
    CHECK(r11.num == 1);
    CHECK(r11.den == 2);
    CHECK(r11.equal_pairs_never_reject);
    CHECK(r11.unequal_pairs.size() == 2);  // ordered pairs over 2 strings

    OracleReport r12 = exhaustive_oracle(1, 2);
    CHECK(r12.uniform);
    CHECK(r12.num == 1);
    CHECK(r12.den == 4);

    OracleReport r22 = exhaustive_oracle(2, 2);
    CHECK(r22.tables == 256);  // 2*2*2 cells
    CHECK(r22.uniform);
    CHECK(r22.num == 1);
    CHECK(r22.den == 4);
    CHECK(r22.unequal_pairs.size() == 12);  // 4 strings, ordered unequal pairs
    CHECK(r22.equal_pairs_never_reject);

    OracleReport r32 = exhaustive_oracle(3, 2);
    CHECK(r32.uniform);
    CHECK(r32.num == 1);
    CHECK(r32.den == 4);

    OracleReport r33 = exhaustive_oracle(3, 3);
    CHECK(r33.uniform);
    CHECK(r33.num == 1);
    CHECK(r33.den == 8);
}

TEST_CASE("exhaustive oracle rejects instances past its budget") {
    CHECK_THROWS_AS((void)exhaustive_oracle(0, 1), std::domain_error);
    CHECK_THROWS_AS((void)exhaustive_oracle(4, 1), std::domain_error);
    CHECK_THROWS_AS((void)exhaustive_oracle(1, 4), std::domain_error);
}

TEST_CASE("gf2 baseline agrees with a hand-worked instance") {
    // L = 1, k = 1: strings +1 -> x = 0 and -1 -> x = 1.  The single check
    // vector is the table's one bit r; the checks collide iff r = 0.
    BitString plus = BitString::parse("+");
    BitString minus = BitString::parse("-");
    CHECK(gf2_baseline(plus, minus, 1, 0b0));
    CHECK_FALSE(gf2_baseline(plus, minus, 1, 0b1));
    // equal inputs pass under every table
    CHECK(gf2_baseline(minus, minus, 1, 0b0));
    CHECK(gf2_baseline(minus, minus, 1, 0b1));
}

TEST_CASE("the gf2 baseline and the sign-product scheme share error fractions") {
    for (auto [L, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {1, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}}) {
        OracleReport sign = exhaustive_oracle(L, k);
        Gf2Report gf2 = gf2_exhaustive(L, k);
        CHECK(sign.uniform == gf2.uniform);
        CHECK(sign.num == gf2.num);
        CHECK(sign.den == gf2.den);
        CHECK(gf2.equal_pairs_never_reject);
    }
}

TEST_CASE("monte carlo agrees with the oracle within three sigmas") {
    OracleReport oracle = exhaustive_oracle(2, 2);
    double truth = static_cast<double>(oracle.num) / static_cast<double>(oracle.den);
    TrialReport mc = mc_error_rate(2, 2, 20000, true, 3);
    double sigma = std::sqrt(truth * (1 - truth) / 20000);
    CHECK(std::abs(mc.rate - truth) < 3 * sigma);
}

TEST_CASE("orthogonality suite passes at moderate sample counts") {
    OrthogonalityReport r = orthogonality_suite(CoinSeed::from_uint64(1), 100000);
    CHECK(r.n == 100000);
    CHECK(r.checks.size() == 15);
    for (const auto& c : r.checks) {
        CHECK(c.tolerance == doctest::Approx(4.0 / std::sqrt(100000.0)));
        CHECK(std::abs(c.estimate - c.target) < c.tolerance);
        CHECK(c.pass);
    }
    CHECK(r.all_pass);
    CHECK_THROWS_AS((void)orthogonality_suite(CoinSeed::from_uint64(1), 100),
                    std::invalid_argument);
}

TEST_CASE("self products sit at one and cross products at zero") {
    OrthogonalityReport r = orthogonality_suite(CoinSeed::from_uint64(2), 50000);
    int ones = 0, zeros = 0;
    for (const auto& c : r.checks) {
        if (c.target == 1.0)
            ++ones;
        else if (c.target == 0.0)
            ++zeros;
    }
    CHECK(ones == 2);  // one continuum, one telegraph self product
    CHECK(zeros == 13);
}

TEST_CASE("scenario arithmetic for the headline operating point") {
    ScenarioReport r = scenario_report(1000000000000ull, 1000.0, 1e-25);
    CHECK(r.k == 84);
    CHECK(r.k_reduced == 83);
    CHECK(r.protocol_time == 0.084);
    CHECK(r.protocol_time_reduced == 0.083);
    CHECK(r.naive_time == 1e9);
    CHECK(r.error_bound == std::exp2(-84.0));
    CHECK(r.error_bound_reduced == std::exp2(-83.0));
    // 2^-83 against its decimal rendering
    CHECK(std::abs(r.error_bound_reduced - 1.034e-25) <= 1e-27);

    std::string text = to_text(r);
    CHECK(text.find("84") != std::string::npos);
    CHECK(text.find("0.083") != std::string::npos);
    CHECK(text.find("1.034e-25") != std::string::npos);
    CHECK(text.find("31.7") != std::string::npos);
}

TEST_CASE("scenario arithmetic scales the obvious way") {
    ScenarioReport base = scenario_report(1000, 1000.0, 0.001);
    // L = k means the fingerprint saves nothing
    ScenarioReport even = scenario_report(base.k, 1000.0, 0.001);
    CHECK(even.protocol_time == even.naive_time);
    // doubling the channel rate halves both times exactly (binary scaling)
    ScenarioReport fast = scenario_report(1000, 2000.0, 0.001);
    CHECK(fast.protocol_time == base.protocol_time / 2);
    CHECK(fast.naive_time == base.naive_time / 2);
}

TEST_CASE("continuum comparator statistics match the sign model") {
    ContinuumStats s = continuum_comparator_stats(4, 20000, 2000, 6, 1);
    CHECK(s.L == 4);
    CHECK(s.samples == 20000);
    CHECK(s.negative_pass);
    CHECK(std::abs(s.negative_rate - 0.5) < 3 * s.negative_sigma);
    REQUIRE(s.survival.size() == 6);
    for (const auto& row : s.survival) {
        CHECK(row.expected == std::exp2(-static_cast<double>(row.m)));
        CHECK(row.trials == 2000);
        CHECK(row.pass);
    }
    CHECK(s.all_pass);
}

TEST_CASE("bandwidth report sees the correlation time collapse") {
    BandwidthReport r = bandwidth_report(CoinSeed::from_uint64(4), 4, 200000, 0.005);
    CHECK(r.n_factors == 4);
    CHECK(r.tau_predicted == doctest::Approx(1.0 / (2.0 * M_PI * 0.005)));
    CHECK(r.single_pass);
    CHECK(r.ratio_pass);
    CHECK(std::abs(r.ratio - 0.25) < 0.25 * 0.3);
    CHECK_THROWS_AS((void)bandwidth_report(CoinSeed::from_uint64(4), 1, 1000, 0.005),
                    std::invalid_argument);
}

TEST_CASE("trial reports render to csv with the fixed column set") {
    CHECK(trial_csv_header() == "k,L,trials,false_accepts,rate,expected,sigma,pass");
    TrialReport r = mc_error_rate(2, 2, 1000, true, 9);
    std::string row = to_csv(r);
    CHECK(count_fields(row) == 8);
    CHECK(row.substr(0, 2) == "2,");
    std::string text = to_text(r);
    CHECK(text.find("k=2") != std::string::npos);

    OracleReport oracle = exhaustive_oracle(1, 1);
    CHECK(to_text(oracle).find("1/2") != std::string::npos);
    Gf2Report gf2 = gf2_exhaustive(1, 1);
    CHECK(to_text(gf2).find("1/2") != std::string::npos);

    OrthogonalityReport orth = orthogonality_suite(CoinSeed::from_uint64(1), 10000);
    CHECK(to_text(orth).find("<R1*R2>") != std::string::npos);
}
