#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <vector>

#include "noiseverify/common_coin.hpp"

using namespace noiseverify;

TEST_CASE("seed construction is deterministic and ids are stable") {
    CoinSeed a = CoinSeed::from_uint64(42);
    CoinSeed b = CoinSeed::from_uint64(42);
    CHECK(a == b);
    CHECK(a.seed_id() == b.seed_id());
    CHECK(a.seed_id_hex().size() == 2 * CoinSeed::kIdBytes);
    for (char c : a.seed_id_hex()) CHECK(((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f')));
}

TEST_CASE("distinct seed values give distinct masters and ids") {
    std::set<std::string> ids;
    for (std::uint64_t v = 0; v < 200; ++v) ids.insert(CoinSeed::from_uint64(v).seed_id_hex());
    CHECK(ids.size() == 200);
}

TEST_CASE("master bytes round-trip through both constructors") {
    CoinSeed a = CoinSeed::from_uint64(7);
    CoinSeed b = CoinSeed::from_master(std::span<const std::uint8_t, CoinSeed::kMasterBytes>(
        a.master().data(), CoinSeed::kMasterBytes));
    CHECK(a == b);
    CoinSeed c = CoinSeed::from_master_words(a.master_words());
    CHECK(a == c);
}

TEST_CASE("seed files round-trip and reject malformed input") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "noiseverify_seed_test";
    fs::create_directories(dir);

    CoinSeed a = CoinSeed::from_uint64(12345);
    fs::path good = dir / "good.seed";
    a.save_file(good);
    CHECK(fs::file_size(good) == CoinSeed::kMasterBytes);
    CHECK(CoinSeed::load_file(good) == a);

    fs::path missing = dir / "nope.seed";
    CHECK_THROWS_AS((void)CoinSeed::load_file(missing), std::runtime_error);

    fs::path shorter = dir / "short.seed";
    {
        std::vector<char> bytes(CoinSeed::kMasterBytes - 1, 'x');
        std::ofstream(shorter, std::ios::binary).write(bytes.data(), bytes.size());
    }
    CHECK_THROWS_AS((void)CoinSeed::load_file(shorter), std::runtime_error);

    fs::path longer = dir / "long.seed";
    {
        std::vector<char> bytes(CoinSeed::kMasterBytes + 1, 'x');
        std::ofstream(longer, std::ios::binary).write(bytes.data(), bytes.size());
    }
    CHECK_THROWS_AS((void)CoinSeed::load_file(longer), std::runtime_error);

    fs::remove_all(dir);
}

TEST_CASE("children are deterministic and pairwise distinct") {
    CoinSeed parent = CoinSeed::from_uint64(9);
    CHECK(parent.child(3) == parent.child(3));
    std::set<std::string> ids;
    ids.insert(parent.seed_id_hex());
    for (std::uint64_t i = 0; i < 100; ++i) ids.insert(parent.child(i).seed_id_hex());
    CHECK(ids.size() == 101);
}

TEST_CASE("prf words are pure functions of the address") {
    Prf prf(CoinSeed::from_uint64(1));
    CHECK(prf.word(1, 2, 3) == prf.word(1, 2, 3));
    CHECK(prf.word(1, 2, 3) != prf.word(2, 2, 3));
    CHECK(prf.word(1, 2, 3) != prf.word(1, 3, 3));
    CHECK(prf.word(1, 2, 3) != prf.word(1, 2, 4));
}

TEST_CASE("telegraph draws validate their cell address") {
    CoinSeed seed = CoinSeed::from_uint64(5);
    CHECK_THROWS_AS((void)derive_rtw_bit(seed, NoiseCell{0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS((void)derive_rtw_bit(seed, NoiseCell{1, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS((void)derive_rtw_bit(seed, NoiseCell{1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS((void)derive_rtw_bit(seed, NoiseCell{1, 2, 1}), std::invalid_argument);
}

TEST_CASE("telegraph draws take values in {-1,+1} and agree across instances") {
    CoinSeed a = CoinSeed::from_uint64(77);
    CoinSeed b = CoinSeed::from_uint64(77);
    for (std::uint64_t j = 1; j <= 256; ++j) {
        int va = derive_rtw_bit(a, NoiseCell{3, -1, j});
        CHECK((va == -1 || va == 1));
        CHECK(va == derive_rtw_bit(b, NoiseCell{3, -1, j}));
    }
}

TEST_CASE("packed words and scalar draws describe the same sequence") {
    CoinSeed seed = CoinSeed::from_uint64(31337);
    Prf prf(seed);
    std::mt19937_64 rng(4);
    for (int n = 0; n < 2000; ++n) {
        std::uint64_t index = 1 + rng() % 1000000;
        std::uint64_t tick = 1 + rng() % 1000000;
        int branch = (rng() & 1) ? 1 : -1;
        std::uint64_t w = rtw_word(prf, index, branch, (tick - 1) / 64);
        int from_word = ((w >> ((tick - 1) % 64)) & 1) ? 1 : -1;
        CHECK(from_word == derive_rtw_bit(seed, NoiseCell{index, branch, tick}));
    }
}

TEST_CASE("telegraph rows are balanced and rows do not echo each other") {
    CoinSeed seed = CoinSeed::from_uint64(2024);
    const std::uint64_t n = 100000;
    const double tol = 4.0 / std::sqrt(static_cast<double>(n));

    std::int64_t sum_plus = 0, sum_cross_branch = 0, sum_cross_pos = 0;
    for (std::uint64_t j = 1; j <= n; ++j) {
        int rp = derive_rtw_bit(seed, NoiseCell{1, 1, j});
        int rm = derive_rtw_bit(seed, NoiseCell{1, -1, j});
        int r2 = derive_rtw_bit(seed, NoiseCell{2, 1, j});
        sum_plus += rp;
        sum_cross_branch += rp * rm;
        sum_cross_pos += rp * r2;
    }
    CHECK(std::abs(static_cast<double>(sum_plus)) / n < tol);
    CHECK(std::abs(static_cast<double>(sum_cross_branch)) / n < tol);
    CHECK(std::abs(static_cast<double>(sum_cross_pos)) / n < tol);
}

TEST_CASE("gaussian stream is deterministic across both entry points") {
    CoinSeed seed = CoinSeed::from_uint64(11);
    Prf prf(seed);
    for (std::uint64_t t = 0; t < 64; ++t) {
        double via_seed = derive_gaussian_sample(seed, 4, t);
        double via_prf = derive_gaussian_sample(prf, 4, t);
        CHECK(via_seed == via_prf);
        CHECK(std::isfinite(via_seed));
    }
}

TEST_CASE("gaussian stream matches a standard normal in bulk") {
    Prf prf(CoinSeed::from_uint64(13));
    const std::uint64_t n = 1000000;
    double sum = 0.0, sum_sq = 0.0;
    std::uint64_t within_one = 0;
    for (std::uint64_t t = 0; t < n; ++t) {
        double x = derive_gaussian_sample(prf, 1, t);
        sum += x;
        sum_sq += x * x;
        if (std::abs(x) < 1.0) ++within_one;
    }
    double mean = sum / n;
    double var = sum_sq / n - mean * mean;
    // 4 sigma bands: sigma_mean = 1/sqrt(n), sigma_var ~ sqrt(2/n),
    // sigma for the +-1 mass at p = 0.6827 is sqrt(p(1-p)/n).
    CHECK(std::abs(mean) < 4.0 / std::sqrt(static_cast<double>(n)));
    CHECK(std::abs(var - 1.0) < 4.0 * std::sqrt(2.0 / static_cast<double>(n)));
    double p = static_cast<double>(within_one) / n;
    CHECK(std::abs(p - 0.682689) < 4.0 * std::sqrt(0.6827 * 0.3173 / static_cast<double>(n)));
}

TEST_CASE("gaussian streams and neighboring ticks are uncorrelated") {
    Prf prf(CoinSeed::from_uint64(17));
    const std::uint64_t n = 100000;
    const double tol = 4.0 / std::sqrt(static_cast<double>(n));
    double cross = 0.0, lagged = 0.0;
    double prev = derive_gaussian_sample(prf, 1, 0);
    for (std::uint64_t t = 0; t < n; ++t) {
        double g1 = derive_gaussian_sample(prf, 1, t);
        double g2 = derive_gaussian_sample(prf, 2, t);
        cross += g1 * g2;
        if (t > 0) lagged += prev * g1;
        prev = g1;
    }
    CHECK(std::abs(cross / n) < tol);
    CHECK(std::abs(lagged / (n - 1)) < tol);
}
