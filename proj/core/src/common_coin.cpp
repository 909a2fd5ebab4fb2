#include "noiseverify/common_coin.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "noiseverify/hex.hpp"

namespace noiseverify {

namespace {

std::uint64_t load_le64(const std::uint8_t* p) {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

void store_le64(std::uint8_t* p, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) p[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

}  // namespace

CoinSeed CoinSeed::from_master(std::span<const std::uint8_t, kMasterBytes> master) {
    CoinSeed seed;
    std::memcpy(seed.master_.data(), master.data(), kMasterBytes);
    Prf prf(seed);
    store_le64(seed.seed_id_.data(), prf.word(prf_domain::kSeedId, 0, 0));
    store_le64(seed.seed_id_.data() + 8, prf.word(prf_domain::kSeedId, 0, 1));
    return seed;
}

CoinSeed CoinSeed::from_master_words(const std::array<std::uint64_t, 4>& words) {
    std::array<std::uint8_t, kMasterBytes> bytes{};
    for (std::size_t w = 0; w < 4; ++w) store_le64(bytes.data() + 8 * w, words[w]);
    return from_master(std::span<const std::uint8_t, kMasterBytes>(bytes));
}

CoinSeed CoinSeed::from_uint64(std::uint64_t value) {
    // splitmix64 expansion of the short seed
    constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
    std::array<std::uint64_t, 4> words{};
    std::uint64_t state = value;
    for (auto& w : words) w = Prf::mix64(state += kGolden);
    return from_master_words(words);
}

CoinSeed CoinSeed::load_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open seed file: " + path.string());
    std::array<std::uint8_t, kMasterBytes + 1> buf{};
    in.read(reinterpret_cast<char*>(buf.data()), buf.size());
    const auto got = static_cast<std::size_t>(in.gcount());
    if (got != kMasterBytes)
        throw std::runtime_error("seed file must be exactly 32 bytes: " + path.string());
    return from_master(std::span<const std::uint8_t, kMasterBytes>(buf.data(), kMasterBytes));
}

void CoinSeed::save_file(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write seed file: " + path.string());
    out.write(reinterpret_cast<const char*>(master_.data()), master_.size());
    if (!out) throw std::runtime_error("short write to seed file: " + path.string());
}

CoinSeed CoinSeed::child(std::uint64_t index) const {
    Prf prf(*this);
    std::array<std::uint64_t, 4> words{};
    for (std::uint64_t w = 0; w < 4; ++w) words[w] = prf.word(prf_domain::kChildSeed, index, w);
    return from_master_words(words);
}

std::array<std::uint64_t, 4> CoinSeed::master_words() const {
    std::array<std::uint64_t, 4> words{};
    for (std::size_t w = 0; w < 4; ++w) words[w] = load_le64(master_.data() + 8 * w);
    return words;
}

std::string CoinSeed::seed_id_hex() const {
    return to_hex(seed_id_);
}

std::uint64_t rtw_word(const Prf& prf, std::uint64_t position, int branch, std::uint64_t block) {
    const std::uint64_t branch_bit = branch > 0 ? 1u : 0u;
    return prf.word(prf_domain::kRtw, position, (branch_bit << 63) | block);
}

int derive_rtw_bit(const CoinSeed& seed, const NoiseCell& cell) {
    if (cell.index < 1 || cell.tick < 1)
        throw std::invalid_argument("noise cell indices are 1-based");
    if (cell.branch != -1 && cell.branch != 1)
        throw std::invalid_argument("noise cell branch must be -1 or +1");
    Prf prf(seed);
    const std::uint64_t w = rtw_word(prf, cell.index, cell.branch, (cell.tick - 1) / 64);
    return ((w >> ((cell.tick - 1) % 64)) & 1) ? 1 : -1;
}

namespace {

// (0,1), exactly representable arithmetic only
double unit_open(std::uint64_t x) {
    return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

double derive_gaussian_sample(const Prf& prf, std::uint64_t stream_id, std::uint64_t tick) {
    // Box-Muller on the (u1, u2) pair addressed by the even tick of each
    // pair; evaluation order is fixed so both parties agree.
    const std::uint64_t base = tick & ~std::uint64_t{1};
    const double u1 = unit_open(prf.word(prf_domain::kGauss, stream_id, base));
    const double u2 = unit_open(prf.word(prf_domain::kGauss, stream_id, base + 1));
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return (tick & 1) == 0 ? radius * std::cos(angle) : radius * std::sin(angle);
}

double derive_gaussian_sample(const CoinSeed& seed, std::uint64_t stream_id, std::uint64_t tick) {
    return derive_gaussian_sample(Prf(seed), stream_id, tick);
}

}  // namespace noiseverify
