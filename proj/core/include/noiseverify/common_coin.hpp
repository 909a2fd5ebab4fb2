#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>

namespace noiseverify {

// Shared-seed source of all reference noise. Both parties construct a
// CoinSeed from the same 32 master bytes and then derive every random
// draw as a pure function of (master, address), so the derived streams
// agree bit-for-bit across processes without any table being stored or
// exchanged.  seed_id is a 128-bit public identifier derived from the
// master; it may travel on the wire, the master never does.
class CoinSeed {
public:
    static constexpr std::size_t kMasterBytes = 32;
    static constexpr std::size_t kIdBytes = 16;

    static CoinSeed from_master(std::span<const std::uint8_t, kMasterBytes> master);
    static CoinSeed from_master_words(const std::array<std::uint64_t, 4>& words);
    // Expands a single 64-bit value into a full master (harness convenience).
    static CoinSeed from_uint64(std::uint64_t value);
    // Reads exactly 32 raw bytes; throws std::runtime_error on missing or
    // wrong-sized file.
    static CoinSeed load_file(const std::filesystem::path& path);

    void save_file(const std::filesystem::path& path) const;

    // Independent coin derived from this one; child(i) != child(j) for i != j.
    CoinSeed child(std::uint64_t index) const;

    const std::array<std::uint8_t, kMasterBytes>& master() const { return master_; }
    const std::array<std::uint8_t, kIdBytes>& seed_id() const { return seed_id_; }
    std::array<std::uint64_t, 4> master_words() const;
    std::string seed_id_hex() const;

    bool operator==(const CoinSeed&) const = default;

private:
    CoinSeed() = default;
    std::array<std::uint8_t, kMasterBytes> master_{};
    std::array<std::uint8_t, kIdBytes> seed_id_{};
};

// Address of one +-1 draw: string position (1-based), bit-value branch
// selecting between the two reference sequences at that position, and the
// component/clock index (1-based).  Distinct cells never alias.
struct NoiseCell {
    std::uint64_t index;   // i >= 1
    int branch;            // -1 or +1
    std::uint64_t tick;    // j >= 1
};

// Keyed counter-mode generator.  word(domain, a, b) is a pure function of
// the 256-bit key and the 192-bit address; draws for distinct addresses are
// statistically independent.  All higher-level derivations go through this
// one primitive so that cross-party agreement reduces to key agreement.
class Prf {
public:
    explicit Prf(const CoinSeed& seed) : key_(seed.master_words()) {}

    std::uint64_t word(std::uint64_t domain, std::uint64_t a, std::uint64_t b) const {
        std::uint64_t h = mix64(key_[0] ^ domain);
        h = mix64(h + (key_[1] ^ a));
        h = mix64(h + (key_[2] ^ b));
        return h ^ key_[3];
    }

    // splitmix64 finalizer
    static constexpr std::uint64_t mix64(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

private:
    std::array<std::uint64_t, 4> key_;
};

// Domain separation constants for Prf::word.
namespace prf_domain {
inline constexpr std::uint64_t kSeedId = 0x01;
inline constexpr std::uint64_t kRtw = 0x02;
inline constexpr std::uint64_t kGauss = 0x03;
inline constexpr std::uint64_t kChildSeed = 0x04;
inline constexpr std::uint64_t kHarnessDraw = 0x05;
}  // namespace prf_domain

// 64 consecutive +-1 draws for one (position, branch) row, packed LSB-first:
// bit (j-1)%64 of block (j-1)/64 holds the draw for tick j, with bit value 1
// meaning +1.  derive_rtw_bit extracts single draws from the same words, so
// the packed and scalar paths agree exactly.
std::uint64_t rtw_word(const Prf& prf, std::uint64_t position, int branch, std::uint64_t block);

// One +-1 draw addressed by cell.  Total and deterministic; uniform on
// {-1,+1} across cells.  Throws std::invalid_argument on index/tick < 1 or
// branch outside {-1,+1}.
int derive_rtw_bit(const CoinSeed& seed, const NoiseCell& cell);

// Deterministic i.i.d. standard normal stream.  Samples are produced in
// Box-Muller pairs from two uniform draws in fixed order, so two parties
// with the same seed and the same libm compute bit-identical doubles.
double derive_gaussian_sample(const CoinSeed& seed, std::uint64_t stream_id, std::uint64_t tick);
double derive_gaussian_sample(const Prf& prf, std::uint64_t stream_id, std::uint64_t tick);

}  // namespace noiseverify
