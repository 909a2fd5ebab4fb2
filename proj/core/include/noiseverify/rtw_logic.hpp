#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include "noiseverify/bitstring.hpp"
#include "noiseverify/common_coin.hpp"

namespace noiseverify {

// Finite prefix of a +-1 telegraph sequence, components indexed j = 1..k.
struct RtwSequence {
    std::vector<std::int8_t> values;

    std::size_t size() const { return values.size(); }
    bool operator==(const RtwSequence&) const = default;
};

// k-component +-1 digest of a string: the component-wise product over
// positions i = 1..L of the reference sequence selected by the string bit
// at i.  The only payload a verification session transmits.
struct RtwFingerprint {
    std::vector<std::int8_t> values;
    std::uint32_t k = 0;
    std::array<std::uint8_t, CoinSeed::kIdBytes> seed_id{};
    double epsilon = 0.0;

    // Packed MSB-first, +1 -> 1 and -1 -> 0, trailing pad bits zero.
    std::vector<std::uint8_t> packed() const;

    bool same_values(const RtwFingerprint& other) const { return values == other.values; }
};

// Smallest integer k with k > log2(1/epsilon), equivalently the smallest k
// with 2^-k < epsilon.  Throws std::domain_error outside (0,1).
std::uint32_t compute_k(double epsilon);

// An epsilon whose compute_k is exactly k; used where a component count is
// given directly.
double epsilon_for_k(std::uint32_t k);

RtwSequence componentwise_product(const RtwSequence& a, const RtwSequence& b);

// Component-wise product of one or more equal-length sequences; the result
// is again a valid +-1 sequence.
RtwSequence rtw_hyperspace_product(std::span<const RtwSequence> seqs);

// R_{position,branch} prefix of length k via derive_rtw_bit.
RtwSequence derive_rtw_sequence(const CoinSeed& seed, std::uint64_t position, int branch,
                                std::uint32_t k);

enum class EqualRelation { Holds, Violated };

// Holds iff every component pair satisfies both the difference form
// (a_j - b_j == 0) and the product form (a_j * b_j == 1); the two forms are
// computed independently and cross-checked.
EqualRelation check_equal_relations(const RtwFingerprint& a, const RtwFingerprint& b);

// Streaming fingerprint state: O(k) memory, independent of input length.
// Components are kept as packed sign-parity words; absorbing position i
// with string bit s multiplies every component by the corresponding draw
// of R_{i,s}.  Reusable via reset().
class FingerprintAccumulator {
public:
    FingerprintAccumulator(const CoinSeed& seed, std::uint32_t k);

    void reset();
    void absorb_bit(int bit);  // -1 or +1
    void absorb_byte(std::uint8_t byte);
    void absorb_bytes(std::span<const std::uint8_t> bytes);
    void absorb(const BitString& s);

    std::uint64_t position() const { return position_; }
    std::uint32_t k() const { return k_; }

    // Current packed component words, LSB-first within each word, pad bits
    // masked to zero.  Valid until the next absorb/reset.
    std::span<const std::uint64_t> packed_words();

    RtwFingerprint finish(double epsilon) const;

private:
    Prf prf_;
    std::array<std::uint8_t, CoinSeed::kIdBytes> seed_id_;
    std::uint32_t k_;
    std::uint64_t position_ = 0;
    // bit set = component currently -1
    std::vector<std::uint64_t> negated_;
};

RtwFingerprint fingerprint(const BitString& s, const CoinSeed& seed, double epsilon);
RtwFingerprint fingerprint_with_k(const BitString& s, const CoinSeed& seed, std::uint32_t k);
// Byte-stream input expanded MSB-first; memory use independent of length.
RtwFingerprint fingerprint_stream(std::istream& bytes, const CoinSeed& seed, double epsilon);

// Universal-hash surface: fingerprint of the byte expansion, packed to
// ceil(k/8) bytes.
std::vector<std::uint8_t> hash_digest(std::span<const std::uint8_t> bytes, const CoinSeed& seed,
                                      std::uint32_t k);
std::vector<std::uint8_t> hash_digest(std::istream& bytes, const CoinSeed& seed, std::uint32_t k);

// Lowercase hex of packed components.
std::string digest_hex(std::span<const std::uint8_t> digest);

// Packs +-1 values MSB-first (+1 -> 1), pad bits zero.
std::vector<std::uint8_t> pack_pm_bits(std::span<const std::int8_t> values);
// Inverse of pack_pm_bits for a known component count; requires zero pads.
std::vector<std::int8_t> unpack_pm_bits(std::span<const std::uint8_t> bytes, std::uint32_t k);

}  // namespace noiseverify
