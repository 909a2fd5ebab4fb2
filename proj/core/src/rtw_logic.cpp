#include "noiseverify/rtw_logic.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "noiseverify/hex.hpp"

namespace noiseverify {

std::uint32_t compute_k(double epsilon) {
    if (!(epsilon > 0.0) || !(epsilon < 1.0))
        throw std::domain_error("epsilon must lie in (0,1)");
    // -log2 avoids overflow of 1/epsilon near the subnormal range; the
    // correction loops repair any rounding of log2 at exact powers of two.
    auto k = static_cast<std::int64_t>(std::floor(-std::log2(epsilon))) + 1;
    if (k < 1) k = 1;
    while (k > 1 && std::exp2(static_cast<double>(-(k - 1))) < epsilon) --k;
    while (std::exp2(static_cast<double>(-k)) >= epsilon) ++k;
    return static_cast<std::uint32_t>(k);
}

double epsilon_for_k(std::uint32_t k) {
    if (k < 1) throw std::domain_error("k must be positive");
    if (k == 1) return 0.75;  // any value in (1/2, 1)
    return std::exp2(-static_cast<double>(k - 1));
}

RtwSequence componentwise_product(const RtwSequence& a, const RtwSequence& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("componentwise product requires equal lengths");
    RtwSequence out;
    out.values.resize(a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        out.values[j] = static_cast<std::int8_t>(a.values[j] * b.values[j]);
    return out;
}

RtwSequence rtw_hyperspace_product(std::span<const RtwSequence> seqs) {
    if (seqs.empty()) throw std::invalid_argument("hyperspace product of an empty list");
    RtwSequence out = seqs.front();
    for (std::size_t n = 1; n < seqs.size(); ++n) out = componentwise_product(out, seqs[n]);
    return out;
}

RtwSequence derive_rtw_sequence(const CoinSeed& seed, std::uint64_t position, int branch,
                                std::uint32_t k) {
    RtwSequence seq;
    seq.values.resize(k);
    for (std::uint32_t j = 1; j <= k; ++j)
        seq.values[j - 1] = static_cast<std::int8_t>(
            derive_rtw_bit(seed, NoiseCell{position, branch, j}));
    return seq;
}

EqualRelation check_equal_relations(const RtwFingerprint& a, const RtwFingerprint& b) {
    if (a.k != b.k || a.values.size() != b.values.size())
        throw std::invalid_argument("fingerprints have different component counts");
    bool difference_zero = true;
    bool product_one = true;
    for (std::size_t j = 0; j < a.values.size(); ++j) {
        if (a.values[j] - b.values[j] != 0) difference_zero = false;
        if (a.values[j] * b.values[j] != 1) product_one = false;
    }
    if (difference_zero != product_one)
        throw std::logic_error("difference and product forms disagree on +-1 components");
    return difference_zero ? EqualRelation::Holds : EqualRelation::Violated;
}

FingerprintAccumulator::FingerprintAccumulator(const CoinSeed& seed, std::uint32_t k)
    : prf_(seed), seed_id_(seed.seed_id()), k_(k) {
    if (k < 1) throw std::invalid_argument("component count k must be positive");
    negated_.assign((k + 63) / 64, 0);
}

void FingerprintAccumulator::reset() {
    position_ = 0;
    negated_.assign(negated_.size(), 0);
}

void FingerprintAccumulator::absorb_bit(int bit) {
    if (bit != -1 && bit != 1) throw std::invalid_argument("string bits must be -1 or +1");
    ++position_;
    // A prf bit of 0 is a -1 draw, i.e. a sign flip of that component.
    for (std::size_t blk = 0; blk < negated_.size(); ++blk)
        negated_[blk] ^= ~rtw_word(prf_, position_, bit, blk);
}

void FingerprintAccumulator::absorb_byte(std::uint8_t byte) {
    for (int p = 7; p >= 0; --p) absorb_bit(((byte >> p) & 1) ? 1 : -1);
}

void FingerprintAccumulator::absorb_bytes(std::span<const std::uint8_t> bytes) {
    for (std::uint8_t b : bytes) absorb_byte(b);
}

void FingerprintAccumulator::absorb(const BitString& s) {
    for (std::int8_t b : s.bits()) absorb_bit(b);
}

std::span<const std::uint64_t> FingerprintAccumulator::packed_words() {
    if (k_ % 64 != 0) negated_.back() &= (std::uint64_t{1} << (k_ % 64)) - 1;
    return negated_;
}

RtwFingerprint FingerprintAccumulator::finish(double epsilon) const {
    RtwFingerprint fp;
    fp.k = k_;
    fp.seed_id = seed_id_;
    fp.epsilon = epsilon;
    fp.values.resize(k_);
    for (std::uint32_t j = 0; j < k_; ++j)
        fp.values[j] = ((negated_[j / 64] >> (j % 64)) & 1) ? std::int8_t{-1} : std::int8_t{1};
    return fp;
}

RtwFingerprint fingerprint(const BitString& s, const CoinSeed& seed, double epsilon) {
    FingerprintAccumulator acc(seed, compute_k(epsilon));
    acc.absorb(s);
    return acc.finish(epsilon);
}

RtwFingerprint fingerprint_with_k(const BitString& s, const CoinSeed& seed, std::uint32_t k) {
    FingerprintAccumulator acc(seed, k);
    acc.absorb(s);
    return acc.finish(epsilon_for_k(k));
}

RtwFingerprint fingerprint_stream(std::istream& bytes, const CoinSeed& seed, double epsilon) {
    FingerprintAccumulator acc(seed, compute_k(epsilon));
    std::array<char, 65536> buf;
    while (bytes) {
        bytes.read(buf.data(), buf.size());
        const auto got = static_cast<std::size_t>(bytes.gcount());
        acc.absorb_bytes(std::span(reinterpret_cast<const std::uint8_t*>(buf.data()), got));
    }
    return acc.finish(epsilon);
}

std::vector<std::uint8_t> RtwFingerprint::packed() const {
    return pack_pm_bits(values);
}

std::vector<std::uint8_t> pack_pm_bits(std::span<const std::int8_t> values) {
    std::vector<std::uint8_t> out((values.size() + 7) / 8, 0);
    for (std::size_t j = 0; j < values.size(); ++j)
        if (values[j] > 0) out[j / 8] |= static_cast<std::uint8_t>(1u << (7 - j % 8));
    return out;
}

std::vector<std::int8_t> unpack_pm_bits(std::span<const std::uint8_t> bytes, std::uint32_t k) {
    if (bytes.size() != (k + 7) / 8)
        throw std::invalid_argument("packed size does not match component count");
    std::vector<std::int8_t> values(k);
    for (std::uint32_t j = 0; j < k; ++j)
        values[j] = ((bytes[j / 8] >> (7 - j % 8)) & 1) ? std::int8_t{1} : std::int8_t{-1};
    for (std::uint32_t j = k; j < 8 * bytes.size(); ++j)
        if ((bytes[j / 8] >> (7 - j % 8)) & 1)
            throw std::invalid_argument("nonzero pad bits in packed components");
    return values;
}

std::vector<std::uint8_t> hash_digest(std::span<const std::uint8_t> bytes, const CoinSeed& seed,
                                      std::uint32_t k) {
    FingerprintAccumulator acc(seed, k);
    acc.absorb_bytes(bytes);
    return acc.finish(epsilon_for_k(k)).packed();
}

std::vector<std::uint8_t> hash_digest(std::istream& bytes, const CoinSeed& seed, std::uint32_t k) {
    FingerprintAccumulator acc(seed, k);
    std::array<char, 65536> buf;
    while (bytes) {
        bytes.read(buf.data(), buf.size());
        const auto got = static_cast<std::size_t>(bytes.gcount());
        acc.absorb_bytes(std::span(reinterpret_cast<const std::uint8_t*>(buf.data()), got));
    }
    return acc.finish(epsilon_for_k(k)).packed();
}

std::string digest_hex(std::span<const std::uint8_t> digest) {
    return to_hex(digest);
}

}  // namespace noiseverify
