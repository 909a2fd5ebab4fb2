#pragma once

// Hand-written wire frames, one per message kind, with the exact bytes a
// conforming peer must emit.  Kept in a header so both the unit suite and
// the acceptance runner check against the same fixtures.

#include <array>
#include <cstdint>
#include <vector>

#include "noiseverify/wire.hpp"

namespace golden {

// HELLO with epsilon = 0.5 (binary64 3F E0 00 00 00 00 00 00) and
// seed_id = 00 01 02 ... 0F.
inline constexpr std::array<std::uint8_t, 34> kHelloHalf = {
    0x4E, 0x42, 0x4C, 0x56, 0x01, 0x01, 0x00, 0x00, 0x00, 0x18,
    0x3F, 0xE0, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
    0x00, 0x01, 0x02, 0x03, 0x04, 0x05, 0x06, 0x07,
    0x08, 0x09, 0x0A, 0x0B, 0x0C, 0x0D, 0x0E, 0x0F,
};

inline noiseverify::HelloMsg hello_half_msg() {
    noiseverify::HelloMsg m;
    m.epsilon = 0.5;
    for (std::size_t i = 0; i < m.seed_id.size(); ++i)
        m.seed_id[i] = static_cast<std::uint8_t>(i);
    return m;
}

// HELLO with epsilon = 2^-16 (binary64 3E F0 00 00 00 00 00 00) and an
// all-0xAB seed_id.
inline constexpr std::array<std::uint8_t, 34> kHelloTwoPowMinus16 = {
    0x4E, 0x42, 0x4C, 0x56, 0x01, 0x01, 0x00, 0x00, 0x00, 0x18,
    0x3E, 0xF0, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
    0xAB, 0xAB, 0xAB, 0xAB, 0xAB, 0xAB, 0xAB, 0xAB,
    0xAB, 0xAB, 0xAB, 0xAB, 0xAB, 0xAB, 0xAB, 0xAB,
};

inline noiseverify::HelloMsg hello_two_pow_minus16_msg() {
    noiseverify::HelloMsg m;
    m.epsilon = 0.0000152587890625;  // 2^-16
    m.seed_id.fill(0xAB);
    return m;
}

// FINGERPRINT with k = 8 and all components +1 (the digest of an empty
// input): payload is k as u32 then a single 0xFF byte.
inline constexpr std::array<std::uint8_t, 15> kFingerprintK8AllPlus = {
    0x4E, 0x42, 0x4C, 0x56, 0x01, 0x02, 0x00, 0x00, 0x00, 0x05,
    0x00, 0x00, 0x00, 0x08, 0xFF,
};

inline noiseverify::FingerprintMsg fingerprint_k8_msg() {
    return noiseverify::FingerprintMsg{8, {0xFF}};
}

// FINGERPRINT with k = 83: 0x53 components packed into 11 bytes, the last
// byte carrying 3 live bits and 5 zero pads.
inline constexpr std::array<std::uint8_t, 25> kFingerprintK83 = {
    0x4E, 0x42, 0x4C, 0x56, 0x01, 0x02, 0x00, 0x00, 0x00, 0x0F,
    0x00, 0x00, 0x00, 0x53,
    0xDE, 0xAD, 0xBE, 0xEF, 0x01, 0x23, 0x45, 0x67, 0x89, 0xAB, 0xA0,
};

inline noiseverify::FingerprintMsg fingerprint_k83_msg() {
    return noiseverify::FingerprintMsg{
        83, {0xDE, 0xAD, 0xBE, 0xEF, 0x01, 0x23, 0x45, 0x67, 0x89, 0xAB, 0xA0}};
}

inline constexpr std::array<std::uint8_t, 11> kVerdictEqual = {
    0x4E, 0x42, 0x4C, 0x56, 0x01, 0x03, 0x00, 0x00, 0x00, 0x01, 0x01,
};

inline constexpr std::array<std::uint8_t, 11> kVerdictDifferent = {
    0x4E, 0x42, 0x4C, 0x56, 0x01, 0x03, 0x00, 0x00, 0x00, 0x01, 0x00,
};

// ERROR with code SEED_MISMATCH (0x01) and text "seed".
inline constexpr std::array<std::uint8_t, 15> kErrorSeedMismatch = {
    0x4E, 0x42, 0x4C, 0x56, 0x01, 0x7F, 0x00, 0x00, 0x00, 0x05,
    0x01, 0x73, 0x65, 0x65, 0x64,
};

inline noiseverify::ErrorMsg error_seed_mismatch_msg() {
    return noiseverify::ErrorMsg{noiseverify::ErrorCode::SeedMismatch, "seed"};
}

// ERROR with code PARAM_MISMATCH (0x02) and no text.
inline constexpr std::array<std::uint8_t, 11> kErrorParamBare = {
    0x4E, 0x42, 0x4C, 0x56, 0x01, 0x7F, 0x00, 0x00, 0x00, 0x01, 0x02,
};

inline noiseverify::ErrorMsg error_param_bare_msg() {
    return noiseverify::ErrorMsg{noiseverify::ErrorCode::ParamMismatch, ""};
}

template <std::size_t N>
std::vector<std::uint8_t> to_vec(const std::array<std::uint8_t, N>& a) {
    return std::vector<std::uint8_t>(a.begin(), a.end());
}

}  // namespace golden
