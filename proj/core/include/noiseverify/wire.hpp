#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "noiseverify/common_coin.hpp"

namespace noiseverify {

// Frame layout, big-endian throughout:
//   magic "NBLV" (4E 42 4C 56), version 0x01, kind byte,
//   payload length as u32, payload.
inline constexpr std::array<std::uint8_t, 4> kWireMagic = {0x4E, 0x42, 0x4C, 0x56};
inline constexpr std::uint8_t kWireVersion = 0x01;
inline constexpr std::size_t kFrameHeaderBytes = 10;
// Generous ceiling; the largest legitimate payload is a fingerprint at a
// few hundred components plus slack for error text.
inline constexpr std::uint32_t kMaxPayloadBytes = 1u << 20;

enum class MessageKind : std::uint8_t {
    Hello = 0x01,
    Fingerprint = 0x02,
    Verdict = 0x03,
    Error = 0x7F,
};

enum class ErrorCode : std::uint8_t {
    SeedMismatch = 0x01,
    ParamMismatch = 0x02,
    Framing = 0x03,
    State = 0x04,
};

std::string error_code_name(ErrorCode code);

// Payload: epsilon as IEEE-754 binary64 (8 bytes), then seed_id (16 bytes).
struct HelloMsg {
    double epsilon = 0.0;
    std::array<std::uint8_t, CoinSeed::kIdBytes> seed_id{};
    bool operator==(const HelloMsg&) const = default;
};

// Payload: k as u32, then ceil(k/8) bytes packed MSB-first (+1 -> 1),
// trailing pad bits zero.
struct FingerprintMsg {
    std::uint32_t k = 0;
    std::vector<std::uint8_t> packed;
    bool operator==(const FingerprintMsg&) const = default;
};

// Payload: one byte, 0x01 equal_presumed / 0x00 different.
struct VerdictMsg {
    bool equal_presumed = false;
    bool operator==(const VerdictMsg&) const = default;
};

// Payload: one code byte, then UTF-8 text.
struct ErrorMsg {
    ErrorCode code = ErrorCode::State;
    std::string text;
    bool operator==(const ErrorMsg&) const = default;
};

using ProtocolMessage = std::variant<HelloMsg, FingerprintMsg, VerdictMsg, ErrorMsg>;

MessageKind kind_of(const ProtocolMessage& m);

enum class WireFault {
    BadMagic,
    UnknownVersion,
    UnknownKind,
    Truncated,
    LengthOverflow,
    BadPayload,
};

std::string wire_fault_name(WireFault fault);

class WireDecodeError : public std::runtime_error {
public:
    WireDecodeError(WireFault fault, const std::string& what)
        : std::runtime_error(what), fault_(fault) {}
    WireFault fault() const { return fault_; }

private:
    WireFault fault_;
};

std::vector<std::uint8_t> encode(const ProtocolMessage& m);

// Decodes exactly one frame; the span must contain the whole frame and
// nothing else.  Throws WireDecodeError.
ProtocolMessage decode(std::span<const std::uint8_t> frame);

// Validates a complete 10-byte header and returns the payload length it
// announces.  Throws on bad magic, version, kind, or oversized length, so
// a reader can reject garbage before buffering a bogus payload.
std::uint32_t expected_payload_length(std::span<const std::uint8_t> header);

}  // namespace noiseverify
