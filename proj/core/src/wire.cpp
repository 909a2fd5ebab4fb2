#include "noiseverify/wire.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

namespace noiseverify {

namespace {

void put_u32_be(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

std::uint32_t get_u32_be(const std::uint8_t* p) {
    return (std::uint32_t{p[0]} << 24) | (std::uint32_t{p[1]} << 16) |
           (std::uint32_t{p[2]} << 8) | std::uint32_t{p[3]};
}

void put_f64_be(std::vector<std::uint8_t>& out, double v) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    for (int shift = 56; shift >= 0; shift -= 8)
        out.push_back(static_cast<std::uint8_t>(bits >> shift));
}

double get_f64_be(const std::uint8_t* p) {
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits = (bits << 8) | p[i];
    return std::bit_cast<double>(bits);
}

bool known_kind(std::uint8_t byte) {
    switch (static_cast<MessageKind>(byte)) {
        case MessageKind::Hello:
        case MessageKind::Fingerprint:
        case MessageKind::Verdict:
        case MessageKind::Error:
            return true;
    }
    return false;
}

[[noreturn]] void fail(WireFault fault, const std::string& what) {
    throw WireDecodeError(fault, what);
}

}  // namespace

std::string error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::SeedMismatch: return "SEED_MISMATCH";
        case ErrorCode::ParamMismatch: return "PARAM_MISMATCH";
        case ErrorCode::Framing: return "FRAMING";
        case ErrorCode::State: return "STATE";
    }
    return "UNKNOWN(" + std::to_string(static_cast<unsigned>(code)) + ")";
}

std::string wire_fault_name(WireFault fault) {
    switch (fault) {
        case WireFault::BadMagic: return "bad magic";
        case WireFault::UnknownVersion: return "unknown version";
        case WireFault::UnknownKind: return "unknown kind";
        case WireFault::Truncated: return "truncated frame";
        case WireFault::LengthOverflow: return "payload length overflow";
        case WireFault::BadPayload: return "malformed payload";
    }
    return "unknown fault";
}

MessageKind kind_of(const ProtocolMessage& m) {
    if (std::holds_alternative<HelloMsg>(m)) return MessageKind::Hello;
    if (std::holds_alternative<FingerprintMsg>(m)) return MessageKind::Fingerprint;
    if (std::holds_alternative<VerdictMsg>(m)) return MessageKind::Verdict;
    return MessageKind::Error;
}

std::vector<std::uint8_t> encode(const ProtocolMessage& m) {
    std::vector<std::uint8_t> payload;
    if (const auto* hello = std::get_if<HelloMsg>(&m)) {
        put_f64_be(payload, hello->epsilon);
        payload.insert(payload.end(), hello->seed_id.begin(), hello->seed_id.end());
    } else if (const auto* fp = std::get_if<FingerprintMsg>(&m)) {
        if (fp->k < 1 || fp->packed.size() != (fp->k + 7) / 8)
            throw std::invalid_argument("fingerprint k and packed size disagree");
        // never emit a frame the peer is required to reject
        if (fp->k % 8 != 0 && (fp->packed.back() & ((1u << (8 - fp->k % 8)) - 1)) != 0)
            throw std::invalid_argument("nonzero pad bits in fingerprint");
        put_u32_be(payload, fp->k);
        payload.insert(payload.end(), fp->packed.begin(), fp->packed.end());
    } else if (const auto* verdict = std::get_if<VerdictMsg>(&m)) {
        payload.push_back(verdict->equal_presumed ? 0x01 : 0x00);
    } else {
        const auto& err = std::get<ErrorMsg>(m);
        payload.push_back(static_cast<std::uint8_t>(err.code));
        payload.insert(payload.end(), err.text.begin(), err.text.end());
    }
    if (payload.size() > kMaxPayloadBytes)
        throw std::invalid_argument("payload exceeds frame limit");

    std::vector<std::uint8_t> frame;
    frame.reserve(kFrameHeaderBytes + payload.size());
    frame.insert(frame.end(), kWireMagic.begin(), kWireMagic.end());
    frame.push_back(kWireVersion);
    frame.push_back(static_cast<std::uint8_t>(kind_of(m)));
    put_u32_be(frame, static_cast<std::uint32_t>(payload.size()));
    frame.insert(frame.end(), payload.begin(), payload.end());
    return frame;
}

std::uint32_t expected_payload_length(std::span<const std::uint8_t> header) {
    if (header.size() < kFrameHeaderBytes) fail(WireFault::Truncated, "header shorter than 10 bytes");
    if (!std::equal(kWireMagic.begin(), kWireMagic.end(), header.begin()))
        fail(WireFault::BadMagic, "frame does not start with NBLV");
    if (header[4] != kWireVersion)
        fail(WireFault::UnknownVersion, "version byte " + std::to_string(header[4]));
    if (!known_kind(header[5]))
        fail(WireFault::UnknownKind, "kind byte " + std::to_string(header[5]));
    const std::uint32_t len = get_u32_be(header.data() + 6);
    if (len > kMaxPayloadBytes)
        fail(WireFault::LengthOverflow, "announced payload of " + std::to_string(len) + " bytes");
    return len;
}

ProtocolMessage decode(std::span<const std::uint8_t> frame) {
    const std::uint32_t len = expected_payload_length(frame);
    if (frame.size() < kFrameHeaderBytes + len)
        fail(WireFault::Truncated, "frame ends inside the payload");
    if (frame.size() > kFrameHeaderBytes + len)
        fail(WireFault::BadPayload, "trailing bytes after the payload");
    const auto kind = static_cast<MessageKind>(frame[5]);
    const std::uint8_t* p = frame.data() + kFrameHeaderBytes;

    switch (kind) {
        case MessageKind::Hello: {
            if (len != 8 + CoinSeed::kIdBytes)
                fail(WireFault::BadPayload, "hello payload must be 24 bytes");
            HelloMsg hello;
            hello.epsilon = get_f64_be(p);
            std::memcpy(hello.seed_id.data(), p + 8, CoinSeed::kIdBytes);
            return hello;
        }
        case MessageKind::Fingerprint: {
            if (len < 4) fail(WireFault::BadPayload, "fingerprint payload shorter than k field");
            FingerprintMsg fp;
            fp.k = get_u32_be(p);
            if (fp.k < 1) fail(WireFault::BadPayload, "fingerprint with k = 0");
            if (len != 4 + (fp.k + 7) / 8)
                fail(WireFault::BadPayload, "fingerprint payload size does not match k");
            fp.packed.assign(p + 4, p + len);
            if (fp.k % 8 != 0) {
                const std::uint8_t pad_mask =
                    static_cast<std::uint8_t>((1u << (8 - fp.k % 8)) - 1);
                if (fp.packed.back() & pad_mask)
                    fail(WireFault::BadPayload, "nonzero pad bits in fingerprint");
            }
            return fp;
        }
        case MessageKind::Verdict: {
            if (len != 1) fail(WireFault::BadPayload, "verdict payload must be 1 byte");
            if (p[0] > 0x01) fail(WireFault::BadPayload, "verdict byte out of range");
            return VerdictMsg{p[0] == 0x01};
        }
        case MessageKind::Error: {
            if (len < 1) fail(WireFault::BadPayload, "error payload missing code byte");
            if (p[0] < 0x01 || p[0] > 0x04) fail(WireFault::BadPayload, "unknown error code");
            ErrorMsg err;
            err.code = static_cast<ErrorCode>(p[0]);
            err.text.assign(reinterpret_cast<const char*>(p) + 1, len - 1);
            return err;
        }
    }
    fail(WireFault::UnknownKind, "unreachable");  // expected_payload_length already checked
}

}  // namespace noiseverify
