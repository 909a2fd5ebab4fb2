#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "noiseverify/common_coin.hpp"
#include "noiseverify/rtw_logic.hpp"
#include "noiseverify/wire.hpp"

namespace noiseverify {

enum class Role { Initiator, Responder };
enum class Phase { Init, HelloExchanged, FingerprintSent, Done, Failed };
enum class Decision { EqualPresumed, Different };

std::string decision_name(Decision d);

// Outcome of one verification session.  bits_communicated counts only the
// k fingerprint components, matching the cost model where handshake and
// framing bytes ride for free; transport_bytes is the raw on-wire total
// (sent plus received) for anyone who wants the physical number.
// lengths_known stays empty in real sessions: lengths are never sent, so a
// party only learns them when a harness runs both sides locally.
struct VerificationVerdict {
    Decision decision = Decision::Different;
    double epsilon = 0.0;
    std::uint32_t k = 0;
    std::uint64_t bits_communicated = 0;
    std::uint64_t transport_bytes = 0;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> lengths_known;
};

struct SessionFailure {
    ErrorCode code = ErrorCode::State;
    std::string text;
    bool remote = false;  // true when the peer reported it via ERROR
};

// Protocol-level failure (negotiation, framing, state violation).
// Transport problems raise TransportError instead.
class SessionError : public std::runtime_error {
public:
    explicit SessionError(SessionFailure failure)
        : std::runtime_error(error_code_name(failure.code) +
                             (failure.text.empty() ? "" : ": " + failure.text) +
                             (failure.remote ? " (reported by peer)" : "")),
          failure_(std::move(failure)) {}
    const SessionFailure& failure() const { return failure_; }

private:
    SessionFailure failure_;
};

class TransportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Produces the local fingerprint once the component count is negotiated.
using Fingerprinter = std::function<RtwFingerprint(double epsilon, std::uint32_t k)>;

Fingerprinter fingerprinter_for(const BitString& s, const CoinSeed& seed);

// One half of a verification session as a pure state machine: bytes in via
// feed(), bytes out via pump_outbound(), no clocks and no sockets.  Message
// order on the wire is HELLO (initiator), HELLO (responder), FINGERPRINT
// (initiator), VERDICT (responder).  Any malformed or out-of-phase input
// moves the engine to Failed, never to a verdict.
class SessionEngine {
public:
    // epsilon must be set for the initiator; a responder may leave it empty
    // to adopt the initiator's value, or set it to insist on a match.
    SessionEngine(Role role, const CoinSeed& seed, std::optional<double> epsilon,
                  Fingerprinter fingerprinter);

    // Drains bytes queued for the peer.
    std::vector<std::uint8_t> pump_outbound();
    // Feeds bytes from the peer; complete frames are consumed as they form.
    void feed(std::span<const std::uint8_t> bytes);

    Phase phase() const { return phase_; }
    Role role() const { return role_; }
    bool finished() const { return phase_ == Phase::Done || phase_ == Phase::Failed; }
    bool wants_input() const { return !finished(); }

    // Valid once phase() == Done.
    const VerificationVerdict& verdict() const;
    // Valid once phase() == Failed.
    const SessionFailure& failure() const;

    std::uint64_t transport_bytes() const { return sent_bytes_ + received_bytes_; }

private:
    void queue(const ProtocolMessage& m);
    void dispatch(const ProtocolMessage& m);
    void on_hello(const HelloMsg& hello);
    void on_fingerprint(const FingerprintMsg& msg);
    void on_verdict(const VerdictMsg& msg);
    void fail_local(ErrorCode code, const std::string& text);
    void fail_remote(const ErrorMsg& err);
    void send_own_fingerprint();
    void settle(Decision decision);

    Role role_;
    CoinSeed seed_;
    std::optional<double> epsilon_;
    Fingerprinter fingerprinter_;
    Phase phase_ = Phase::Init;

    std::vector<std::uint8_t> outbound_;
    std::vector<std::uint8_t> inbound_;
    std::uint64_t sent_bytes_ = 0;
    std::uint64_t received_bytes_ = 0;

    std::uint32_t k_ = 0;
    std::optional<RtwFingerprint> own_fingerprint_;
    std::optional<VerificationVerdict> verdict_;
    std::optional<SessionFailure> failure_;
};

// Runs two engines against each other in-process on the calling thread.
// Throws SessionError if either side fails.  The two verdicts come back
// (initiator, responder).
std::pair<VerificationVerdict, VerificationVerdict> run_loopback(SessionEngine& initiator,
                                                                 SessionEngine& responder);

}  // namespace noiseverify
