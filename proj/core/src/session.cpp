#include "noiseverify/session.hpp"

#include <bit>
#include <cstring>

namespace noiseverify {

std::string decision_name(Decision d) {
    return d == Decision::EqualPresumed ? "equal_presumed" : "different";
}

Fingerprinter fingerprinter_for(const BitString& s, const CoinSeed& seed) {
    return [s, seed](double epsilon, std::uint32_t k) {
        RtwFingerprint fp = fingerprint_with_k(s, seed, k);
        fp.epsilon = epsilon;
        return fp;
    };
}

namespace {

bool same_bits(double a, double b) {
    return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

}  // namespace

SessionEngine::SessionEngine(Role role, const CoinSeed& seed, std::optional<double> epsilon,
                             Fingerprinter fingerprinter)
    : role_(role), seed_(seed), epsilon_(epsilon), fingerprinter_(std::move(fingerprinter)) {
    if (role_ == Role::Initiator && !epsilon_)
        throw std::invalid_argument("initiator must supply epsilon");
    if (epsilon_ && (!(*epsilon_ > 0.0) || !(*epsilon_ < 1.0)))
        throw std::invalid_argument("epsilon must lie in (0,1)");
    if (!fingerprinter_) throw std::invalid_argument("missing fingerprinter");
    if (role_ == Role::Initiator)
        queue(HelloMsg{*epsilon_, seed_.seed_id()});
}

std::vector<std::uint8_t> SessionEngine::pump_outbound() {
    std::vector<std::uint8_t> out;
    out.swap(outbound_);
    return out;
}

void SessionEngine::queue(const ProtocolMessage& m) {
    const auto frame = encode(m);
    sent_bytes_ += frame.size();
    outbound_.insert(outbound_.end(), frame.begin(), frame.end());
}

void SessionEngine::feed(std::span<const std::uint8_t> bytes) {
    if (finished()) return;  // late bytes after a verdict or failure are ignored
    received_bytes_ += bytes.size();
    inbound_.insert(inbound_.end(), bytes.begin(), bytes.end());
    while (!finished() && inbound_.size() >= kFrameHeaderBytes) {
        std::uint32_t len = 0;
        try {
            len = expected_payload_length(std::span(inbound_).first(kFrameHeaderBytes));
        } catch (const WireDecodeError& e) {
            fail_local(ErrorCode::Framing, e.what());
            return;
        }
        if (inbound_.size() < kFrameHeaderBytes + len) break;
        ProtocolMessage m;
        try {
            m = decode(std::span(inbound_).first(kFrameHeaderBytes + len));
        } catch (const WireDecodeError& e) {
            fail_local(ErrorCode::Framing, e.what());
            return;
        }
        inbound_.erase(inbound_.begin(),
                       inbound_.begin() + static_cast<std::ptrdiff_t>(kFrameHeaderBytes + len));
        dispatch(m);
    }
}

void SessionEngine::dispatch(const ProtocolMessage& m) {
    if (const auto* err = std::get_if<ErrorMsg>(&m)) {
        fail_remote(*err);
        return;
    }
    if (const auto* hello = std::get_if<HelloMsg>(&m)) {
        on_hello(*hello);
        return;
    }
    if (const auto* fp = std::get_if<FingerprintMsg>(&m)) {
        on_fingerprint(*fp);
        return;
    }
    on_verdict(std::get<VerdictMsg>(m));
}

void SessionEngine::on_hello(const HelloMsg& hello) {
    if (phase_ != Phase::Init) {
        fail_local(ErrorCode::State, "HELLO arrived out of phase");
        return;
    }
    if (hello.seed_id != seed_.seed_id()) {
        fail_local(ErrorCode::SeedMismatch, "peer holds a different master seed");
        return;
    }
    if (!(hello.epsilon > 0.0) || !(hello.epsilon < 1.0)) {
        fail_local(ErrorCode::ParamMismatch, "peer epsilon outside (0,1)");
        return;
    }
    if (epsilon_ && !same_bits(*epsilon_, hello.epsilon)) {
        fail_local(ErrorCode::ParamMismatch, "peer epsilon differs from ours");
        return;
    }
    if (!epsilon_) epsilon_ = hello.epsilon;
    k_ = compute_k(*epsilon_);
    phase_ = Phase::HelloExchanged;
    if (role_ == Role::Responder) {
        queue(HelloMsg{*epsilon_, seed_.seed_id()});
    } else {
        send_own_fingerprint();
    }
}

void SessionEngine::send_own_fingerprint() {
    own_fingerprint_ = fingerprinter_(*epsilon_, k_);
    if (own_fingerprint_->k != k_) {
        fail_local(ErrorCode::State, "fingerprinter returned the wrong component count");
        return;
    }
    if (role_ == Role::Initiator) {
        queue(FingerprintMsg{k_, own_fingerprint_->packed()});
        phase_ = Phase::FingerprintSent;
    }
}

void SessionEngine::on_fingerprint(const FingerprintMsg& msg) {
    if (role_ != Role::Responder || phase_ != Phase::HelloExchanged) {
        fail_local(ErrorCode::State, "FINGERPRINT arrived out of phase");
        return;
    }
    if (msg.k != k_) {
        fail_local(ErrorCode::ParamMismatch, "fingerprint k disagrees with negotiated epsilon");
        return;
    }
    send_own_fingerprint();
    if (phase_ == Phase::Failed) return;
    RtwFingerprint theirs;
    theirs.k = msg.k;
    theirs.epsilon = *epsilon_;
    theirs.seed_id = seed_.seed_id();
    theirs.values = unpack_pm_bits(msg.packed, msg.k);
    const bool equal =
        check_equal_relations(theirs, *own_fingerprint_) == EqualRelation::Holds;
    queue(VerdictMsg{equal});
    settle(equal ? Decision::EqualPresumed : Decision::Different);
}

void SessionEngine::on_verdict(const VerdictMsg& msg) {
    if (role_ != Role::Initiator || phase_ != Phase::FingerprintSent) {
        fail_local(ErrorCode::State, "VERDICT arrived out of phase");
        return;
    }
    settle(msg.equal_presumed ? Decision::EqualPresumed : Decision::Different);
}

void SessionEngine::settle(Decision decision) {
    VerificationVerdict v;
    v.decision = decision;
    v.epsilon = *epsilon_;
    v.k = k_;
    v.bits_communicated = k_;
    v.transport_bytes = transport_bytes();
    verdict_ = v;
    phase_ = Phase::Done;
}

void SessionEngine::fail_local(ErrorCode code, const std::string& text) {
    queue(ErrorMsg{code, text});
    failure_ = SessionFailure{code, text, false};
    phase_ = Phase::Failed;
}

void SessionEngine::fail_remote(const ErrorMsg& err) {
    failure_ = SessionFailure{err.code, err.text, true};
    phase_ = Phase::Failed;
}

const VerificationVerdict& SessionEngine::verdict() const {
    if (phase_ != Phase::Done) throw std::logic_error("no verdict before Done");
    return *verdict_;
}

const SessionFailure& SessionEngine::failure() const {
    if (phase_ != Phase::Failed) throw std::logic_error("no failure to report");
    return *failure_;
}

std::pair<VerificationVerdict, VerificationVerdict> run_loopback(SessionEngine& initiator,
                                                                 SessionEngine& responder) {
    for (;;) {
        const auto a = initiator.pump_outbound();
        if (!a.empty()) responder.feed(a);
        const auto b = responder.pump_outbound();
        if (!b.empty()) initiator.feed(b);
        if (initiator.finished() && responder.finished()) break;
        if (a.empty() && b.empty())
            throw std::logic_error("loopback session stalled with no traffic");
    }
    if (initiator.phase() == Phase::Failed) throw SessionError(initiator.failure());
    if (responder.phase() == Phase::Failed) throw SessionError(responder.failure());
    return {initiator.verdict(), responder.verdict()};
}

}  // namespace noiseverify
