#pragma once

#include <cstdint>
#include <istream>
#include <memory>
#include <span>
#include <string>
#include <utility>

#include "noiseverify/session.hpp"

namespace noiseverify {

// Reliable ordered byte pipe, the only transport assumption the protocol
// makes.  send delivers everything or throws TransportError; recv_some
// blocks and returns 0 only when the peer has closed.
class ByteChannel {
public:
    virtual ~ByteChannel() = default;
    virtual void send(std::span<const std::uint8_t> bytes) = 0;
    virtual std::size_t recv_some(std::span<std::uint8_t> out) = 0;
};

// In-process channel pair backed by two shared buffers; endpoints may live
// on different threads.  Destroying an endpoint closes its write side.
std::pair<std::unique_ptr<ByteChannel>, std::unique_ptr<ByteChannel>> make_loopback_pair();

// Connected TCP stream.
class TcpChannel : public ByteChannel {
public:
    explicit TcpChannel(int fd);
    ~TcpChannel() override;
    TcpChannel(TcpChannel&& other) noexcept;
    TcpChannel& operator=(TcpChannel&& other) noexcept;
    TcpChannel(const TcpChannel&) = delete;
    TcpChannel& operator=(const TcpChannel&) = delete;

    void send(std::span<const std::uint8_t> bytes) override;
    std::size_t recv_some(std::span<std::uint8_t> out) override;

private:
    int fd_ = -1;
};

// Resolves host:port and connects; throws TransportError on failure.
std::unique_ptr<ByteChannel> tcp_connect(const std::string& host, std::uint16_t port);

class TcpListener {
public:
    // port 0 binds an ephemeral port; local_port() reports the real one.
    TcpListener(const std::string& host, std::uint16_t port);
    ~TcpListener();
    TcpListener(const TcpListener&) = delete;
    TcpListener& operator=(const TcpListener&) = delete;

    std::unique_ptr<ByteChannel> accept_one();
    std::uint16_t local_port() const { return port_; }

private:
    int fd_ = -1;
    std::uint16_t port_ = 0;
};

// Splits "host:port" (host may be empty for the wildcard address).
std::pair<std::string, std::uint16_t> parse_host_port(const std::string& addr);

// Drives one engine over a channel until it reaches a verdict.  Protocol
// failures raise SessionError, transport failures TransportError.
VerificationVerdict run_session(SessionEngine& engine, ByteChannel& channel);

VerificationVerdict run_initiator(const BitString& s, const CoinSeed& seed, double epsilon,
                                  ByteChannel& channel);
VerificationVerdict run_initiator(std::istream& bytes, const CoinSeed& seed, double epsilon,
                                  ByteChannel& channel);
VerificationVerdict run_responder(const BitString& s, const CoinSeed& seed,
                                  std::optional<double> epsilon, ByteChannel& channel);
VerificationVerdict run_responder(std::istream& bytes, const CoinSeed& seed,
                                  std::optional<double> epsilon, ByteChannel& channel);

// Fingerprints a byte stream once the component count is negotiated; the
// stream is consumed on first use.
Fingerprinter fingerprinter_for_stream(std::istream& bytes, const CoinSeed& seed);

}  // namespace noiseverify
