#include "noiseverify/channel.hpp"

#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <array>
#include <condition_variable>
#include <cstring>
#include <deque>
#include <mutex>

namespace noiseverify {

namespace {

struct Pipe {
    std::mutex m;
    std::condition_variable cv;
    std::deque<std::uint8_t> buf;
    bool closed = false;

    void push(std::span<const std::uint8_t> bytes) {
        {
            std::lock_guard lock(m);
            if (closed) throw TransportError("loopback peer already closed");
            buf.insert(buf.end(), bytes.begin(), bytes.end());
        }
        cv.notify_one();
    }

    std::size_t pull(std::span<std::uint8_t> out) {
        std::unique_lock lock(m);
        cv.wait(lock, [&] { return !buf.empty() || closed; });
        if (buf.empty()) return 0;
        const std::size_t n = std::min(out.size(), buf.size());
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = buf.front();
            buf.pop_front();
        }
        return n;
    }

    void close() {
        {
            std::lock_guard lock(m);
            closed = true;
        }
        cv.notify_all();
    }
};

class LoopbackEndpoint : public ByteChannel {
public:
    LoopbackEndpoint(std::shared_ptr<Pipe> rx, std::shared_ptr<Pipe> tx)
        : rx_(std::move(rx)), tx_(std::move(tx)) {}
    ~LoopbackEndpoint() override { tx_->close(); }

    void send(std::span<const std::uint8_t> bytes) override { tx_->push(bytes); }
    std::size_t recv_some(std::span<std::uint8_t> out) override { return rx_->pull(out); }

private:
    std::shared_ptr<Pipe> rx_;
    std::shared_ptr<Pipe> tx_;
};

}  // namespace

std::pair<std::unique_ptr<ByteChannel>, std::unique_ptr<ByteChannel>> make_loopback_pair() {
    auto ab = std::make_shared<Pipe>();
    auto ba = std::make_shared<Pipe>();
    return {std::make_unique<LoopbackEndpoint>(ba, ab),
            std::make_unique<LoopbackEndpoint>(ab, ba)};
}

TcpChannel::TcpChannel(int fd) : fd_(fd) {
    if (fd_ < 0) throw TransportError("invalid socket descriptor");
}

TcpChannel::~TcpChannel() {
    if (fd_ >= 0) ::close(fd_);
}

TcpChannel::TcpChannel(TcpChannel&& other) noexcept : fd_(other.fd_) { other.fd_ = -1; }

TcpChannel& TcpChannel::operator=(TcpChannel&& other) noexcept {
    if (this != &other) {
        if (fd_ >= 0) ::close(fd_);
        fd_ = other.fd_;
        other.fd_ = -1;
    }
    return *this;
}

void TcpChannel::send(std::span<const std::uint8_t> bytes) {
    std::size_t sent = 0;
    while (sent < bytes.size()) {
        const ssize_t n =
            ::send(fd_, bytes.data() + sent, bytes.size() - sent, MSG_NOSIGNAL);
        if (n < 0) {
            if (errno == EINTR) continue;
            throw TransportError(std::string("send failed: ") + std::strerror(errno));
        }
        sent += static_cast<std::size_t>(n);
    }
}

std::size_t TcpChannel::recv_some(std::span<std::uint8_t> out) {
    for (;;) {
        const ssize_t n = ::recv(fd_, out.data(), out.size(), 0);
        if (n >= 0) return static_cast<std::size_t>(n);
        if (errno == EINTR) continue;
        throw TransportError(std::string("recv failed: ") + std::strerror(errno));
    }
}

namespace {

addrinfo* resolve(const std::string& host, std::uint16_t port, bool passive) {
    addrinfo hints{};
    hints.ai_family = AF_UNSPEC;
    hints.ai_socktype = SOCK_STREAM;
    if (passive) hints.ai_flags = AI_PASSIVE;
    addrinfo* result = nullptr;
    const std::string service = std::to_string(port);
    const int rc = ::getaddrinfo(host.empty() ? nullptr : host.c_str(), service.c_str(), &hints,
                                 &result);
    if (rc != 0)
        throw TransportError("cannot resolve " + (host.empty() ? "*" : host) + ":" + service +
                             ": " + gai_strerror(rc));
    return result;
}

}  // namespace

std::unique_ptr<ByteChannel> tcp_connect(const std::string& host, std::uint16_t port) {
    addrinfo* list = resolve(host, port, false);
    int fd = -1;
    std::string last_error = "no addresses";
    for (addrinfo* ai = list; ai != nullptr; ai = ai->ai_next) {
        fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
        if (fd < 0) {
            last_error = std::strerror(errno);
            continue;
        }
        if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) break;
        last_error = std::strerror(errno);
        ::close(fd);
        fd = -1;
    }
    ::freeaddrinfo(list);
    if (fd < 0)
        throw TransportError("cannot connect to " + host + ":" + std::to_string(port) + ": " +
                             last_error);
    const int one = 1;
    ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);
    return std::make_unique<TcpChannel>(fd);
}

TcpListener::TcpListener(const std::string& host, std::uint16_t port) {
    addrinfo* list = resolve(host, port, true);
    std::string last_error = "no addresses";
    for (addrinfo* ai = list; ai != nullptr; ai = ai->ai_next) {
        fd_ = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
        if (fd_ < 0) {
            last_error = std::strerror(errno);
            continue;
        }
        const int one = 1;
        ::setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
        if (::bind(fd_, ai->ai_addr, ai->ai_addrlen) == 0 && ::listen(fd_, 16) == 0) break;
        last_error = std::strerror(errno);
        ::close(fd_);
        fd_ = -1;
    }
    ::freeaddrinfo(list);
    if (fd_ < 0)
        throw TransportError("cannot listen on " + host + ":" + std::to_string(port) + ": " +
                             last_error);
    sockaddr_storage bound{};
    socklen_t len = sizeof bound;
    if (::getsockname(fd_, reinterpret_cast<sockaddr*>(&bound), &len) == 0) {
        if (bound.ss_family == AF_INET)
            port_ = ntohs(reinterpret_cast<sockaddr_in*>(&bound)->sin_port);
        else if (bound.ss_family == AF_INET6)
            port_ = ntohs(reinterpret_cast<sockaddr_in6*>(&bound)->sin6_port);
    }
    if (port_ == 0) port_ = port;
}

TcpListener::~TcpListener() {
    if (fd_ >= 0) ::close(fd_);
}

std::unique_ptr<ByteChannel> TcpListener::accept_one() {
    for (;;) {
        const int fd = ::accept(fd_, nullptr, nullptr);
        if (fd >= 0) {
            const int one = 1;
            ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);
            return std::make_unique<TcpChannel>(fd);
        }
        if (errno == EINTR) continue;
        throw TransportError(std::string("accept failed: ") + std::strerror(errno));
    }
}

std::pair<std::string, std::uint16_t> parse_host_port(const std::string& addr) {
    const auto colon = addr.rfind(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("address must look like host:port");
    const std::string host = addr.substr(0, colon);
    const std::string port_text = addr.substr(colon + 1);
    std::size_t used = 0;
    const unsigned long port = std::stoul(port_text, &used);
    if (used != port_text.size() || port > 65535)
        throw std::invalid_argument("bad port in address: " + port_text);
    return {host, static_cast<std::uint16_t>(port)};
}

VerificationVerdict run_session(SessionEngine& engine, ByteChannel& channel) {
    std::array<std::uint8_t, 4096> buf;
    for (;;) {
        const auto out = engine.pump_outbound();
        if (!out.empty()) channel.send(out);
        if (engine.finished()) break;
        const std::size_t n = channel.recv_some(buf);
        if (n == 0) throw TransportError("peer closed the connection mid-session");
        engine.feed(std::span(buf.data(), n));
    }
    if (engine.phase() == Phase::Failed) throw SessionError(engine.failure());
    return engine.verdict();
}

Fingerprinter fingerprinter_for_stream(std::istream& bytes, const CoinSeed& seed) {
    return [&bytes, seed](double epsilon, std::uint32_t k) {
        FingerprintAccumulator acc(seed, k);
        std::array<char, 65536> chunk;
        while (bytes) {
            bytes.read(chunk.data(), chunk.size());
            const auto got = static_cast<std::size_t>(bytes.gcount());
            acc.absorb_bytes(
                std::span(reinterpret_cast<const std::uint8_t*>(chunk.data()), got));
        }
        return acc.finish(epsilon);
    };
}

VerificationVerdict run_initiator(const BitString& s, const CoinSeed& seed, double epsilon,
                                  ByteChannel& channel) {
    SessionEngine engine(Role::Initiator, seed, epsilon, fingerprinter_for(s, seed));
    return run_session(engine, channel);
}

VerificationVerdict run_initiator(std::istream& bytes, const CoinSeed& seed, double epsilon,
                                  ByteChannel& channel) {
    SessionEngine engine(Role::Initiator, seed, epsilon, fingerprinter_for_stream(bytes, seed));
    return run_session(engine, channel);
}

VerificationVerdict run_responder(const BitString& s, const CoinSeed& seed,
                                  std::optional<double> epsilon, ByteChannel& channel) {
    SessionEngine engine(Role::Responder, seed, epsilon, fingerprinter_for(s, seed));
    return run_session(engine, channel);
}

VerificationVerdict run_responder(std::istream& bytes, const CoinSeed& seed,
                                  std::optional<double> epsilon, ByteChannel& channel) {
    SessionEngine engine(Role::Responder, seed, epsilon, fingerprinter_for_stream(bytes, seed));
    return run_session(engine, channel);
}

}  // namespace noiseverify
