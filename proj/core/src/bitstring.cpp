#include "noiseverify/bitstring.hpp"

#include <stdexcept>

namespace noiseverify {

BitString::BitString(std::vector<std::int8_t> bits) : bits_(std::move(bits)) {
    for (std::int8_t b : bits_)
        if (b != -1 && b != 1) throw std::invalid_argument("bit string symbols must be -1 or +1");
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes) {
    BitString s;
    s.bits_.reserve(bytes.size() * 8);
    for (std::uint8_t byte : bytes)
        for (int p = 7; p >= 0; --p)
            s.bits_.push_back(((byte >> p) & 1) ? std::int8_t{1} : std::int8_t{-1});
    return s;
}

BitString BitString::parse(std::string_view text) {
    BitString s;
    s.bits_.reserve(text.size());
    for (char c : text) {
        if (c == '+')
            s.bits_.push_back(1);
        else if (c == '-')
            s.bits_.push_back(-1);
        else
            throw std::invalid_argument("bit string literal may contain only '+' and '-'");
    }
    return s;
}

std::string BitString::to_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (std::int8_t b : bits_) out.push_back(b > 0 ? '+' : '-');
    return out;
}

}  // namespace noiseverify
