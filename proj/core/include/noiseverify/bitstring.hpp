#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace noiseverify {

// String over the alphabet {-1,+1}.  Position i is 1-based in all derived
// addressing; storage is 0-based.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::vector<std::int8_t> bits);

    // Canonical byte expansion: each byte yields 8 symbols MSB-first,
    // bit 0 -> -1 and bit 1 -> +1.
    static BitString from_bytes(std::span<const std::uint8_t> bytes);
    // Parses "+-+" style literals ('+' -> +1, '-' -> -1).
    static BitString parse(std::string_view text);

    std::size_t length() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    std::int8_t at(std::size_t pos0) const { return bits_[pos0]; }
    const std::vector<std::int8_t>& bits() const { return bits_; }
    std::vector<std::int8_t>& bits() { return bits_; }

    std::string to_string() const;  // "+-+" rendering

    bool operator==(const BitString&) const = default;

private:
    std::vector<std::int8_t> bits_;
};

}  // namespace noiseverify
