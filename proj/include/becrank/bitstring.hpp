#pragma once

// Bit strings indexing synthetic channels. The empty string is allowed and
// denotes the underlying channel itself. Pure string operations carry no
// length bound; polynomial construction enforces its own cap.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace becrank {

class BitString {
public:
    BitString() = default;

    explicit BitString(std::string_view text) {
        bits_.reserve(text.size());
        for (char ch : text) {
            if (ch != '0' && ch != '1')
                throw std::invalid_argument("bit string may contain only 0 and 1: '" + std::string(text) + "'");
            bits_.push_back(static_cast<uint8_t>(ch - '0'));
        }
    }

    static BitString from_bits(std::vector<uint8_t> bits) {
        BitString s;
        s.bits_ = std::move(bits);
        return s;
    }

    // Value v interpreted as m bits, most significant first, so that numeric
    // order coincides with lexicographic order within a fixed length.
    static BitString from_value(uint64_t value, unsigned length) {
        BitString s;
        s.bits_.resize(length);
        for (unsigned i = 0; i < length; ++i)
            s.bits_[i] = static_cast<uint8_t>((value >> (length - 1 - i)) & 1u);
        return s;
    }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    uint8_t operator[](std::size_t i) const { return bits_[i]; }

    uint64_t value() const {
        uint64_t v = 0;
        for (uint8_t b : bits_) v = (v << 1) | b;
        return v;
    }

    std::size_t count_ones() const {
        return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), uint8_t{1}));
    }
    std::size_t count_zeros() const { return size() - count_ones(); }

    BitString complement() const {
        BitString s;
        s.bits_.reserve(size());
        for (uint8_t b : bits_) s.bits_.push_back(static_cast<uint8_t>(1 - b));
        return s;
    }

    BitString operator+(const BitString& rhs) const {
        BitString s;
        s.bits_.reserve(size() + rhs.size());
        s.bits_ = bits_;
        s.bits_.insert(s.bits_.end(), rhs.bits_.begin(), rhs.bits_.end());
        return s;
    }

    BitString appended(uint8_t bit) const {
        BitString s = *this;
        s.bits_.push_back(bit);
        return s;
    }

    BitString without_leading_zeros() const {
        std::size_t i = 0;
        while (i < size() && bits_[i] == 0) ++i;
        BitString s;
        s.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(i), bits_.end());
        return s;
    }

    std::string str() const {
        std::string s;
        s.reserve(size());
        for (uint8_t b : bits_) s.push_back(static_cast<char>('0' + b));
        return s;
    }

    // Compact label used in ranking reports: the string read as a binary
    // number, in lowercase hex, one digit per started nibble ("11110000" -> "f0").
    std::string hex_label() const {
        if (empty()) return "e";
        unsigned digits = static_cast<unsigned>((size() + 3) / 4);
        static const char* hexd = "0123456789abcdef";
        uint64_t v = value();
        std::string s(digits, '0');
        for (unsigned i = 0; i < digits; ++i) s[digits - 1 - i] = hexd[(v >> (4 * i)) & 0xF];
        return s;
    }

    bool operator==(const BitString& rhs) const { return bits_ == rhs.bits_; }
    bool operator!=(const BitString& rhs) const { return bits_ != rhs.bits_; }
    // Ordered by length first, then lexicographically.
    bool operator<(const BitString& rhs) const {
        if (size() != rhs.size()) return size() < rhs.size();
        return bits_ < rhs.bits_;
    }

private:
    std::vector<uint8_t> bits_;
};

// First n letters of the Thue-Morse sequence, indexed so that the length-8
// prefix reads 01101001 (letter k is the parity of ones in binary k-1).
inline BitString thue_morse_prefix(std::size_t n) {
    if (n < 1) throw std::invalid_argument("thue_morse_prefix requires n >= 1");
    std::vector<uint8_t> bits(n);
    for (std::size_t k = 0; k < n; ++k)
        bits[k] = static_cast<uint8_t>(__builtin_popcountll(static_cast<unsigned long long>(k)) & 1);
    return BitString::from_bits(std::move(bits));
}

// All strings of exactly length m, lexicographic.
inline std::vector<BitString> universe_of_length(unsigned m) {
    if (m >= 63) throw std::invalid_argument("universe too large");
    std::vector<BitString> out;
    out.reserve(std::size_t{1} << m);
    for (uint64_t v = 0; v < (uint64_t{1} << m); ++v) out.push_back(BitString::from_value(v, m));
    return out;
}

// All strings of length 0..max_len, ordered by (length, lexicographic).
inline std::vector<BitString> universe_up_to(unsigned max_len) {
    std::vector<BitString> out;
    for (unsigned m = 0; m <= max_len; ++m) {
        auto level = universe_of_length(m);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace becrank

template <>
struct std::hash<becrank::BitString> {
    std::size_t operator()(const becrank::BitString& s) const noexcept {
        std::size_t h = s.size() * 1315423911u;
        for (std::size_t i = 0; i < s.size(); ++i) h = h * 31 + s[i];
        return h;
    }
};
