#pragma once

// Reliability polynomials of synthetic binary erasure channels. A bit string
// selects a chain of polar transforms; bit 0 maps capacity x to x^2, bit 1 to
// 2x - x^2, applied in string order. The polynomial for the empty string is x.

#include "becrank/bitstring.hpp"
#include "becrank/poly.hpp"

#include <stdexcept>
#include <string>

namespace becrank {

// Degree doubles per bit; the default cap keeps degrees at or below 4096.
inline constexpr unsigned kDefaultMaxLen = 12;

inline void check_length(const BitString& s, unsigned max_len) {
    if (s.size() > max_len)
        throw std::length_error("bit string of length " + std::to_string(s.size()) +
                                " exceeds the polynomial construction cap L_max=" + std::to_string(max_len));
}

inline Poly reliability_poly(const BitString& s, unsigned max_len = kDefaultMaxLen) {
    check_length(s, max_len);
    Poly p = Poly::x();
    for (std::size_t i = 0; i < s.size(); ++i) {
        Poly sq = p.square();
        p = s[i] == 0 ? std::move(sq) : Int(2) * p - sq;
    }
    return p;
}

// Reliability polynomial modulo x^limit. Valid because the recursion never
// moves mass below the current lowest power.
inline Poly reliability_poly_truncated(const BitString& s, std::size_t limit) {
    Poly p = Poly::x().truncated(limit);
    for (std::size_t i = 0; i < s.size(); ++i) {
        Poly sq = p.mul_truncated(p, limit);
        p = s[i] == 0 ? std::move(sq) : (Int(2) * p - sq).truncated(limit);
    }
    return p;
}

inline BitString dual_string(const BitString& s) { return s.complement(); }

// avg = integral of the reliability polynomial over [0,1].
inline Rat average(const BitString& s, unsigned max_len = kDefaultMaxLen) {
    return reliability_poly(s, max_len).integral_01();
}

}  // namespace becrank
