#pragma once

// Exact arithmetic aliases and small helpers shared across the library.
// Integers and rationals are GMP-backed; all arithmetic is exact.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace becrank {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline int sign_of(const Int& v) { return v.sign(); }
inline int sign_of(const Rat& v) { return v.sign(); }

inline Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.backend().data(), base.backend().data(), exp);
    return r;
}

inline Int two_pow(unsigned long exp) { return Int(1) << exp; }

// Row n of Pascal's triangle: C(n,0) .. C(n,n).
inline std::vector<Int> binomial_row(unsigned n) {
    std::vector<Int> row(n + 1);
    row[0] = 1;
    for (unsigned k = 0; k < n; ++k) row[k + 1] = row[k] * (n - k) / (k + 1);
    return row;
}

inline std::string fraction_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "3", "-7/2" or a decimal literal such as "3.627" into an exact rational.
inline Rat parse_rational(std::string_view text) {
    auto bad = [&] { throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    std::string s(text);
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rat r;
        try {
            r = Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        } catch (const std::exception&) {
            bad();
        }
        return r;
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        try {
            return Rat(Int(s));
        } catch (const std::exception&) {
            bad();
        }
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    if (frac_len == 0 || digits.empty()) bad();
    Int num;
    try {
        num = Int(digits);
    } catch (const std::exception&) {
        bad();
    }
    return Rat(num, pow_int(10, frac_len));
}

}  // namespace becrank
