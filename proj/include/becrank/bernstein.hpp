#pragma once

// Bernstein expansions in integer N-form, the coefficient-wise Bernstein
// order, and exponent/mantissa extraction (lowest-order behavior at x = 0).

#include "becrank/bitstring.hpp"
#include "becrank/poly.hpp"
#include "becrank/reliability.hpp"

#include <stdexcept>
#include <vector>

namespace becrank {

// N-form of the degree-n Bernstein expansion of a polynomial f:
// f = sum_i N_i x^i (1-x)^(n-i), with Bernstein coefficients B_i = N_i / C(n,i).
struct BernExpansion {
    unsigned n = 0;
    std::vector<Int> nform;  // N_0 .. N_n

    Rat b_coeff(std::size_t i) const {
        std::vector<Int> row = binomial_row(n);
        return Rat(nform.at(i), row.at(i));
    }

    std::vector<Rat> b_coeffs() const {
        std::vector<Int> row = binomial_row(n);
        std::vector<Rat> out(nform.size());
        for (std::size_t i = 0; i < nform.size(); ++i) out[i] = Rat(nform[i], row[i]);
        return out;
    }

    // Expands sum_i N_i x^i (1-x)^(n-i) back to the power basis.
    Poly reconstruct() const {
        const Poly one_minus_x{Int(1), Int(-1)};
        Poly pow = Poly::one();
        std::vector<Poly> one_minus_pows(n + 1);
        for (unsigned k = 0; k <= n; ++k) {
            one_minus_pows[k] = pow;
            if (k < n) pow = pow * one_minus_x;
        }
        Poly acc;
        for (std::size_t i = 0; i < nform.size(); ++i) {
            if (nform[i] == 0) continue;
            acc = acc + (one_minus_pows[n - i] * nform[i]).shifted_up(i);
        }
        return acc;
    }
};

// N_i = sum_{j<=i} C(n-j, i-j) a_j, computed as the coefficient vector of
// sum_j a_j x^j (1+x)^(n-j) without materializing a binomial triangle.
inline BernExpansion to_bernstein(const Poly& p, unsigned n) {
    if (p.degree() > static_cast<int>(n))
        throw std::invalid_argument("to_bernstein: basis degree below polynomial degree");
    BernExpansion out;
    out.n = n;
    if (p.is_zero()) {
        out.nform.assign(n + 1, Int(0));
        return out;
    }
    unsigned deg = static_cast<unsigned>(p.degree());
    // acc = sum_{j>=deg-k} a_j x^(j-(deg-k)) (1+x)^(deg-j), built by
    // acc <- x*acc + a_(deg-k) * (1+x)^k with (1+x)^k kept incrementally.
    std::vector<Int> acc{p.coeff(deg)};
    std::vector<Int> pw{Int(1)};  // (1+x)^k
    for (unsigned k = 1; k <= deg; ++k) {
        pw.push_back(pw.back());
        for (std::size_t i = pw.size() - 2; i-- > 0;) pw[i + 1] += pw[i];
        acc.insert(acc.begin(), Int(0));
        const Int& a = p.coeff(deg - k);
        if (a != 0)
            for (std::size_t i = 0; i < pw.size(); ++i) acc[i] += a * pw[i];
    }
    // Multiply by (1+x)^(n-deg) to reach basis degree n.
    acc.resize(n + 1, Int(0));
    for (unsigned e = 0; e < n - deg; ++e)
        for (std::size_t i = deg + e + 1; i-- > 1;) acc[i] += acc[i - 1];
    out.nform = std::move(acc);
    return out;
}

enum class BerOutcome { Holds, HoldsReversed, Neither, Equal };

// Sign census of an N-form: returns +1 if all entries >= 0, -1 if all <= 0,
// 0 if mixed. An all-zero vector reports +1.
inline int nform_sign_census(const std::vector<Int>& nform) {
    bool has_pos = false, has_neg = false;
    for (const auto& v : nform) {
        int s = sign_of(v);
        has_pos |= s > 0;
        has_neg |= s < 0;
        if (has_pos && has_neg) return 0;
    }
    return has_neg ? -1 : 1;
}

// Coefficient-wise Bernstein order at degree n: Holds when every N-form
// entry of the reliability difference is nonnegative. Sufficient for the
// standard order but not necessary at any fixed n.
inline BerOutcome ber_order(const BitString& lhs, const BitString& rhs, unsigned n,
                            unsigned max_len = kDefaultMaxLen) {
    unsigned long need = 1uL << std::max(lhs.size(), rhs.size());
    if (n < need)
        throw std::invalid_argument("ber_order: basis degree must be at least 2^max(len)");
    Poly diff = reliability_poly(lhs, max_len) - reliability_poly(rhs, max_len);
    if (diff.is_zero()) return BerOutcome::Equal;
    switch (nform_sign_census(to_bernstein(diff, n).nform)) {
        case 1: return BerOutcome::Holds;
        case -1: return BerOutcome::HoldsReversed;
        default: return BerOutcome::Neither;
    }
}

// Lowest-order behavior at x = 0: f(eps) = mantissa * eps^exponent (1 + O(eps)).
// The N-form and power-basis readings agree because N_i vanishes below the
// order of f and equals the first power coefficient there.
struct ExpMant {
    unsigned exponent = 0;
    Int mantissa;  // signed; differences of reliability polynomials may dip negative
};

inline ExpMant exp_mant_direct(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("exp_mant_direct: zero polynomial");
    int ord = p.order();
    return {static_cast<unsigned>(ord), p.coeff(static_cast<std::size_t>(ord))};
}

// Closed form for reliability polynomials: the exponent is 2^z with z the
// number of zeros, and log2 of the mantissa is sum over ones of
// 2^(zeros to the right of that one).
struct ExpMantFormula {
    Int exponent;
    Int log2_mantissa;
};

inline ExpMantFormula exp_mant_formula(const BitString& s) {
    if (s.empty()) throw std::invalid_argument("exp_mant_formula: empty string");
    std::vector<unsigned> zeros_right(s.size() + 1, 0);
    for (std::size_t i = s.size(); i-- > 0;)
        zeros_right[i] = zeros_right[i + 1] + (s[i] == 0 ? 1u : 0u);
    ExpMantFormula out;
    out.exponent = two_pow(zeros_right[0]);
    out.log2_mantissa = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == 1) out.log2_mantissa += two_pow(zeros_right[i + 1]);
    return out;
}

// Exponent/mantissa of a reliability polynomial without building the full
// polynomial: only coefficients up to the known exponent are needed.
inline ExpMant reliability_exp_mant(const BitString& s, unsigned max_len = kDefaultMaxLen) {
    if (s.empty()) throw std::invalid_argument("reliability_exp_mant: empty string");
    check_length(s, max_len);
    std::size_t zeros = s.count_zeros();
    std::size_t limit = (std::size_t{1} << zeros) + 1;
    return exp_mant_direct(reliability_poly_truncated(s, limit));
}

}  // namespace becrank
