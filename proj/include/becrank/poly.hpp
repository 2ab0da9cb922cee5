#pragma once

// Exact univariate polynomials with arbitrary-precision integer coefficients
// in the power basis. Canonical form stores no trailing zeros; the zero
// polynomial has an empty coefficient vector and degree -1.

#include "becrank/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace becrank {

class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Int> coeffs) : c_(coeffs) { normalize(); }
    explicit Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
    explicit Poly(Int constant) : c_{std::move(constant)} { normalize(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly{Int(1)}; }
    static Poly x() { return Poly{Int(0), Int(1)}; }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    // Index of the lowest nonzero coefficient; -1 for the zero polynomial.
    int order() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return static_cast<int>(i);
        return -1;
    }

    const Int& coeff(std::size_t i) const {
        static const Int kZero{0};
        return i < c_.size() ? c_[i] : kZero;
    }
    const Int& leading() const {
        if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
        return c_.back();
    }
    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const Poly& rhs) const { return c_ == rhs.c_; }
    bool operator!=(const Poly& rhs) const { return c_ != rhs.c_; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    Poly operator+(const Poly& rhs) const {
        std::vector<Int> out(std::max(c_.size(), rhs.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + rhs.coeff(i);
        return Poly(std::move(out));
    }

    Poly operator-(const Poly& rhs) const {
        std::vector<Int> out(std::max(c_.size(), rhs.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - rhs.coeff(i);
        return Poly(std::move(out));
    }

    Poly operator*(const Poly& rhs) const {
        if (is_zero() || rhs.is_zero()) return Poly();
        std::vector<Int> out(c_.size() + rhs.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
                if (rhs.c_[j] == 0) continue;
                out[i + j] += c_[i] * rhs.c_[j];
            }
        }
        return Poly(std::move(out));
    }

    Poly operator*(const Int& k) const {
        if (k == 0) return Poly();
        Poly r = *this;
        for (auto& v : r.c_) v *= k;
        return r;
    }

    Poly square() const { return (*this) * (*this); }

    // Product truncated to degree < limit.
    Poly mul_truncated(const Poly& rhs, std::size_t limit) const {
        if (is_zero() || rhs.is_zero() || limit == 0) return Poly();
        std::vector<Int> out(std::min(limit, c_.size() + rhs.c_.size() - 1));
        for (std::size_t i = 0; i < c_.size() && i < limit; ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < rhs.c_.size() && i + j < limit; ++j) {
                if (rhs.c_[j] == 0) continue;
                out[i + j] += c_[i] * rhs.c_[j];
            }
        }
        return Poly(std::move(out));
    }

    Poly truncated(std::size_t limit) const {
        if (c_.size() <= limit) return *this;
        return Poly(std::vector<Int>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(limit)));
    }

    // Multiply by x^k.
    Poly shifted_up(std::size_t k) const {
        if (is_zero()) return Poly();
        std::vector<Int> out(c_.size() + k);
        for (std::size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
        return Poly(std::move(out));
    }

    // Exact division by x^k; every coefficient below k must vanish.
    Poly shifted_down(std::size_t k) const {
        for (std::size_t i = 0; i < k && i < c_.size(); ++i)
            if (c_[i] != 0) throw std::domain_error("not divisible by x^k");
        if (c_.size() <= k) return Poly();
        return Poly(std::vector<Int>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Int> out(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Int(static_cast<long>(i));
        return Poly(std::move(out));
    }

    Rat eval(const Rat& x) const {
        Rat acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Rat(c_[i]);
        return acc;
    }

    Int eval_int(const Int& x) const {
        Int acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // Sign of p(num/den) for den > 0, via the scaled integer value
    // p(num/den) * den^degree.
    int sign_at(const Int& num, const Int& den) const {
        if (is_zero()) return 0;
        Int acc = c_.back();
        Int den_pow = 1;
        for (std::size_t i = c_.size() - 1; i-- > 0;) {
            den_pow *= den;
            acc = acc * num + c_[i] * den_pow;
        }
        return sign_of(acc);
    }

    int sign_at(const Rat& x) const { return sign_at(numerator(x), denominator(x)); }

    Int sum_of_coeffs() const {  // = p(1)
        Int s = 0;
        for (const auto& v : c_) s += v;
        return s;
    }

    // Substitute x -> 1-x.
    Poly composed_with_one_minus_x() const {
        Poly acc;
        const Poly one_minus_x{Int(1), Int(-1)};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * one_minus_x + Poly{c_[i]};
        return acc;
    }

    // Exact division by (1-x); requires p(1) = 0.
    Poly divided_by_one_minus_x() const {
        if (is_zero()) return Poly();
        if (sum_of_coeffs() != 0) throw std::domain_error("not divisible by (1-x)");
        // p = (1-x) q  =>  q_0 = a_0, q_j = a_j + q_{j-1}.
        std::vector<Int> out(c_.size() - 1);
        Int carry = 0;
        for (std::size_t j = 0; j + 1 < c_.size(); ++j) {
            carry += c_[j];
            out[j] = carry;
        }
        return Poly(std::move(out));
    }

    // Exact antiderivative evaluated over [0,1]: sum a_j / (j+1).
    Rat integral_01() const {
        Rat s = 0;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) s += Rat(c_[i], Int(static_cast<long>(i + 1)));
        return s;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

inline Poly operator*(const Int& k, const Poly& p) { return p * k; }

// q(x) = 1 - p(1-x). Reliability polynomials of complementary strings are
// duals of each other.
inline Poly dual_poly(const Poly& p) { return Poly::one() - p.composed_with_one_minus_x(); }

inline std::ostream& operator<<(std::ostream& os, const Poly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = 0; i <= p.degree(); ++i) {
        const Int& a = p.coeff(static_cast<std::size_t>(i));
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        Int mag = abs(a);
        if (mag != 1 || i == 0) os << mag.str();
        if (i > 0) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os;
}

}  // namespace becrank
