#pragma once

// Outward-rounded dyadic interval arithmetic on MPFR binary floats, used for
// halfway points (nested radicals) and irrational beta expansions. Endpoints
// are computed with explicit directed rounding; every interval encloses the
// exact target value.

#include "becrank/numeric.hpp"

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

namespace becrank {

inline constexpr unsigned kIntervalStartPrec = 64;
inline constexpr unsigned kIntervalCapPrec = 1024;

class BigFloat {
public:
    explicit BigFloat(unsigned prec = kIntervalStartPrec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(BigFloat o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    static BigFloat from_rat(const Rat& r, unsigned prec, mpfr_rnd_t rnd) {
        BigFloat f(prec);
        mpfr_set_q(f.v_, r.backend().data(), rnd);
        return f;
    }
    static BigFloat from_long(long x, unsigned prec) {
        BigFloat f(prec);
        mpfr_set_si(f.v_, x, MPFR_RNDN);
        return f;
    }

    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
    bool operator<=(const BigFloat& o) const { return cmp(o) <= 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    std::string str(unsigned digits = 24) const {
        char buf[64];
        std::string fmt = "%." + std::to_string(digits) + "Rg";
        mpfr_snprintf(buf, sizeof buf, fmt.c_str(), v_);
        return buf;
    }

private:
    mpfr_t v_;
};

struct DyadicInterval {
    BigFloat lo, hi;

    DyadicInterval() = default;
    DyadicInterval(BigFloat l, BigFloat h) : lo(std::move(l)), hi(std::move(h)) {}

    static DyadicInterval exact_rat(const Rat& r, unsigned prec) {
        return {BigFloat::from_rat(r, prec, MPFR_RNDD), BigFloat::from_rat(r, prec, MPFR_RNDU)};
    }
    static DyadicInterval exact_long(long x, unsigned prec) {
        return {BigFloat::from_long(x, prec), BigFloat::from_long(x, prec)};
    }

    double mid() const { return (lo.to_double() + hi.to_double()) / 2.0; }

    bool contains(const Rat& r) const {
        BigFloat t = BigFloat::from_rat(r, 256, MPFR_RNDN);
        return mpfr_cmp(lo.raw(), t.raw()) <= 0 && mpfr_cmp(t.raw(), hi.raw()) <= 0;
    }

    // Width at most 2^-bits?
    bool tighter_than(long bits, unsigned prec) const {
        BigFloat w(prec);
        mpfr_sub(w.raw(), hi.raw(), lo.raw(), MPFR_RNDU);
        if (w.sign() <= 0) return true;
        mpfr_t one;
        mpfr_init2(one, 32);
        mpfr_set_ui_2exp(one, 1, -bits, MPFR_RNDN);
        bool ok = mpfr_cmp(w.raw(), one) <= 0;
        mpfr_clear(one);
        return ok;
    }
};

inline DyadicInterval iv_add(const DyadicInterval& a, const DyadicInterval& b, unsigned prec) {
    DyadicInterval r{BigFloat(prec), BigFloat(prec)};
    mpfr_add(r.lo.raw(), a.lo.raw(), b.lo.raw(), MPFR_RNDD);
    mpfr_add(r.hi.raw(), a.hi.raw(), b.hi.raw(), MPFR_RNDU);
    return r;
}

inline DyadicInterval iv_sub(const DyadicInterval& a, const DyadicInterval& b, unsigned prec) {
    DyadicInterval r{BigFloat(prec), BigFloat(prec)};
    mpfr_sub(r.lo.raw(), a.lo.raw(), b.hi.raw(), MPFR_RNDD);
    mpfr_sub(r.hi.raw(), a.hi.raw(), b.lo.raw(), MPFR_RNDU);
    return r;
}

// General interval product via endpoint products.
inline DyadicInterval iv_mul(const DyadicInterval& a, const DyadicInterval& b, unsigned prec) {
    BigFloat cand_lo(prec), cand_hi(prec), t(prec);
    bool first = true;
    auto consider = [&](mpfr_srcptr x, mpfr_srcptr y) {
        mpfr_mul(t.raw(), x, y, MPFR_RNDD);
        if (first || mpfr_cmp(t.raw(), cand_lo.raw()) < 0) mpfr_set(cand_lo.raw(), t.raw(), MPFR_RNDD);
        mpfr_mul(t.raw(), x, y, MPFR_RNDU);
        if (first || mpfr_cmp(t.raw(), cand_hi.raw()) > 0) mpfr_set(cand_hi.raw(), t.raw(), MPFR_RNDU);
        first = false;
    };
    consider(a.lo.raw(), b.lo.raw());
    consider(a.lo.raw(), b.hi.raw());
    consider(a.hi.raw(), b.lo.raw());
    consider(a.hi.raw(), b.hi.raw());
    return {std::move(cand_lo), std::move(cand_hi)};
}

// sqrt on a nonnegative interval (lower endpoint clamped at zero).
inline DyadicInterval iv_sqrt(const DyadicInterval& a, unsigned prec) {
    DyadicInterval r{BigFloat(prec), BigFloat(prec)};
    if (a.lo.sign() < 0) mpfr_set_zero(r.lo.raw(), 1);
    else mpfr_sqrt(r.lo.raw(), a.lo.raw(), MPFR_RNDD);
    mpfr_sqrt(r.hi.raw(), a.hi.raw(), MPFR_RNDU);
    return r;
}

inline DyadicInterval iv_one_minus(const DyadicInterval& a, unsigned prec) {
    DyadicInterval r{BigFloat(prec), BigFloat(prec)};
    mpfr_ui_sub(r.lo.raw(), 1, a.hi.raw(), MPFR_RNDD);
    mpfr_ui_sub(r.hi.raw(), 1, a.lo.raw(), MPFR_RNDU);
    return r;
}

inline DyadicInterval iv_clamp01(DyadicInterval a) {
    if (a.lo.sign() < 0) mpfr_set_zero(a.lo.raw(), 1);
    if (mpfr_cmp_ui(a.hi.raw(), 1) > 0) mpfr_set_ui(a.hi.raw(), 1, MPFR_RNDN);
    return a;
}

// Encloses 2^(num/den).
inline DyadicInterval iv_exp2_rational(const Rat& exponent, unsigned prec) {
    DyadicInterval r{BigFloat(prec), BigFloat(prec)};
    BigFloat e_lo = BigFloat::from_rat(exponent, prec, MPFR_RNDD);
    BigFloat e_hi = BigFloat::from_rat(exponent, prec, MPFR_RNDU);
    mpfr_exp2(r.lo.raw(), e_lo.raw(), MPFR_RNDD);
    mpfr_exp2(r.hi.raw(), e_hi.raw(), MPFR_RNDU);
    return r;
}

inline bool iv_certainly_less(const DyadicInterval& a, const DyadicInterval& b) {
    return mpfr_cmp(a.hi.raw(), b.lo.raw()) < 0;
}

inline bool iv_overlaps(const DyadicInterval& a, const DyadicInterval& b) {
    return !iv_certainly_less(a, b) && !iv_certainly_less(b, a);
}

}  // namespace becrank
