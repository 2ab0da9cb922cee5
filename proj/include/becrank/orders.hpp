#pragma once

// Approximate and total preorders on bit strings: behavior near capacity 0
// and 1 (exponent/mantissa), halfway points, beta expansion, average, the
// fast preorder combining them, and the counting-based incomparability test.

#include "becrank/bernstein.hpp"
#include "becrank/certify.hpp"
#include "becrank/dyadic.hpp"
#include "becrank/reliability.hpp"

#include <stdexcept>
#include <string>
#include <variant>

namespace becrank {

enum class TotalOutcome { Greater, Equivalent, Less };

inline const char* to_string(TotalOutcome o) {
    switch (o) {
        case TotalOutcome::Greater: return "Greater";
        case TotalOutcome::Less: return "Less";
        default: return "Equivalent";
    }
}

inline TotalOutcome reversed(TotalOutcome o) {
    if (o == TotalOutcome::Greater) return TotalOutcome::Less;
    if (o == TotalOutcome::Less) return TotalOutcome::Greater;
    return TotalOutcome::Equivalent;
}

// Comparison result of a total preorder decided through interval arithmetic;
// capped marks an Equivalent that stopped at the precision cap rather than
// being established exactly.
struct TotalCmp {
    TotalOutcome outcome;
    bool capped = false;
};

// ---------------------------------------------------------------- @0 and @1

// Lexicographic on (exponent ascending, mantissa descending) of the
// reliability polynomials: smaller exponent wins, then larger mantissa.
inline TotalOutcome at0_compare(const BitString& lhs, const BitString& rhs,
                                unsigned max_len = kDefaultMaxLen) {
    ExpMant a = reliability_exp_mant(lhs, max_len);
    ExpMant b = reliability_exp_mant(rhs, max_len);
    if (a.exponent != b.exponent)
        return a.exponent < b.exponent ? TotalOutcome::Greater : TotalOutcome::Less;
    if (a.mantissa != b.mantissa)
        return a.mantissa > b.mantissa ? TotalOutcome::Greater : TotalOutcome::Less;
    return TotalOutcome::Equivalent;
}

// The difference-based @0 relation: the difference vanishes or its lowest
// coefficient is positive.
inline bool at0_geq_diff(const BitString& lhs, const BitString& rhs,
                         unsigned max_len = kDefaultMaxLen) {
    Poly diff = reliability_poly(lhs, max_len) - reliability_poly(rhs, max_len);
    if (diff.is_zero()) return true;
    return exp_mant_direct(diff).mantissa > 0;
}

inline TotalOutcome at1_compare(const BitString& lhs, const BitString& rhs,
                                unsigned max_len = kDefaultMaxLen) {
    return reversed(at0_compare(lhs.complement(), rhs.complement(), max_len));
}

inline bool at1_geq_diff(const BitString& lhs, const BitString& rhs,
                         unsigned max_len = kDefaultMaxLen) {
    return at0_geq_diff(rhs.complement(), lhs.complement(), max_len);
}

// ------------------------------------------------------------ halfway point

// One chain pass at a fixed working precision. Inverse transforms are
// applied outermost-first: bit 0 contributes sqrt(y), bit 1 contributes
// 1 - sqrt(1 - y).
inline DyadicInterval hlf_chain(const BitString& s, unsigned prec) {
    DyadicInterval y = DyadicInterval::exact_rat(Rat(1, 2), prec);
    for (std::size_t i = s.size(); i-- > 0;) {
        if (s[i] == 0) {
            y = iv_sqrt(y, prec);
        } else {
            y = iv_one_minus(iv_sqrt(iv_clamp01(iv_one_minus(y, prec)), prec), prec);
        }
        y = iv_clamp01(std::move(y));
    }
    return y;
}

// Enclosure of the halfway point with width at most 2^-precision.
inline DyadicInterval hlf(const BitString& s, long precision = kIntervalStartPrec) {
    unsigned wp = static_cast<unsigned>(std::max<long>(precision + 16, kIntervalStartPrec));
    while (true) {
        DyadicInterval y = hlf_chain(s, wp);
        if (y.tighter_than(precision, wp)) return y;
        wp *= 2;
    }
}

// Smaller halfway point means a better channel, so the comparison reverses.
inline TotalCmp hlf_compare(const BitString& lhs, const BitString& rhs) {
    if (lhs == rhs) return {TotalOutcome::Equivalent, false};
    for (unsigned prec = kIntervalStartPrec; prec <= kIntervalCapPrec; prec *= 2) {
        DyadicInterval a = hlf_chain(lhs, prec);
        DyadicInterval b = hlf_chain(rhs, prec);
        if (iv_certainly_less(a, b)) return {TotalOutcome::Greater, false};
        if (iv_certainly_less(b, a)) return {TotalOutcome::Less, false};
    }
    return {TotalOutcome::Equivalent, true};
}

// Influence of the last digit on the halfway point: hlf(s0) - hlf(s1) >= 0.
inline DyadicInterval influence(const BitString& s, long precision = kIntervalStartPrec,
                                unsigned max_len = kDefaultMaxLen) {
    if (s.size() + 1 > max_len)
        throw std::length_error("influence: chain length " + std::to_string(s.size() + 1) +
                                " exceeds cap L_max=" + std::to_string(max_len));
    unsigned wp = static_cast<unsigned>(std::max<long>(precision + 16, kIntervalStartPrec));
    while (true) {
        DyadicInterval d =
            iv_sub(hlf_chain(s.appended(0), wp), hlf_chain(s.appended(1), wp), wp);
        if (d.tighter_than(precision, wp)) return d;
        wp *= 2;
    }
}

// ------------------------------------------------------------ beta expansion

// Beta is either an exact positive rational or 2^(p/q) for rational p/q.
struct BetaSpec {
    bool is_two_pow = false;
    Rat ratio{1};
    Rat exponent{0};
    std::string label;

    static BetaSpec rational(const Rat& v) {
        if (v <= 0) throw std::invalid_argument("beta must be positive");
        BetaSpec s;
        s.ratio = v;
        s.label = fraction_string(v);
        return s;
    }

    static BetaSpec two_pow(const Rat& e) {
        BetaSpec s;
        s.is_two_pow = true;
        s.exponent = e;
        s.label = "2^{" + fraction_string(e) + "}";
        return s;
    }

    // Accepts "2^{1/4}", "2^(1/3.627)", a fraction "3/2", or a decimal "1.5".
    static BetaSpec parse(std::string_view text) {
        if (text.size() > 2 && text[0] == '2' && text[1] == '^') {
            std::string_view inner = text.substr(2);
            if (inner.size() >= 2 && (inner.front() == '{' || inner.front() == '(') &&
                (inner.back() == '}' || inner.back() == ')'))
                inner = inner.substr(1, inner.size() - 2);
            auto slash = inner.find('/');
            Rat e;
            if (slash == std::string_view::npos) {
                e = parse_rational(inner);
            } else {
                Rat den = parse_rational(inner.substr(slash + 1));
                if (den == 0) throw std::invalid_argument("beta exponent has zero denominator");
                e = parse_rational(inner.substr(0, slash)) / den;
            }
            if (denominator(e) == 1) {
                Int mag = pow_int(2, static_cast<unsigned long>(abs(numerator(e))));
                return rational(numerator(e) >= 0 ? Rat(mag) : Rat(1, mag));
            }
            BetaSpec s = two_pow(e);
            s.label = std::string(text);
            return s;
        }
        return rational(parse_rational(text));
    }
};

inline Rat beta_value_exact(const BitString& s, const Rat& beta) {
    Rat v = 0;
    for (std::size_t i = 0; i < s.size(); ++i) v = v * beta + Rat(s[i]);
    return v;
}

inline DyadicInterval beta_value_interval(const BitString& s, const BetaSpec& spec, unsigned prec) {
    DyadicInterval beta = spec.is_two_pow ? iv_exp2_rational(spec.exponent, prec)
                                          : DyadicInterval::exact_rat(spec.ratio, prec);
    DyadicInterval v = DyadicInterval::exact_long(0, prec);
    for (std::size_t i = 0; i < s.size(); ++i) {
        v = iv_mul(v, beta, prec);
        if (s[i]) v = iv_add(v, DyadicInterval::exact_long(1, prec), prec);
    }
    return v;
}

// The beta-expansion value as printable evidence: exact when beta is
// rational, an enclosure otherwise.
using BetaValue = std::variant<Rat, DyadicInterval>;

inline BetaValue beta_value(const BitString& s, const BetaSpec& spec,
                            unsigned prec = kIntervalStartPrec) {
    if (!spec.is_two_pow) return beta_value_exact(s, spec.ratio);
    return beta_value_interval(s, spec, prec);
}

inline TotalCmp beta_compare(const BitString& lhs, const BitString& rhs, const BetaSpec& spec) {
    if (!spec.is_two_pow) {
        Rat a = beta_value_exact(lhs, spec.ratio);
        Rat b = beta_value_exact(rhs, spec.ratio);
        if (a > b) return {TotalOutcome::Greater, false};
        if (a < b) return {TotalOutcome::Less, false};
        return {TotalOutcome::Equivalent, false};
    }
    // Leading zeros contribute nothing, so formally equal expansions are
    // detected without arithmetic.
    if (lhs.without_leading_zeros() == rhs.without_leading_zeros())
        return {TotalOutcome::Equivalent, false};
    for (unsigned prec = kIntervalStartPrec; prec <= kIntervalCapPrec; prec *= 2) {
        DyadicInterval a = beta_value_interval(lhs, spec, prec);
        DyadicInterval b = beta_value_interval(rhs, spec, prec);
        if (iv_certainly_less(b, a)) return {TotalOutcome::Greater, false};
        if (iv_certainly_less(a, b)) return {TotalOutcome::Less, false};
    }
    return {TotalOutcome::Equivalent, true};
}

// ------------------------------------------------------------------ average

inline TotalOutcome avg_compare(const BitString& lhs, const BitString& rhs,
                                unsigned max_len = kDefaultMaxLen) {
    Rat a = average(lhs, max_len);
    Rat b = average(rhs, max_len);
    if (a > b) return TotalOutcome::Greater;
    if (a < b) return TotalOutcome::Less;
    return TotalOutcome::Equivalent;
}

// ------------------------------------------------------------- fast preorder

// lhs dominates rhs under the fast preorder when it is at least as good
// near 0, near 1, and at the halfway point.
struct FstHolds {
    bool holds;
    bool capped = false;
};

inline FstHolds fst_holds(const BitString& lhs, const BitString& rhs,
                          unsigned max_len = kDefaultMaxLen) {
    if (at0_compare(lhs, rhs, max_len) == TotalOutcome::Less) return {false};
    if (at1_compare(lhs, rhs, max_len) == TotalOutcome::Less) return {false};
    TotalCmp h = hlf_compare(lhs, rhs);
    return {h.outcome != TotalOutcome::Less, h.capped};
}

struct FstResult {
    OrderOutcome outcome;
    bool capped = false;
};

// Projection of the fast preorder onto order outcomes. Strings equivalent in
// both directions (possible only through an hlf tie) are reported as
// Incomparable with the capped flag carried through.
inline FstResult fst_compare(const BitString& lhs, const BitString& rhs,
                             unsigned max_len = kDefaultMaxLen) {
    if (lhs == rhs) return {OrderOutcome::Equal, false};
    FstHolds fwd = fst_holds(lhs, rhs, max_len);
    FstHolds bwd = fst_holds(rhs, lhs, max_len);
    bool capped = fwd.capped || bwd.capped;
    if (fwd.holds && !bwd.holds) return {OrderOutcome::Greater, capped};
    if (bwd.holds && !fwd.holds) return {OrderOutcome::Less, capped};
    return {OrderOutcome::Incomparable, capped};
}

// --------------------------------------------------- counting incomparability

// Strictly more ones and strictly more zeros on one side certifies
// incomparability under the standard order.
inline bool more01_incomparable(const BitString& lhs, const BitString& rhs) {
    auto dominates = [](const BitString& a, const BitString& b) {
        return a.count_ones() > b.count_ones() && a.count_zeros() > b.count_zeros();
    };
    return dominates(lhs, rhs) || dominates(rhs, lhs);
}

}  // namespace becrank
