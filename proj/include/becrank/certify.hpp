#pragma once

// Exact sign certification of polynomials over [0,1] and the standard
// reliability order built on it. The certifier strips endpoint factors,
// tries the global N-form, samples for quick sign-change witnesses, and
// otherwise subdivides the square-free odd part with exact de Casteljau
// halving; a Sturm fallback guards the subdivision depth cap.

#include "becrank/bernstein.hpp"
#include "becrank/polyfactor.hpp"
#include "becrank/reliability.hpp"
#include "becrank/sturm.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace becrank {

enum class OrderOutcome { Greater, Less, Equal, Incomparable };

inline const char* to_string(OrderOutcome o) {
    switch (o) {
        case OrderOutcome::Greater: return "Greater";
        case OrderOutcome::Less: return "Less";
        case OrderOutcome::Equal: return "Equal";
        default: return "Incomparable";
    }
}

enum class SignVerdict { NonnegativeOn01, NonpositiveOn01, SignChange };

inline const char* to_string(SignVerdict v) {
    switch (v) {
        case SignVerdict::NonnegativeOn01: return "nonnegative_on_01";
        case SignVerdict::NonpositiveOn01: return "nonpositive_on_01";
        default: return "sign_change";
    }
}

// For a Nonnegative/Nonpositive verdict the division points cover [0,1] and
// the certified factor has one-signed Bernstein coefficients on every piece;
// when odd_part_reduced is set, the certified factor is the square-free odd
// part and the remainder is an even square times endpoint powers. For a
// SignChange verdict the witness is a rational pair straddling a root of the
// odd part with opposite signs.
struct Certificate {
    SignVerdict verdict = SignVerdict::NonnegativeOn01;
    std::vector<Rat> division_points;
    std::optional<std::pair<Rat, Rat>> witness;
    unsigned zero_mult_at0 = 0;
    unsigned zero_mult_at1 = 0;
    bool odd_part_reduced = false;
    bool sturm_fallback = false;
};

struct CertifyOptions {
    unsigned depth_cap = 64;
    unsigned sample_grid = 16;  // endpoint-inclusive sampling at k/grid
};

namespace detail {

// Scaled de Casteljau halving. Input: Bernstein coefficients of a degree-n
// polynomial on some interval, times a positive scale. Output: coefficients
// on both halves, times (scale * 2^n).
inline void decasteljau_split(const std::vector<Int>& c, std::vector<Int>& left, std::vector<Int>& right) {
    std::size_t n = c.size() - 1;
    std::vector<Int> u = c;
    left.assign(c.size(), Int(0));
    right.assign(c.size(), Int(0));
    left[0] = u[0];
    right[n] = u[n];
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i + k <= n; ++i) u[i] += u[i + 1];
        left[k] = u[0];
        right[n - k] = u[n - k];
    }
    for (std::size_t j = 0; j <= n; ++j) {
        left[j] <<= (n - j);
        right[j] <<= j;
    }
}

inline void strip_common_power_of_two(std::vector<Int>& c) {
    unsigned long shift = ~0ul;
    for (const auto& v : c) {
        if (v == 0) continue;
        shift = std::min(shift, mpz_scan1(v.backend().data(), 0));
        if (shift == 0) return;
    }
    if (shift == ~0ul || shift == 0) return;
    for (auto& v : c) v >>= shift;
}

// Finds rationals l < center < r within (lo, hi) at which h takes opposite
// nonzero signs; center must be a simple interior root of the square-free h.
inline std::pair<Rat, Rat> straddle_around_root(const Poly& h, const Rat& center, const Rat& lo, const Rat& hi) {
    Rat delta = std::min(center - lo, hi - center) / 2;
    while (true) {
        Rat l = center - delta, r = center + delta;
        int sl = h.sign_at(l), sr = h.sign_at(r);
        if (sl != 0 && sr != 0 && sl != sr) return {l, r};
        delta /= 2;
    }
}

struct SubdivisionResult {
    enum class Kind { OneSigned, Witness, DepthCapHit } kind;
    int sign = 0;  // for OneSigned
    std::pair<Rat, Rat> witness{};
    std::vector<Rat> division_points;
};

// Explores [0,1] for the square-free polynomial h with h(0) != 0, h(1) != 0.
inline SubdivisionResult subdivide(const Poly& h, unsigned depth_cap) {
    struct Node {
        Rat a, b;
        std::vector<Int> coeffs;
        unsigned depth;
    };
    SubdivisionResult res;
    std::vector<Node> stack;
    stack.push_back({Rat(0), Rat(1), to_bernstein(h, static_cast<unsigned>(h.degree())).nform, 0});
    bool saw_pos = false, saw_neg = false;
    std::vector<std::pair<Rat, int>> leaves;  // left endpoint, certified sign
    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        int census = nform_sign_census(node.coeffs);
        if (census != 0) {
            (census > 0 ? saw_pos : saw_neg) = true;
            leaves.emplace_back(node.a, census);
            continue;
        }
        int sa = sign_of(node.coeffs.front());
        int sb = sign_of(node.coeffs.back());
        if (sa != 0 && sb != 0 && sa != sb) {
            res.kind = SubdivisionResult::Kind::Witness;
            res.witness = {node.a, node.b};
            return res;
        }
        if (node.depth >= depth_cap) {
            res.kind = SubdivisionResult::Kind::DepthCapHit;
            return res;
        }
        Rat mid = (node.a + node.b) / 2;
        std::vector<Int> left, right;
        decasteljau_split(node.coeffs, left, right);
        if (left.back() == 0) {  // simple root exactly at the midpoint
            res.kind = SubdivisionResult::Kind::Witness;
            res.witness = straddle_around_root(h, mid, node.a, node.b);
            return res;
        }
        strip_common_power_of_two(left);
        strip_common_power_of_two(right);
        stack.push_back({mid, node.b, std::move(right), node.depth + 1});
        stack.push_back({node.a, mid, std::move(left), node.depth + 1});
    }
    if (saw_pos && saw_neg) {
        // Adjacent leaves certified with opposite signs meet at a root.
        std::sort(leaves.begin(), leaves.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        for (std::size_t i = 0; i + 1 < leaves.size(); ++i) {
            if (leaves[i].second != leaves[i + 1].second) {
                const Rat& boundary = leaves[i + 1].first;
                res.kind = SubdivisionResult::Kind::Witness;
                res.witness = straddle_around_root(h, boundary, leaves[i].first,
                                                   i + 2 < leaves.size() ? leaves[i + 2].first : Rat(1));
                return res;
            }
        }
    }
    res.kind = SubdivisionResult::Kind::OneSigned;
    res.sign = saw_neg ? -1 : 1;
    res.division_points.reserve(leaves.size() + 1);
    std::sort(leaves.begin(), leaves.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [a, s] : leaves) res.division_points.push_back(a);
    res.division_points.push_back(Rat(1));
    return res;
}

// Sturm fallback: isolates a sign-change bracket of the square-free h, or
// certifies that h has no root in (0,1).
inline std::optional<std::pair<Rat, Rat>> sturm_find_straddle(const Poly& h) {
    if (sturm_root_count(h, Rat(0), Rat(1)) == 0) return std::nullopt;
    Rat a(0), b(1);
    while (true) {
        if (h.sign_at(a) * h.sign_at(b) < 0) {
            Rat mid = (a + b) / 2;
            int sm = h.sign_at(mid);
            if (sm == 0) return straddle_around_root(h, mid, a, b);
            if (sm != h.sign_at(a)) b = mid;
            else a = mid;
            if (b - a < Rat(1, 1024)) return std::make_pair(a, b);
            continue;
        }
        Rat mid = (a + b) / 2;
        int sm = h.sign_at(mid);
        if (sm == 0) return straddle_around_root(h, mid, a, b);
        if (sturm_root_count(h, a, mid) % 2 == 1) b = mid;
        else if (sturm_root_count(h, mid, b) % 2 == 1) a = mid;
        else if (sturm_root_count(h, a, mid) > 0) b = mid;
        else a = mid;
    }
}

}  // namespace detail

// Decides the sign behavior of a nonzero polynomial on [0,1].
inline Certificate certify_nonneg(const Poly& p, const CertifyOptions& opts = {}) {
    if (p.is_zero()) throw std::domain_error("certify_nonneg: zero polynomial");
    Certificate cert;

    // Strip x^e and (1-x)^f; both factors are nonnegative on [0,1].
    int e = p.order();
    Poly q = p.shifted_down(static_cast<std::size_t>(e));
    cert.zero_mult_at0 = static_cast<unsigned>(e);
    while (q.sum_of_coeffs() == 0) {
        q = q.divided_by_one_minus_x();
        ++cert.zero_mult_at1;
    }

    auto one_signed = [&](int sign, std::vector<Rat> division) {
        cert.verdict = sign > 0 ? SignVerdict::NonnegativeOn01 : SignVerdict::NonpositiveOn01;
        cert.division_points = std::move(division);
        return cert;
    };

    if (q.degree() == 0) return one_signed(sign_of(q.coeff(0)), {Rat(0), Rat(1)});

    // Global N-form at the native degree settles most comparisons outright.
    int census = nform_sign_census(to_bernstein(q, static_cast<unsigned>(q.degree())).nform);
    if (census != 0) return one_signed(census, {Rat(0), Rat(1)});

    // Cheap sampling pass for an early sign-change witness.
    int prev_sign = 0;
    Rat prev_point;
    for (unsigned k = 0; k <= opts.sample_grid; ++k) {
        Rat point(static_cast<long>(k), static_cast<long>(opts.sample_grid));
        int s = q.sign_at(point);
        if (s == 0) continue;
        if (prev_sign != 0 && s != prev_sign) {
            cert.verdict = SignVerdict::SignChange;
            cert.witness = {prev_point, point};
            return cert;
        }
        prev_sign = s;
        prev_point = point;
    }

    // Full decision on the square-free odd part; the removed factor is an
    // even square and cannot flip sign.
    Poly h = square_free_odd_part(q);
    cert.odd_part_reduced = h.degree() < q.degree();
    if (h.degree() == 0) return one_signed(sign_of(h.coeff(0)), {Rat(0), Rat(1)});

    auto sub = detail::subdivide(h, opts.depth_cap);
    switch (sub.kind) {
        case detail::SubdivisionResult::Kind::OneSigned:
            return one_signed(sub.sign, std::move(sub.division_points));
        case detail::SubdivisionResult::Kind::Witness:
            cert.verdict = SignVerdict::SignChange;
            cert.witness = sub.witness;
            return cert;
        case detail::SubdivisionResult::Kind::DepthCapHit:
            break;
    }

    cert.sturm_fallback = true;
    auto bracket = detail::sturm_find_straddle(h);
    if (bracket) {
        cert.verdict = SignVerdict::SignChange;
        cert.witness = *bracket;
        return cert;
    }
    int s0 = h.sign_at(Rat(0));
    int s1 = h.sign_at(Rat(1));
    if (s0 != s1)
        throw std::logic_error("certify_nonneg: Sturm and endpoint signs disagree");
    return one_signed(s0, {Rat(0), Rat(1)});
}

// The standard reliability partial order, decided exactly. Equality holds
// only for identical strings (distinct strings have distinct polynomials).
inline std::pair<OrderOutcome, std::optional<Certificate>> std_compare_certified(
    const BitString& lhs, const BitString& rhs, unsigned max_len = kDefaultMaxLen,
    const CertifyOptions& opts = {}) {
    if (lhs == rhs) return {OrderOutcome::Equal, std::nullopt};
    Poly diff = reliability_poly(lhs, max_len) - reliability_poly(rhs, max_len);
    if (diff.is_zero()) return {OrderOutcome::Equal, std::nullopt};
    Certificate cert = certify_nonneg(diff, opts);
    OrderOutcome outcome = cert.verdict == SignVerdict::NonnegativeOn01 ? OrderOutcome::Greater
                           : cert.verdict == SignVerdict::NonpositiveOn01 ? OrderOutcome::Less
                                                                          : OrderOutcome::Incomparable;
    return {outcome, std::move(cert)};
}

inline OrderOutcome std_compare(const BitString& lhs, const BitString& rhs,
                                unsigned max_len = kDefaultMaxLen) {
    return std_compare_certified(lhs, rhs, max_len).first;
}

}  // namespace becrank
