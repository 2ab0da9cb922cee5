#pragma once

// Integer-polynomial factor machinery behind the exact sign oracles:
// contents and primitive parts, pseudo-remainders, primitive-PRS gcd,
// Yun square-free decomposition, and the square-free odd part.

#include "becrank/poly.hpp"

#include <stdexcept>
#include <vector>

namespace becrank {

// gcd of coefficient magnitudes; 0 for the zero polynomial, positive otherwise.
inline Int poly_content(const Poly& p) {
    Int g = 0;
    for (const auto& a : p.coeffs()) {
        g = gcd(g, a);
        if (g == 1) break;
    }
    return abs(g);
}

// p divided by its (positive) content; leading sign preserved.
inline Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    Int g = poly_content(p);
    if (g == 1) return p;
    std::vector<Int> out(p.coeffs());
    for (auto& a : out) a /= g;
    return Poly(std::move(out));
}

// Exact quotient a/b over Z[x]; throws if the division is not exact.
inline Poly exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return Poly();
    if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
    std::vector<Int> rem(a.coeffs());
    std::vector<Int> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const auto& bc = b.coeffs();
    const Int& blead = bc.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Int& top = rem[k + bc.size() - 1];
        if (top == 0) continue;
        Int q = top / blead;
        if (q * blead != top) throw std::domain_error("inexact polynomial division");
        quot[k] = q;
        for (std::size_t j = 0; j < bc.size(); ++j) rem[k + j] -= q * bc[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw std::domain_error("inexact polynomial division");
    return Poly(std::move(quot));
}

// Pseudo-remainder of a by b, normalized as if the multiplier were
// |lc(b)|^(deg a - deg b + 1), so that the sign matches a positive scaling
// of the true remainder.
inline Poly pseudo_rem_positive(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
    if (a.is_zero() || a.degree() < b.degree()) return a;
    const Int& blead = b.leading();
    long delta = a.degree() - b.degree();
    std::vector<Int> rem(a.coeffs());
    long steps_left = delta + 1;
    while (!rem.empty() && static_cast<long>(rem.size()) - 1 >= b.degree()) {
        Int lead = rem.back();
        std::size_t shift = rem.size() - static_cast<std::size_t>(b.degree()) - 1;
        for (auto& r : rem) r *= blead;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) rem[shift + j] -= lead * b.coeff(j);
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        --steps_left;
    }
    Poly r(std::move(rem));
    if (steps_left > 0) r = r * pow_int(blead, static_cast<unsigned long>(steps_left));
    // Flip if the accumulated multiplier lc(b)^(delta+1) was negative.
    if (blead < 0 && ((delta + 1) % 2) != 0) r = -r;
    return r;
}

// Primitive gcd with positive leading coefficient (primitive PRS).
inline Poly gcd_poly(Poly a, Poly b) {
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.is_zero()) return b.is_zero() || b.leading() > 0 ? b : -b;
    if (b.is_zero()) return a.leading() > 0 ? a : -a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Poly r = primitive_part(pseudo_rem_positive(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a.leading() > 0 ? a : -a;
}

// Square-free decomposition of a primitive, positive-leading polynomial:
// p = product of factors[k]^(k+1), each factor primitive with positive lead.
inline std::vector<Poly> yun_decompose(const Poly& p) {
    if (p.is_zero() || p.degree() < 1) throw std::domain_error("yun_decompose expects degree >= 1");
    Poly g = gcd_poly(p, p.derivative());
    if (g.degree() == 0) return {p};
    std::vector<Poly> factors;
    Poly c = exact_div(p, g);
    Poly d = exact_div(p.derivative(), g) - c.derivative();
    while (true) {
        Poly u = gcd_poly(c, d);
        factors.push_back(u);
        c = exact_div(c, u);
        if (c.degree() == 0) break;
        d = exact_div(d, u) - c.derivative();
    }
    return factors;
}

// Product of the square-free factors of p occurring with odd multiplicity,
// up to a positive constant, signed so that sign(result(x)) = sign(p(x))
// wherever p(x) != 0. Sign changes of p happen exactly at roots of this part.
inline Poly square_free_odd_part(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("square_free_odd_part of zero polynomial");
    int lead_sign = sign_of(p.leading());
    if (p.degree() < 1) return Poly{Int(lead_sign)};
    Poly body = primitive_part(lead_sign > 0 ? p : -p);
    Poly h = Poly::one();
    auto factors = yun_decompose(body);
    for (std::size_t k = 0; k < factors.size(); ++k)
        if (k % 2 == 0 && factors[k].degree() > 0) h = h * factors[k];
    if (lead_sign < 0) h = -h;
    return h;
}

}  // namespace becrank
