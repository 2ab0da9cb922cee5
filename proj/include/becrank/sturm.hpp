#pragma once

// Sturm-sequence root counting over exact integer arithmetic. Serves as the
// independent oracle behind the subdivision certifier.

#include "becrank/polyfactor.hpp"

#include <stdexcept>
#include <utility>

namespace becrank {

namespace detail {

// Tracks sign variations of a sequence as terms arrive; zeros are skipped.
class VariationCounter {
public:
    void feed(int sign) {
        if (sign == 0) return;
        if (last_ != 0 && sign != last_) ++count_;
        last_ = sign;
    }
    long count() const { return count_; }

private:
    int last_ = 0;
    long count_ = 0;
};

}  // namespace detail

// Number of distinct real roots of p in the open interval (a, b). The
// endpoints must not be roots; callers hitting a root must perturb the
// endpoint themselves.
inline long sturm_root_count(const Poly& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw std::invalid_argument("sturm_root_count: zero polynomial");
    if (!(a < b)) throw std::invalid_argument("sturm_root_count: requires a < b");
    if (p.sign_at(a) == 0 || p.sign_at(b) == 0)
        throw std::invalid_argument("sturm_root_count: endpoint is a root; perturb the endpoint");
    if (p.degree() == 0) return 0;

    Poly prev = primitive_part(p);
    Poly curr = primitive_part(p.derivative());
    detail::VariationCounter va, vb;
    va.feed(prev.sign_at(a));
    vb.feed(prev.sign_at(b));
    while (!curr.is_zero()) {
        va.feed(curr.sign_at(a));
        vb.feed(curr.sign_at(b));
        Poly next = -pseudo_rem_positive(prev, curr);
        next = primitive_part(next);
        prev = std::move(curr);
        curr = std::move(next);
    }
    return va.count() - vb.count();
}

}  // namespace becrank
