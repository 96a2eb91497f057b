#pragma once

#include "hypernum/hyperadd.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace hypernum {

/// Outcome of probing associativity at one triple.
struct AssocReport {
    HyperSet left;   // (x + y) + z
    HyperSet right;  // x + (y + z)
    bool equal = false;
    bool intersects = false;
};

/// Compares the two bracketings of x + y + z as exact sets.
inline AssocReport assoc_at(const Hyper& x, const Hyper& y, const Hyper& z) {
    AssocReport r;
    r.left = hyper_add_sets(hyper_add(x, y), HyperSet::singleton(z));
    r.right = hyper_add_sets(HyperSet::singleton(x), hyper_add(y, z));
    r.equal = r.left == r.right;
    r.intersects = r.left.intersects(r.right);
    return r;
}

namespace detail {
inline void require_positive(const Rational& a, const Rational& b, const Rational& c) {
    if (!a.is_positive() || !b.is_positive() || !c.is_positive())
        throw std::domain_error("defect: magnitudes must be positive");
}
} // namespace detail

/// Magnitudes of the two bracketings of ((+,a) + (-,b)) + (L,c):
/// both are Lambda singletons, with m_L = c + |a-b| and m_R = a + b + c.
inline std::pair<Rational, Rational> defect_components(const Rational& a, const Rational& b,
                                                       const Rational& c) {
    detail::require_positive(a, b, c);
    return {c + abs(a - b), a + b + c};
}

/// Associativity defect m_R - m_L for the ordered (+,-,L) triple with
/// magnitudes (a,b,c).  Closed form 2*min(a,b); independent of c.
/// Debug builds re-derive the value through assoc_at and assert
/// agreement; optimized builds use the closed form alone.
inline Rational defect(const Rational& a, const Rational& b, const Rational& c) {
    detail::require_positive(a, b, c);
    Rational closed = Rational(2) * min(a, b);
#ifndef NDEBUG
    AssocReport probe = assoc_at(Hyper::plus(a), Hyper::minus(b), Hyper::lambda(c));
    assert(probe.left.size() == 1 && probe.right.size() == 1);
    Rational via_brackets = mag(*probe.right.begin()) - mag(*probe.left.begin());
    assert(via_brackets == closed);
#endif
    return closed;
}

} // namespace hypernum
