#pragma once

#include "hypernum/assoc.hpp"
#include "hypernum/hyperadd.hpp"

#include <array>
#include <cassert>
#include <stdexcept>

namespace hypernum {

/// Absolute value lost when adding two rationals: |r1| + |r2| - |r1+r2|.
/// Nonnegative and symmetric; zero exactly when an operand is zero or
/// the signs agree.
inline Rational c_mass(const Rational& r1, const Rational& r2) {
    return abs(r1) + abs(r2) - abs(r1 + r2);
}

/// Element of the ambient cancellation monoid: a real shadow plus a
/// nonnegative accumulated cancellation mass.
class AmbientElem {
public:
    AmbientElem() = default; // (0, 0), the neutral element

    AmbientElem(Rational shadow, Rational mass)
        : shadow_(std::move(shadow)), mass_(std::move(mass)) {
        if (mass_.is_negative())
            throw std::invalid_argument("AmbientElem: mass must be nonnegative");
    }

    const Rational& shadow() const { return shadow_; }
    const Rational& mass() const { return mass_; }

    friend bool operator==(const AmbientElem&, const AmbientElem&) = default;

    std::string str() const { return "(" + shadow_.str() + ", " + mass_.str() + ")"; }

private:
    Rational shadow_ = Rational(0);
    Rational mass_ = Rational(0);
};

/// Monoid operation: shadows add, masses add plus the cancellation mass
/// of the two shadows.  Commutative and strictly associative.
inline AmbientElem amb_add(const AmbientElem& u, const AmbientElem& v) {
    return AmbientElem(u.shadow() + v.shadow(),
                       u.mass() + v.mass() + c_mass(u.shadow(), v.shadow()));
}

/// Projection onto the real line; a surjective monoid homomorphism with
/// kernel {(0, c)}.
inline Rational pi(const AmbientElem& u) { return u.shadow(); }

/// Embedding of hypernumbers: classical elements carry their signed
/// value as shadow with zero mass, Lambda elements carry zero shadow
/// and their magnitude as mass.
inline AmbientElem iota(const Hyper& h) {
    switch (h.sign()) {
        case Sign::Zero: return AmbientElem();
        case Sign::Plus: return AmbientElem(h.magnitude(), Rational(0));
        case Sign::Minus: return AmbientElem(-h.magnitude(), Rational(0));
        case Sign::Lambda: return AmbientElem(Rational(0), h.magnitude());
    }
    throw std::logic_error("iota: bad Sign value");
}

/// Collapses an ambient state to a Lambda magnitude |shadow| + mass;
/// the neutral state (0,0) maps to zero.
inline Hyper p_lambda(const AmbientElem& u) {
    if (u.shadow().is_zero() && u.mass().is_zero()) return Hyper::zero();
    return Hyper::lambda(abs(u.shadow()) + u.mass());
}

/// Ambient reading of the ordered (+,-,L) triple with magnitudes
/// (a,b,c).
struct AmbientTrace {
    AmbientElem total;  // iota(+,a) (+) iota(-,b) (+) iota(L,c)
    Hyper left_read;    // p_lambda((a-b, c)): only the original L-mass
    Hyper right_read;   // p_lambda(total): all accumulated mass
    Rational defect;    // mag(right_read) - mag(left_read)
};

/// Computes the ambient interpretation of the two bracketings: the
/// right bracketing reads the full ambient state, the left one reads
/// the state with only the original Lambda reserve, and their magnitude
/// gap is exactly c_mass(a, -b).
inline AmbientTrace ambient_trace(const Rational& a, const Rational& b, const Rational& c) {
    if (!a.is_positive() || !b.is_positive() || !c.is_positive())
        throw std::domain_error("ambient_trace: magnitudes must be positive");

    const Hyper x = Hyper::plus(a);
    const Hyper y = Hyper::minus(b);
    const Hyper z = Hyper::lambda(c);

    AmbientTrace t;
    t.total = amb_add(amb_add(iota(x), iota(y)), iota(z));
    t.right_read = p_lambda(t.total);
    t.left_read = p_lambda(AmbientElem(a - b, c));
    t.defect = mag(t.right_read) - mag(t.left_read);

#ifndef NDEBUG
    assert(t.total == AmbientElem(a - b, c + c_mass(a, -b)));
    AssocReport probe = assoc_at(x, y, z);
    assert(probe.left.contains(t.left_read));
    assert(probe.right.contains(t.right_read));
    assert(t.defect == c_mass(a, -b));
#endif
    return t;
}

/// A triple whose two bracketings are disjoint singletons, certifying
/// that no encoding into an associative monoid can admit a decoding
/// compatible with both bracketings of every triple.
inline std::array<Hyper, 3> obstruction_witness() {
    const std::array<Hyper, 3> w = {Hyper::plus(1), Hyper::minus(1), Hyper::lambda(1)};
    AssocReport probe = assoc_at(w[0], w[1], w[2]);
    if (probe.intersects)
        throw std::logic_error("obstruction_witness: bracketings unexpectedly intersect");
    return w;
}

} // namespace hypernum
