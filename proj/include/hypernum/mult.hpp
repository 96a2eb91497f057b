#pragma once

#include "hypernum/core.hpp"

#include <array>
#include <optional>
#include <stdexcept>

namespace hypernum {

/// The 3x3 multiplication table on the nonzero signs {+, -, L}:
/// + is the identity, - * - = +, and any product involving L is L.
/// Commutative and associative (checkable over the 27 triples).
struct SignMonoidTable {
    Sign entry(Sign s, Sign t) const {
        if (s == Sign::Zero || t == Sign::Zero)
            throw std::invalid_argument("SignMonoidTable: zero sign is not in the carrier");
        return table[sign_index(s) - 1][sign_index(t) - 1];
    }

    std::array<std::array<Sign, 3>, 3> table = {{
        // rows/cols ordered +, -, L
        {{Sign::Plus, Sign::Minus, Sign::Lambda}},
        {{Sign::Minus, Sign::Plus, Sign::Lambda}},
        {{Sign::Lambda, Sign::Lambda, Sign::Lambda}},
    }};
};

/// Product of two nonzero signs.  Throws if either operand is the zero
/// symbol; use sign_mul_ext for the absorbing extension.
inline Sign sign_mul(Sign s, Sign t) {
    static const SignMonoidTable table;
    return table.entry(s, t);
}

/// Extension of sign_mul to all four signs with zero absorbing.
inline Sign sign_mul_ext(Sign s, Sign t) {
    if (s == Sign::Zero || t == Sign::Zero) return Sign::Zero;
    return sign_mul(s, t);
}

/// Single-valued multiplication: signs multiply in the sign monoid,
/// magnitudes multiply exactly; zero is absorbing.
inline Hyper mul(const Hyper& x, const Hyper& y) {
    if (x.is_zero() || y.is_zero()) return Hyper::zero();
    return Hyper::make(sign_mul(x.sign(), y.sign()), x.magnitude() * y.magnitude());
}

/// Multiplicative inverse.  Units are exactly the +/- sectors, with
/// (s,a)^{-1} = (s,1/a); zero and the Lambda sector return nullopt,
/// which is a normal outcome rather than a fault.
inline std::optional<Hyper> mul_inverse(const Hyper& x) {
    if (x.sign() == Sign::Plus || x.sign() == Sign::Minus)
        return Hyper::make(x.sign(), x.magnitude().reciprocal());
    return std::nullopt;
}

/// The three multiplicative idempotents: 0, (+,1), (L,1).
inline HyperSet idempotents() {
    return HyperSet{Hyper::zero(), Hyper::plus(1), Hyper::lambda(1)};
}

/// Action of a rational scalar, realized as mul(embed_real(t), x):
/// t > 0 rescales, t < 0 rescales by |t| and swaps +/- while fixing L,
/// t = 0 collapses to zero.
inline Hyper scalar_mul(const Rational& t, const Hyper& x) {
    return mul(embed_real(t), x);
}

} // namespace hypernum
