#pragma once

#include "hypernum/hyperadd.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace hypernum {

/// Subset of the four sign symbols, stored as a bitmask and iterated in
/// canonical sign order.
class SignSet {
public:
    SignSet() = default;
    SignSet(std::initializer_list<Sign> signs) {
        for (Sign s : signs) insert(s);
    }

    static SignSet full() { return SignSet{Sign::Zero, Sign::Plus, Sign::Minus, Sign::Lambda}; }

    void insert(Sign s) { bits_ |= bit(s); }
    bool contains(Sign s) const { return bits_ & bit(s); }
    bool empty() const { return bits_ == 0; }

    std::size_t size() const {
        std::size_t n = 0;
        for (Sign s : kAllSigns) n += contains(s);
        return n;
    }

    bool is_subset_of(const SignSet& other) const { return (bits_ & ~other.bits_) == 0; }

    SignSet united(const SignSet& other) const {
        SignSet out;
        out.bits_ = bits_ | other.bits_;
        return out;
    }

    std::vector<Sign> to_vector() const {
        std::vector<Sign> out;
        for (Sign s : kAllSigns)
            if (contains(s)) out.push_back(s);
        return out;
    }

    friend bool operator==(const SignSet&, const SignSet&) = default;

    std::string str() const {
        std::string out = "{";
        bool first = true;
        for (Sign s : kAllSigns) {
            if (!contains(s)) continue;
            if (!first) out += ", ";
            out += sign_token(s);
            first = false;
        }
        out += "}";
        return out;
    }

private:
    static std::uint8_t bit(Sign s) { return static_cast<std::uint8_t>(1u << sign_index(s)); }
    std::uint8_t bits_ = 0;
};

/// Additive inverse at the sign level: swaps +/-, fixes 0 and L.
inline Sign sign_negate(Sign s) {
    switch (s) {
        case Sign::Plus: return Sign::Minus;
        case Sign::Minus: return Sign::Plus;
        default: return s;
    }
}

/// The set-valued sign addition on {0,+,-,L}.  Restricted to {0,+,-}
/// it is the classical sign hyperaddition; L absorbs mixed sums and
/// L + L spreads over all four signs.
inline SignSet sop(Sign s, Sign t) {
    if (s == Sign::Zero) return SignSet{t};
    if (t == Sign::Zero) return SignSet{s};
    if (s == Sign::Lambda && t == Sign::Lambda) return SignSet::full();
    if (s == Sign::Lambda || t == Sign::Lambda) return SignSet{Sign::Lambda};
    if (s == t) return SignSet{s};
    return SignSet{Sign::Zero, Sign::Plus, Sign::Minus};
}

/// Signs occurring in hyper_add(x, y).
inline SignSet sign_image(const Hyper& x, const Hyper& y) {
    SignSet out;
    for (const Hyper& z : hyper_add(x, y)) out.insert(sgn(z));
    return out;
}

/// True iff the signs of x + y all lie inside sop(sgn x, sgn y).
/// Always true; exposed as a runnable check so tests and the CLI can
/// try to falsify it.
inline bool envelope_check(const Hyper& x, const Hyper& y) {
    return sign_image(x, y).is_subset_of(sop(sgn(x), sgn(y)));
}

/// A sign realized by a concrete hyper-sum: result is a sign of some
/// element of hyper_add(x, y).
struct RealizationWitness {
    Sign result;
    Hyper x;
    Hyper y;
};

namespace detail {

/// Canonical witness pairs for a sign pair: magnitudes covering the
/// three order relations a>b, a=b, a<b (sign outcomes of hyper_add
/// depend only on the sign pair and the magnitude order relation), and
/// the single zero witness when a sign is 0.
inline std::vector<std::pair<Hyper, Hyper>> canonical_witness_pairs(Sign s, Sign t) {
    auto of = [](Sign sig, int m) {
        return sig == Sign::Zero ? Hyper::zero() : Hyper::make(sig, Rational(m));
    };
    if (s == Sign::Zero || t == Sign::Zero) return {{of(s, 1), of(t, 1)}};
    return {{of(s, 2), of(t, 1)}, {of(s, 1), of(t, 1)}, {of(s, 1), of(t, 2)}};
}

} // namespace detail

/// For each sign reachable from the pair (s, t), the first canonical
/// witness pair realizing it, ordered by canonical sign order.
inline std::vector<RealizationWitness> realization_witnesses(Sign s, Sign t) {
    std::vector<RealizationWitness> out;
    SignSet seen;
    for (const auto& [x, y] : detail::canonical_witness_pairs(s, t)) {
        for (Sign rho : sign_image(x, y).to_vector()) {
            if (seen.contains(rho)) continue;
            seen.insert(rho);
            out.push_back({rho, x, y});
        }
    }
    std::sort(out.begin(), out.end(), [](const RealizationWitness& a, const RealizationWitness& b) {
        return sign_index(a.result) < sign_index(b.result);
    });
    return out;
}

/// Signs reachable from the pair (s, t), computed by evaluating
/// hyper_add on the canonical witnesses for each magnitude order
/// relation.  Exact, not sampled; equals sop(s, t).
inline SignSet reachable(Sign s, Sign t) {
    SignSet out;
    for (const auto& [x, y] : detail::canonical_witness_pairs(s, t))
        out = out.united(sign_image(x, y));
    return out;
}

/// The sign of r + s always lies in the classical sign hyper-sum of the
/// signs of r and s.
inline bool real_sign_sum_check(const Rational& r, const Rational& s) {
    return sop(real_sign(r), real_sign(s)).contains(real_sign(r + s));
}

} // namespace hypernum
