#pragma once

#include "hypernum/core.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypernum {

/// Set-valued addition on hypernumbers.
///
/// Clauses, in dispatch order:
///   (1) zero is neutral;
///   (2) equal classical signs add magnitudes;
///   (3) opposite classical signs cancel, leaving the sign of the larger
///       magnitude (or zero on a tie);
///   (4) a classical element absorbed into the Lambda sector adds its
///       magnitude there;
///   (5) Lambda-Lambda is genuinely multivalued: {(L,2a), 0} on equal
///       magnitudes, {(L,a+b), (+,|a-b|), (-,|a-b|)} otherwise.
///
/// Total, commutative, and always returns 1-3 elements.
inline HyperSet hyper_add(const Hyper& x, const Hyper& y) {
    if (x.is_zero()) return HyperSet::singleton(y);
    if (y.is_zero()) return HyperSet::singleton(x);

    const Sign sx = x.sign();
    const Sign sy = y.sign();
    const Rational& a = x.magnitude();
    const Rational& b = y.magnitude();

    if (sx != Sign::Lambda && sy != Sign::Lambda) {
        if (sx == sy) return HyperSet::singleton(Hyper::make(sx, a + b));
        // opposite classical signs
        if (a == b) return HyperSet::singleton(Hyper::zero());
        if (a > b) return HyperSet::singleton(Hyper::make(sx, a - b));
        return HyperSet::singleton(Hyper::make(sy, b - a));
    }

    if (sx == Sign::Lambda && sy == Sign::Lambda) {
        if (a == b) return HyperSet{Hyper::lambda(a + b), Hyper::zero()};
        Rational gap = abs(a - b);
        return HyperSet{Hyper::lambda(a + b), Hyper::plus(gap), Hyper::minus(gap)};
    }

    // exactly one Lambda operand
    return HyperSet::singleton(Hyper::lambda(a + b));
}

/// Additive inverse: the unique y with zero in hyper_add(x, y).
/// Lambda elements are their own inverses.
inline Hyper neg(const Hyper& x) {
    switch (x.sign()) {
        case Sign::Zero: return x;
        case Sign::Plus: return Hyper::minus(x.magnitude());
        case Sign::Minus: return Hyper::plus(x.magnitude());
        case Sign::Lambda: return x;
    }
    throw std::logic_error("neg: bad Sign value");
}

/// Union-lift of hyper_add to sets.  Both operands must be nonempty.
inline HyperSet hyper_add_sets(const HyperSet& lhs, const HyperSet& rhs) {
    if (lhs.empty() || rhs.empty())
        throw std::invalid_argument("hyper_add_sets: operands must be nonempty");
    std::vector<Hyper> collected;
    collected.reserve(lhs.size() * rhs.size());
    for (const Hyper& a : lhs)
        for (const Hyper& b : rhs)
            for (const Hyper& sum : hyper_add(a, b)) collected.push_back(sum);
    return HyperSet(std::move(collected));
}

namespace detail {

// Per-interval results with interned value sets: shapes over the same
// interval frequently share a value set, so each (left set, right set)
// pair is combined once per split instead of once per shape pair.
struct IntervalBracketings {
    std::vector<HyperSet> distinct;                      // interned value sets
    std::map<HyperSet, std::size_t> index;               // set -> index into distinct
    std::vector<std::pair<std::string, std::size_t>> shapes; // shape -> index into distinct
};

inline const IntervalBracketings&
bracketings_of_range(std::span<const Hyper> xs, std::size_t lo, std::size_t hi,
                     std::map<std::pair<std::size_t, std::size_t>, IntervalBracketings>& memo) {
    auto key = std::make_pair(lo, hi);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    IntervalBracketings results;
    auto intern = [&results](HyperSet set) {
        auto [it, fresh] = results.index.try_emplace(std::move(set), results.distinct.size());
        if (fresh) results.distinct.push_back(it->first);
        return it->second;
    };

    if (hi - lo == 1) {
        results.shapes.emplace_back(std::to_string(lo),
                                    intern(HyperSet::singleton(xs[lo])));
    } else {
        for (std::size_t mid = lo + 1; mid < hi; ++mid) {
            const auto& lefts = bracketings_of_range(xs, lo, mid, memo);
            const auto& rights = bracketings_of_range(xs, mid, hi, memo);
            std::map<std::pair<std::size_t, std::size_t>, std::size_t> combined;
            for (const auto& [lshape, lidx] : lefts.shapes)
                for (const auto& [rshape, ridx] : rights.shapes) {
                    auto [it, fresh] = combined.try_emplace({lidx, ridx}, 0);
                    if (fresh)
                        it->second = intern(
                            hyper_add_sets(lefts.distinct[lidx], rights.distinct[ridx]));
                    results.shapes.emplace_back("(" + lshape + " " + rshape + ")", it->second);
                }
        }
    }
    return memo.emplace(key, std::move(results)).first->second;
}

} // namespace detail

/// Evaluates every full binary bracketing of the given operand list and
/// returns each shape (a fully parenthesized index tree, e.g.
/// "((0 1) 2)") with its hyper-sum.  The shape count is the Catalan
/// number C(n-1); lists longer than 12 are refused.
inline std::map<std::string, HyperSet> fold_bracketings(const std::vector<Hyper>& xs) {
    if (xs.empty()) throw std::invalid_argument("fold_bracketings: empty operand list");
    if (xs.size() > 12) throw std::invalid_argument("fold_bracketings: more than 12 operands");
    std::map<std::pair<std::size_t, std::size_t>, detail::IntervalBracketings> memo;
    const auto& all = detail::bracketings_of_range(std::span(xs), 0, xs.size(), memo);
    std::map<std::string, HyperSet> out;
    for (const auto& [shape, idx] : all.shapes) out.emplace(shape, all.distinct[idx]);
    return out;
}

} // namespace hypernum
