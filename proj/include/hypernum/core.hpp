#pragma once

#include "hypernum/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hypernum {

/// The four sign symbols.  The declaration order fixes an artifact-wide
/// total order (Zero < Plus < Minus < Lambda) used only for canonical
/// storage and printing; it carries no algebraic meaning.
enum class Sign : unsigned char { Zero = 0, Plus = 1, Minus = 2, Lambda = 3 };

inline constexpr std::size_t sign_index(Sign s) { return static_cast<std::size_t>(s); }

inline constexpr Sign kAllSigns[4] = {Sign::Zero, Sign::Plus, Sign::Minus, Sign::Lambda};
inline constexpr Sign kNonzeroSigns[3] = {Sign::Plus, Sign::Minus, Sign::Lambda};

/// ASCII spelling used in all I/O: "0", "+", "-", "L".
inline std::string_view sign_token(Sign s) {
    switch (s) {
        case Sign::Zero: return "0";
        case Sign::Plus: return "+";
        case Sign::Minus: return "-";
        case Sign::Lambda: return "L";
    }
    throw std::logic_error("sign_token: bad Sign value");
}

inline std::optional<Sign> try_parse_sign_token(std::string_view tok) {
    if (tok == "0") return Sign::Zero;
    if (tok == "+") return Sign::Plus;
    if (tok == "-") return Sign::Minus;
    if (tok == "L") return Sign::Lambda;
    return std::nullopt;
}

inline Sign parse_sign_token(std::string_view tok) {
    auto s = try_parse_sign_token(tok);
    if (!s) throw std::invalid_argument("not a sign token: '" + std::string(tok) + "'");
    return *s;
}

/// Sign of a rational as a sign symbol (never Lambda).
inline Sign real_sign(const Rational& r) {
    if (r.is_positive()) return Sign::Plus;
    if (r.is_negative()) return Sign::Minus;
    return Sign::Zero;
}

/// A hypernumber: either zero, or a nonzero sign paired with a strictly
/// positive magnitude.
class Hyper {
public:
    Hyper() = default; // zero

    static Hyper zero() { return Hyper(); }

    static Hyper make(Sign s, Rational magnitude) {
        if (s == Sign::Zero)
            throw std::invalid_argument("Hyper::make: nonzero element cannot carry the zero sign");
        if (!magnitude.is_positive())
            throw std::invalid_argument("Hyper::make: magnitude must be positive");
        return Hyper(s, std::move(magnitude));
    }

    static Hyper plus(Rational a) { return make(Sign::Plus, std::move(a)); }
    static Hyper minus(Rational a) { return make(Sign::Minus, std::move(a)); }
    static Hyper lambda(Rational a) { return make(Sign::Lambda, std::move(a)); }

    bool is_zero() const { return sign_ == Sign::Zero; }
    Sign sign() const { return sign_; }

    /// Magnitude; zero for the zero element.
    const Rational& magnitude() const { return mag_; }

    friend bool operator==(const Hyper& x, const Hyper& y) {
        return x.sign_ == y.sign_ && x.mag_ == y.mag_;
    }
    /// Canonical order: by sign index, then magnitude.
    friend std::strong_ordering operator<=>(const Hyper& x, const Hyper& y) {
        if (auto c = sign_index(x.sign_) <=> sign_index(y.sign_); c != 0) return c;
        return x.mag_ <=> y.mag_;
    }

    /// Text form matching the expression grammar: "0" or "(s m)".
    std::string str() const {
        if (is_zero()) return "0";
        return "(" + std::string(sign_token(sign_)) + " " + mag_.str() + ")";
    }

private:
    Hyper(Sign s, Rational m) : sign_(s), mag_(std::move(m)) {}
    Sign sign_ = Sign::Zero;
    Rational mag_ = Rational(0);
};

inline Sign sgn(const Hyper& h) { return h.sign(); }
inline const Rational& mag(const Hyper& h) { return h.magnitude(); }

/// Embeds a rational onto the classical line: 0 -> zero, r>0 -> (+,r),
/// r<0 -> (-,-r).
inline Hyper embed_real(const Rational& r) {
    if (r.is_zero()) return Hyper::zero();
    if (r.is_positive()) return Hyper::plus(r);
    return Hyper::minus(-r);
}

/// True iff h is zero or lies in the +/- sectors.
inline bool is_classical(const Hyper& h) {
    return h.sign() != Sign::Lambda;
}

/// Inverse of embed_real on the classical line; nullopt on the Lambda
/// sector.
inline std::optional<Rational> classical_value(const Hyper& h) {
    switch (h.sign()) {
        case Sign::Zero: return Rational(0);
        case Sign::Plus: return h.magnitude();
        case Sign::Minus: return -h.magnitude();
        case Sign::Lambda: return std::nullopt;
    }
    return std::nullopt;
}

/// Canonical finite set of hypernumbers: sorted by (sign, magnitude),
/// duplicates removed, deterministic iteration order.
class HyperSet {
public:
    HyperSet() = default;
    HyperSet(std::initializer_list<Hyper> elems) {
        for (const auto& e : elems) insert(e);
    }
    /// Canonicalizes an arbitrary element list (sorts, removes
    /// duplicates).
    explicit HyperSet(std::vector<Hyper> elems) : elems_(std::move(elems)) {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    }

    static HyperSet singleton(const Hyper& h) { return HyperSet{h}; }

    void insert(const Hyper& h) {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), h);
        if (it == elems_.end() || !(*it == h)) elems_.insert(it, h);
    }

    void insert_all(const HyperSet& other) {
        for (const Hyper& e : other.elems_) insert(e);
    }

    bool contains(const Hyper& h) const {
        return std::binary_search(elems_.begin(), elems_.end(), h);
    }

    bool empty() const { return elems_.empty(); }
    std::size_t size() const { return elems_.size(); }

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    bool is_subset_of(const HyperSet& other) const {
        return std::all_of(begin(), end(), [&](const Hyper& h) { return other.contains(h); });
    }

    bool intersects(const HyperSet& other) const {
        return std::any_of(begin(), end(), [&](const Hyper& h) { return other.contains(h); });
    }

    friend bool operator==(const HyperSet& a, const HyperSet& b) { return a.elems_ == b.elems_; }
    /// Lexicographic on the canonical element order; used for keying
    /// sets in ordered containers.
    friend std::strong_ordering operator<=>(const HyperSet& a, const HyperSet& b) {
        return std::lexicographical_compare_three_way(a.elems_.begin(), a.elems_.end(),
                                                      b.elems_.begin(), b.elems_.end());
    }

    std::string str() const {
        std::string out = "{";
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (i) out += ", ";
            out += elems_[i].str();
        }
        out += "}";
        return out;
    }

private:
    std::vector<Hyper> elems_;
};

inline HyperSet set_union(const HyperSet& a, const HyperSet& b) {
    HyperSet out = a;
    out.insert_all(b);
    return out;
}

} // namespace hypernum
