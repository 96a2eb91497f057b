#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace hypernum {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number with arbitrary-precision integer parts.
///
/// Values are always stored in canonical form: the denominator is
/// strictly positive and gcd(|numerator|, denominator) = 1, so equality
/// is plain structural equality.  Comparisons cross-multiply the
/// integer parts rather than dividing, which keeps ordered-container
/// operations cheap.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}       // NOLINT: implicit by design
    Rational(Integer n) : num_(std::move(n)), den_(1) {} // NOLINT

    Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        normalize();
    }
    Rational(long long num, long long den) : Rational(Integer(num), Integer(den)) {}

    const Integer& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_positive() const { return num_ > 0; }
    bool is_negative() const { return num_ < 0; }

    /// -1, 0, or +1.
    int signum() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    Rational abs() const { return is_negative() ? -*this : *this; }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
        return Rational(den_, num_);
    }

    friend Rational operator-(const Rational& x) { return Rational(-x.num_, x.den_, canonical{}); }
    friend Rational operator+(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(x.num_ * y.den_, x.den_ * y.num_);
    }

    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        int sx = x.signum(), sy = y.signum();
        if (sx != sy) return sx <=> sy;
        Integer lhs = x.num_ * y.den_;
        Integer rhs = y.num_ * x.den_;
        return lhs.compare(rhs) <=> 0;
    }

    /// Renders "p" for integers and "p/q" otherwise.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    /// Strict parser for "p", "-p", or "p/q" (q > 0, no decimals, no
    /// whitespace).  Returns nullopt on any deviation.
    static std::optional<Rational> try_parse(std::string_view text) {
        std::size_t i = 0;
        const std::size_t n = text.size();
        bool negative = false;
        if (i < n && text[i] == '-') {
            negative = true;
            ++i;
        }
        std::size_t num_begin = i;
        while (i < n && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == num_begin) return std::nullopt;
        Integer num(std::string(text.substr(num_begin, i - num_begin)));
        Integer den = 1;
        if (i < n && text[i] == '/') {
            ++i;
            std::size_t den_begin = i;
            while (i < n && text[i] >= '0' && text[i] <= '9') ++i;
            if (i == den_begin) return std::nullopt;
            den = Integer(std::string(text.substr(den_begin, i - den_begin)));
            if (den == 0) return std::nullopt;
        }
        if (i != n) return std::nullopt;
        if (negative) num = -num;
        return Rational(std::move(num), std::move(den));
    }

    static Rational parse(std::string_view text) {
        auto r = try_parse(text);
        if (!r) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
        return *r;
    }

private:
    struct canonical {};
    Rational(Integer num, Integer den, canonical)
        : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Integer g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Integer num_;
    Integer den_;
};

inline Rational abs(const Rational& x) { return x.abs(); }
inline const Rational& min(const Rational& x, const Rational& y) { return y < x ? y : x; }
inline const Rational& max(const Rational& x, const Rational& y) { return x < y ? y : x; }

} // namespace hypernum
