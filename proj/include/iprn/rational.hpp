#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <string>

#include "iprn/errors.hpp"

namespace iprn {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

}  // namespace detail

// Exact rational, always stored normalized: den > 0, gcd(|num|, den) = 1.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_positive() const { return num_ > 0; }
    bool is_negative() const { return num_ < 0; }

    Rational operator+(const Rational& o) const {
        std::int64_t g = std::gcd(den_, o.den_);
        std::int64_t lhs = detail::checked_mul(num_, o.den_ / g);
        std::int64_t rhs = detail::checked_mul(o.num_, den_ / g);
        return Rational(detail::checked_add(lhs, rhs), detail::checked_mul(den_, o.den_ / g));
    }
    Rational operator-() const { return Rational(-num_, den_, raw_tag{}); }
    Rational operator-(const Rational& o) const { return *this + (-o); }
    Rational operator*(const Rational& o) const {
        std::int64_t g1 = std::gcd(num_ < 0 ? -num_ : num_, o.den_);
        std::int64_t g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
        return Rational(detail::checked_mul(num_ / g1, o.num_ / g2),
                        detail::checked_mul(den_ / g2, o.den_ / g1), raw_tag{});
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw Error("division by zero");
        return *this * Rational(o.den_, o.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        // cross-multiplication in 128-bit avoids overflow traps on compares
        __int128 lhs = static_cast<__int128>(num_) * o.den_;
        __int128 rhs = static_cast<__int128>(o.num_) * den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // floor(p/q) as an integer
    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    // 2^-m, the neighborhood radii used throughout near_idempotent
    static Rational pow2_neg(int m) {
        if (m < 0 || m > 62) throw Error("2^-m out of range, m = " + std::to_string(m));
        return Rational(1, std::int64_t{1} << m, raw_tag{});
    }

    // "p" or "p/q"; whitespace is not accepted
    static Rational parse(const std::string& s);
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    struct raw_tag {};
    Rational(std::int64_t n, std::int64_t d, raw_tag) : num_(n), den_(d) {}

    void normalize() {
        if (den_ == 0) throw Error("zero denominator");
        if (den_ < 0) {
            if (num_ == INT64_MIN || den_ == INT64_MIN) throw OverflowError("overflow normalizing sign");
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    auto slash = s.find('/');
    auto parse_int = [&](const std::string& part) -> std::int64_t {
        std::size_t pos = 0;
        std::int64_t v;
        try {
            v = std::stoll(part, &pos);
        } catch (const std::exception&) {
            throw Error("bad rational literal: '" + s + "'");
        }
        if (pos != part.size()) throw Error("bad rational literal: '" + s + "'");
        return v;
    };
    if (slash == std::string::npos) return Rational(parse_int(s));
    std::int64_t n = parse_int(s.substr(0, slash));
    std::int64_t d = parse_int(s.substr(slash + 1));
    if (d <= 0) throw Error("denominator must be positive in '" + s + "'");
    return Rational(n, d);
}

}  // namespace iprn
