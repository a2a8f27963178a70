#ifndef STARLAB_RATIONAL_HPP
#define STARLAB_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "starlab/errors.hpp"

namespace starlab {

// Exact rational over int64 numerator/denominator, always normalized
// (gcd 1, positive denominator). Intermediates run in 128 bits; a result
// that does not reduce back into 64 bits raises OverflowError rather than
// silently wrapping. No floating point anywhere.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n) {} // NOLINT: implicit by design
    Rational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return reduce(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return reduce(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return reduce(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DomainError("Rational: division by zero");
        return reduce(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // "p" when integral, else "p/q".
    std::string to_string() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    // Always-explicit "p/q" form used by the weight file format.
    std::string to_fraction_string() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    static Rational parse(std::string_view s);

private:
    using i128 = __int128;

    static Rational make(std::int64_t n, std::int64_t d) {
        if (d == 0) throw DomainError("Rational: zero denominator");
        return reduce(i128(n), i128(d));
    }

    static Rational reduce(i128 n, i128 d) {
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr i128 lo = -i128(std::uint64_t{1} << 63);
        constexpr i128 hi = i128((std::uint64_t{1} << 63) - 1);
        if (n < lo || n > hi || d > hi)
            throw OverflowError("Rational: value exceeds 64-bit exact range");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational Rational::parse(std::string_view s) {
    auto parse_int = [](std::string_view v) -> std::int64_t {
        if (v.empty()) throw ParseError("rational: empty integer");
        bool neg = v.front() == '-';
        if (neg) v.remove_prefix(1);
        if (v.empty()) throw ParseError("rational: bare sign");
        std::int64_t out = 0;
        for (char c : v) {
            if (c < '0' || c > '9') throw ParseError("rational: bad digit");
            if (out > (INT64_MAX - (c - '0')) / 10) throw OverflowError("rational: literal too large");
            out = out * 10 + (c - '0');
        }
        return neg ? -out : out;
    };
    std::size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

} // namespace starlab

#endif
