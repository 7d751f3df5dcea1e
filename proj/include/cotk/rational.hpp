#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "cotk/errors.hpp"

namespace cotk {

/// Exact rational number over int64, always stored normalized: gcd(num, den) = 1
/// and den > 0. Intermediate products go through 128-bit integers, which is far
/// more headroom than any construction parameter here needs.
class Rational {
public:
    Rational() = default;

    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0)
            throw ParamError("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        num_ = g ? num / g : num;
        den_ = g ? den / g : den;
    }

    /// Parses "a/b" or a bare integer "a".
    static Rational parse(std::string_view text) {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return Rational(parse_int(text), 1);
        return Rational(parse_int(text.substr(0, slash)),
                        parse_int(text.substr(slash + 1)));
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    std::string str() const {
        if (den_ == 1)
            return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// floor(num/den) in exact integer arithmetic.
    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0)
            --q;
        return q;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, std::int64_t s) {
        return from128(i128(a.num_) * s, i128(a.den_));
    }
    friend Rational operator/(const Rational& a, std::int64_t s) {
        if (s == 0)
            throw ParamError("rational division by zero");
        return from128(i128(a.num_), i128(a.den_) * s);
    }

    friend bool operator==(const Rational&, const Rational&) = default;

    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return !(b < a);
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) {
        return !(a < b);
    }

private:
    using i128 = __int128;

    static Rational from128(i128 num, i128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const i128 g = gcd128(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
            throw SizeError("rational overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b) {
            const i128 t = a % b;
            a = b;
            b = t;
        }
        return a ? a : 1;
    }

    static std::int64_t parse_int(std::string_view s) {
        if (s.empty())
            throw ParamError("empty rational component");
        bool neg = false;
        std::size_t i = 0;
        if (s[0] == '-' || s[0] == '+') {
            neg = s[0] == '-';
            i = 1;
        }
        if (i == s.size())
            throw ParamError("malformed rational: '" + std::string(s) + "'");
        std::int64_t v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw ParamError("malformed rational: '" + std::string(s) + "'");
            if (v > (INT64_MAX - 9) / 10)
                throw SizeError("rational component out of range");
            v = v * 10 + (s[i] - '0');
        }
        return neg ? -v : v;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace cotk
