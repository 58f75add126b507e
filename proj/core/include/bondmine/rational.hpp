// rational.hpp -- exact rational arithmetic for bond/confidence values.
//
// Threshold comparisons (bond >= minbond, conf >= minconf) must be decided
// exactly, so every comparison cross-multiplies instead of dividing.

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bondmine {

/// A non-negative rational num/den kept in lowest terms, den > 0.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (num < 0 || den < 0) throw std::invalid_argument("Rational: negative component");
        reduce();
    }

    void reduce() {
        if (num == 0) { den = 1; return; }
        const std::int64_t g = std::gcd(num, den);
        num /= g;
        den /= g;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a.num * b.den <= b.num * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

inline Rational rational_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rational_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Parses "3/20", "0.15" (exact decimal expansion) or "1" into a rational.
Rational parse_rational(const std::string& text);

}  // namespace bondmine
