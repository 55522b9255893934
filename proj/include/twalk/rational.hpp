#pragma once

// Exact fractions over long long, just enough for the telescoping partial
// fraction identity. Denominators stay tiny at desk scale.

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace twalk {

struct Rational {
    long long num = 0;
    long long den = 1;  // always > 0, gcd(|num|, den) == 1

    Rational() = default;
    Rational(long long n, long long d = 1) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
    friend Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
    friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
    friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend std::ostream& operator<<(std::ostream& os, Rational r) { return os << r.num << '/' << r.den; }
};

}  // namespace twalk
