#pragma once

// Minimal exact fraction on long long (values stay tiny in this artifact).

#include <numeric>
#include <string>

#include "gln/core.hpp"

namespace gln {

struct Fraction {
    Int num = 0, den = 1;

    Fraction() = default;
    Fraction(Int n) : num(n), den(1) {}
    Fraction(Int n, Int d) : num(n), den(d) { normalize(); }

    void normalize() {
        require(den != 0, "zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        Int g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    Fraction operator*(const Fraction& o) const { return Fraction(num * o.num, den * o.den); }
    Fraction operator/(const Fraction& o) const {
        require(o.num != 0, "division by zero");
        return Fraction(num * o.den, den * o.num);
    }
    Fraction operator+(const Fraction& o) const {
        return Fraction(num * o.den + o.num * den, den * o.den);
    }
    Fraction operator-(const Fraction& o) const {
        return Fraction(num * o.den - o.num * den, den * o.den);
    }
    bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Fraction& o) const { return !(*this == o); }

    bool is_integer() const { return den == 1; }
    int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }
    Fraction abs() const { return Fraction(num < 0 ? -num : num, den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace gln
