#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace gog {

// Exact rational with gcd normalization; denominator always positive.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(Rational a, Rational b) {
        // cross-reduce before multiplying to keep magnitudes small
        long long g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
        long long g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
        return Rational((a.num / g1) * (b.num / g2), (a.den / g2) * (b.den / g1));
    }
    friend Rational operator/(Rational a, Rational b) {
        if (b.num == 0) throw std::domain_error("rational division by zero");
        return a * Rational(b.den, b.num);
    }
    Rational operator-() const { return Rational(-num, den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }
};

}  // namespace gog
