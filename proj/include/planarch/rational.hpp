#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace planarch {

// Exact rational arithmetic over int64, just enough for density formulas.
// Always normalized: den > 0, gcd(|num|, den) == 1. Magnitudes stay tiny
// here (linear functions of n), so overflow checking is not warranted.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t whole) : num(whole), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw Unsupported("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rational operator+(Rational a, Rational b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(Rational a, Rational b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(Rational a, Rational b) {
    return Rational(a.num * b.num, a.den * b.den);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.num * b.den <= b.num * a.den;
  }

  bool is_integer() const { return den == 1; }

  // Largest integer <= this value (floor division, exact).
  std::int64_t floor() const {
    std::int64_t q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace planarch
