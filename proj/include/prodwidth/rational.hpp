#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <string>

namespace prodwidth {

/// Exact rational on int64, normalised with positive denominator.
/// Bound formulas stay tiny, so no overflow guarding beyond asserts.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rat(long long n, long long d) : num(n), den(d) {
    assert(d != 0);
    normalize();
  }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_integer() const { return den == 1; }

  long long floor() const {
    if (num >= 0) return num / den;
    return -(((-num) + den - 1) / den);
  }
  long long ceil() const { return -Rat(-num, den).floor(); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    assert(b.num != 0);
    return Rat(a.num * b.den, a.den * b.num);
  }

  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.num * b.den <= b.num * a.den; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace prodwidth
