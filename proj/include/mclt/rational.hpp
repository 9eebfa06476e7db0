#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "mclt/bigint.hpp"
#include "mclt/errors.hpp"

namespace mclt {

// Exact rational, always reduced, denominator > 0.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt v) : num_(std::move(v)), den_(1) {}  // NOLINT

  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InvalidInputError("rational with zero denominator");
    normalize();
  }

  // Accepts "p" or "p/q" with optional sign on p.
  static Rational from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::from_string(s));
    BigInt num = BigInt::from_string(s.substr(0, slash));
    BigInt den = BigInt::from_string(s.substr(slash + 1));
    return Rational(std::move(num), std::move(den));
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_negative() const { return num_.is_negative(); }
  bool is_integer() const { return den_ == BigInt(1); }

  Rational abs() const {
    Rational r = *this;
    r.num_ = r.num_.abs();
    return r;
  }

  friend Rational operator-(const Rational& a) {
    Rational r = a;
    r.num_ = -r.num_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw InvalidInputError("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  static Rational pow(const Rational& base, unsigned exp) {
    Rational result(1), b = base;
    while (exp != 0) {
      if (exp & 1u) result *= b;
      exp >>= 1;
      if (exp != 0) b *= b;
    }
    return result;
  }

  // "p" when integral, otherwise "p/q".
  std::string to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
  }

  // Finite decimal expansion, available exactly when den == 2^a * 5^b.
  // Trailing zeros are trimmed: 29/20 -> "1.45", 3/2 -> "1.5".
  std::optional<std::string> to_decimal_string() const {
    if (is_integer()) return num_.to_string();
    BigInt rest = den_;
    int twos = 0, fives = 0;
    const BigInt two(2), five(5), one(1);
    while ((rest % two).is_zero()) {
      rest /= two;
      ++twos;
    }
    while ((rest % five).is_zero()) {
      rest /= five;
      ++fives;
    }
    if (rest != one) return std::nullopt;
    int digits = twos > fives ? twos : fives;
    BigInt scaled = num_.abs() * BigInt::pow(two, digits - twos) *
                    BigInt::pow(five, digits - fives);
    std::string s = scaled.to_string();
    if (static_cast<int>(s.size()) <= digits)
      s.insert(0, digits + 1 - s.size(), '0');
    std::string frac = s.substr(s.size() - digits);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    std::string out = s.substr(0, s.size() - digits);
    if (!frac.empty()) out += "." + frac;
    if (is_negative()) out.insert(0, 1, '-');
    return out;
  }

  double to_double() const { return num_.to_double() / den_.to_double(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& v) {
    return os << v.to_string();
  }

 private:
  BigInt num_;
  BigInt den_;

  void normalize() {
    if (den_.is_negative()) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = BigInt(1);
      return;
    }
    BigInt g = gcd(num_, den_);
    if (g != BigInt(1)) {
      num_ /= g;
      den_ /= g;
    }
  }
};

}  // namespace mclt
