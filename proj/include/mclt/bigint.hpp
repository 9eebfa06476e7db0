#pragma once

#include <cctype>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mclt/errors.hpp"

namespace mclt {

// Arbitrary-precision signed integer, sign-magnitude over base-2^32 limbs.
// Counts in this library stay well below a few hundred bits, so the simple
// schoolbook algorithms are plenty.
class BigInt {
 public:
  BigInt() = default;

  BigInt(std::int64_t v) {  // NOLINT: implicit by design
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    auto mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1u
                     : static_cast<std::uint64_t>(v);
    limbs_.push_back(static_cast<std::uint32_t>(mag));
    if (mag >> 32) limbs_.push_back(static_cast<std::uint32_t>(mag >> 32));
  }

  static BigInt from_string(std::string_view s) {
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      negative = s[i] == '-';
      ++i;
    }
    if (i == s.size())
      throw InvalidInputError("integer literal has no digits: '" +
                              std::string(s) + "'");
    BigInt r;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw InvalidInputError("invalid digit in integer literal: '" +
                                std::string(s) + "'");
      r.mul_small(10);
      r.add_small(static_cast<std::uint32_t>(s[i] - '0'));
    }
    if (negative && !r.is_zero()) r.sign_ = -1;
    return r;
  }

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  int signum() const { return sign_; }

  BigInt abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
  }

  BigInt operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.limbs_ = add_mag(a.limbs_, b.limbs_);
      r.sign_ = a.sign_;
      return r;
    }
    int c = cmp_mag(a.limbs_, b.limbs_);
    if (c == 0) return r;
    if (c > 0) {
      r.limbs_ = sub_mag(a.limbs_, b.limbs_);
      r.sign_ = a.sign_;
    } else {
      r.limbs_ = sub_mag(b.limbs_, a.limbs_);
      r.sign_ = b.sign_;
    }
    return r;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt{};
    BigInt r;
    r.limbs_ = mul_mag(a.limbs_, b.limbs_);
    r.sign_ = a.sign_ * b.sign_;
    return r;
  }

  // Truncated division (C++ semantics): sign(r) == sign(a), |r| < |b|.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw InvalidInputError("division by zero");
    std::vector<std::uint32_t> qmag, rmag;
    divmod_mag(a.limbs_, b.limbs_, qmag, rmag);
    q = BigInt{};
    r = BigInt{};
    q.limbs_ = std::move(qmag);
    r.limbs_ = std::move(rmag);
    if (!q.limbs_.empty()) q.sign_ = a.sign_ * b.sign_;
    if (!r.limbs_.empty()) r.sign_ = a.sign_;
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return q;
  }

  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return r;
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
  BigInt& operator/=(const BigInt& o) { return *this = *this / o; }
  BigInt& operator%=(const BigInt& o) { return *this = *this % o; }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
  }

  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int c = cmp_mag(a.limbs_, b.limbs_) * a.sign_;
    return c <=> 0;
  }

  static BigInt pow(const BigInt& base, unsigned exp) {
    BigInt result(1), b = base;
    while (exp != 0) {
      if (exp & 1u) result *= b;
      exp >>= 1;
      if (exp != 0) b *= b;
    }
    return result;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> chunks;  // base 10^9, little-endian
    std::vector<std::uint32_t> mag = limbs_;
    while (!mag.empty()) chunks.push_back(divmod_small(mag, 1000000000u));
    std::string out;
    if (sign_ < 0) out.push_back('-');
    out += std::to_string(chunks.back());
    for (auto it = chunks.rbegin() + 1; it != chunks.rend(); ++it) {
      std::string part = std::to_string(*it);
      out.append(9 - part.size(), '0');
      out += part;
    }
    return out;
  }

  double to_double() const {
    double v = 0.0;
    for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it)
      v = v * 4294967296.0 + static_cast<double>(*it);
    return sign_ < 0 ? -v : v;
  }

  std::int64_t to_int64() const {
    if (limbs_.size() > 2)
      throw InvalidInputError("value does not fit in 64 bits: " + to_string());
    std::uint64_t mag = 0;
    if (!limbs_.empty()) mag = limbs_[0];
    if (limbs_.size() == 2) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (sign_ < 0) {
      if (mag > static_cast<std::uint64_t>(INT64_MAX) + 1u)
        throw InvalidInputError("value does not fit in 64 bits: " +
                                to_string());
      return static_cast<std::int64_t>(~mag + 1u);
    }
    if (mag > static_cast<std::uint64_t>(INT64_MAX))
      throw InvalidInputError("value does not fit in 64 bits: " + to_string());
    return static_cast<std::int64_t>(mag);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v) {
    return os << v.to_string();
  }

 private:
  int sign_ = 0;                       // -1, 0, +1; 0 iff limbs_ empty
  std::vector<std::uint32_t> limbs_;   // little-endian, no leading zero limb

  static void trim(std::vector<std::uint32_t>& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
  }

  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<std::uint32_t> add_mag(
      const std::vector<std::uint32_t>& a,
      const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r(big.size());
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
      std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
      r[i] = static_cast<std::uint32_t>(s);
      carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
  }

  // Requires |a| >= |b|.
  static std::vector<std::uint32_t> sub_mag(
      const std::vector<std::uint32_t>& a,
      const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                       (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
      borrow = d < 0 ? 1 : 0;
      if (d < 0) d += (1LL << 32);
      r[i] = static_cast<std::uint32_t>(d);
    }
    trim(r);
    return r;
  }

  static std::vector<std::uint32_t> mul_mag(
      const std::vector<std::uint32_t>& a,
      const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::uint64_t s = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] +
                          carry;
        r[i + j] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
      }
      r[i + b.size()] += static_cast<std::uint32_t>(carry);
    }
    trim(r);
    return r;
  }

  // In-place divide magnitude by a small divisor, returning the remainder.
  static std::uint32_t divmod_small(std::vector<std::uint32_t>& m,
                                    std::uint32_t d) {
    std::uint64_t rem = 0;
    for (std::size_t i = m.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | m[i];
      m[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    trim(m);
    return static_cast<std::uint32_t>(rem);
  }

  // Binary long division of magnitudes; operands here are small enough that
  // the O(bits * limbs) cost is irrelevant.
  static void divmod_mag(const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b,
                         std::vector<std::uint32_t>& q,
                         std::vector<std::uint32_t>& r) {
    if (b.size() == 1) {
      q = a;
      std::uint32_t rem = divmod_small(q, b[0]);
      r.clear();
      if (rem) r.push_back(rem);
      return;
    }
    q.assign(a.size(), 0);
    r.clear();
    for (std::size_t bit = a.size() * 32; bit-- > 0;) {
      // r = 2r + bit(a, bit)
      std::uint32_t carry = (a[bit / 32] >> (bit % 32)) & 1u;
      for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint32_t next = r[i] >> 31;
        r[i] = (r[i] << 1) | carry;
        carry = next;
      }
      if (carry) r.push_back(carry);
      if (cmp_mag(r, b) >= 0) {
        r = sub_mag(r, b);
        q[bit / 32] |= 1u << (bit % 32);
      }
    }
    trim(q);
    trim(r);
  }

  void mul_small(std::uint32_t f) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
      std::uint64_t s = static_cast<std::uint64_t>(limb) * f + carry;
      limb = static_cast<std::uint32_t>(s);
      carry = s >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    trim(limbs_);
    if (limbs_.empty()) sign_ = 0;
  }

  void add_small(std::uint32_t v) {
    if (v == 0) return;
    if (sign_ == 0) {
      sign_ = 1;
      limbs_.push_back(v);
      return;
    }
    std::uint64_t carry = v;
    for (auto& limb : limbs_) {
      std::uint64_t s = static_cast<std::uint64_t>(limb) + carry;
      limb = static_cast<std::uint32_t>(s);
      carry = s >> 32;
      if (!carry) break;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  }
};

inline BigInt gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace mclt
