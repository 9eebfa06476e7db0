#pragma once

#include <cstdio>
#include <string>

#include "mclt/rational.hpp"

namespace mclt {

// Exact rendering for tables: a finite decimal when the denominator is
// 2^a * 5^b (integers stay plain), otherwise "p/q". force_fraction keeps
// non-integers in p/q form.
inline std::string render_rational(const Rational& r,
                                   bool force_fraction = false) {
  if (r.is_integer()) return r.to_string();
  if (!force_fraction) {
    if (auto decimal = r.to_decimal_string()) return *decimal;
  }
  return r.to_string();
}

inline std::string render_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::string(buf);
}

}  // namespace mclt
