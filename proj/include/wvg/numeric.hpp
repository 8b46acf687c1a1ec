#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

namespace wvg {

using big_int = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline big_int numerator(const rational& r) { return boost::multiprecision::numerator(r); }
inline big_int denominator(const rational& r) { return boost::multiprecision::denominator(r); }

inline double to_double(const rational& r) { return r.convert_to<double>(); }

// 15 significant digits, display only.
inline std::string to_decimal(const rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", to_double(r));
  return buf;
}

inline std::string to_fraction(const rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

// "p/q (≈ d.ddd)"
inline std::string to_display(const rational& r) {
  return to_fraction(r) + " (\xE2\x89\x88 " + to_decimal(r) + ")";
}

// Table of 0!, 1!, ..., n!.
inline std::vector<big_int> factorials(std::size_t n) {
  std::vector<big_int> f(n + 1);
  f[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) f[i] = f[i - 1] * i;
  return f;
}

inline big_int binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  big_int r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace wvg
