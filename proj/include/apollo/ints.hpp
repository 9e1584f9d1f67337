#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace apollo {

using Int = boost::multiprecision::cpp_int;

inline Int iabs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int igcd(Int a, Int b) {
  a = iabs(a); b = iabs(b);
  while (b != 0) { Int t = a % b; a = b; b = t; }
  return a;
}

// floor of sqrt; requires a >= 0
inline Int isqrt(const Int& a) {
  if (a < 0) throw std::invalid_argument("isqrt of negative");
  if (a == 0) return 0;
  Int x = Int(1) << (msb(a) / 2 + 1);
  for (;;) {
    Int y = (x + a / x) / 2;
    if (y >= x) break;
    x = y;
  }
  return x;
}

inline bool is_perfect_square(const Int& a, Int* root = nullptr) {
  if (a < 0) return false;
  Int r = isqrt(a);
  if (r * r != a) return false;
  if (root) *root = r;
  return true;
}

// floor division (rounds toward -inf)
inline Int fdiv(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline std::string to_str(const Int& a) { return a.str(); }

}  // namespace apollo
