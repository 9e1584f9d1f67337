#pragma once
#include "apollo/gaussian.hpp"
#include <string>

namespace apollo {

// 2x2 matrix over Z[i] acting projectively; only unit determinants arise here
struct Mobius {
  GaussianInt a{1, 0}, b{0, 0}, c{0, 0}, d{1, 0};

  Mobius() = default;
  Mobius(GaussianInt a_, GaussianInt b_, GaussianInt c_, GaussianInt d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static Mobius identity() { return {}; }
  // generators of the gasket group and the two auxiliary symmetries
  static Mobius V(int k);
  static Mobius Jmap() { return {{0, 1}, {-1, 0}, {0, 0}, {0, -1}}; }
  static Mobius Smap() { return {{0, 0}, {0, -1}, {0, -1}, {1, 0}}; }

  GaussianInt det() const { return a * d - b * c; }
  GaussianInt trace() const { return a + d; }

  Mobius operator*(const Mobius& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mobius operator-() const { return {-a, -b, -c, -d}; }
  bool operator==(const Mobius& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }

  // adjugate; equals det * inverse, exact inverse after dividing by the unit det
  Mobius adjugate() const { return {d, -b, -c, a}; }
  Mobius inverse() const;

  Mobius pow(const Int& n) const;

  GaussianRational apply(const GaussianRational& z) const {
    if (z.is_inf()) return GaussianRational(a, c);
    return GaussianRational(a * z.num + b * z.den, c * z.num + d * z.den);
  }

  bool is_identity_projective() const;
  bool equal_projective(const Mobius& o) const;
  // scaled by the unit making the first nonzero entry have re > 0, im >= 0
  Mobius canonical_projective() const;

  std::string str() const {
    return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]";
  }
};

inline Mobius Mobius::V(int k) {
  switch (k) {
    case 1: return {{1, 0}, {1, 0}, {0, 0}, {1, 0}};
    case 2: return {{1, 0}, {0, 0}, {1, 0}, {1, 0}};
    case 3: return {{1, -1}, {1, 0}, {1, 0}, {1, 1}};
    default: throw std::invalid_argument("generator index must be 1, 2 or 3");
  }
}

inline Mobius Mobius::inverse() const {
  GaussianInt dt = det();
  if (!dt.is_unit()) throw std::invalid_argument("inverse of non-unit determinant");
  Mobius adj = adjugate();
  GaussianInt u = dt.conj();  // 1/det for units
  return {u * adj.a, u * adj.b, u * adj.c, u * adj.d};
}

inline Mobius Mobius::pow(const Int& n) const {
  if (n < 0) return inverse().pow(-n);
  Mobius r = identity(), base = *this;
  Int m = n;
  while (m > 0) {
    if ((m & 1) != 0) r = r * base;
    base = base * base;
    m >>= 1;
  }
  return r;
}

inline Mobius Mobius::canonical_projective() const {
  const GaussianInt* first = nullptr;
  for (const GaussianInt* e : {&a, &b, &c, &d})
    if (!e->is_zero()) { first = e; break; }
  if (!first) throw std::invalid_argument("zero matrix");
  GaussianInt u;
  gi_canonical_associate(*first, &u);
  return {u * a, u * b, u * c, u * d};
}

inline bool Mobius::equal_projective(const Mobius& o) const {
  return canonical_projective() == o.canonical_projective();
}

inline bool Mobius::is_identity_projective() const {
  return b.is_zero() && c.is_zero() && a == d && a.is_unit();
}

}  // namespace apollo
