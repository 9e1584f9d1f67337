#pragma once
#include "apollo/mobius.hpp"
#include "apollo/quadext.hpp"
#include <tuple>

namespace apollo {

// hermitian form A*z*conj(z) + conj(B)*z + B*conj(z) + C with A, C integers, B in Z[i].
// the negative side {H < 0} is the distinguished complementary component (the hole).
struct Circle {
  Int a{0};
  GaussianInt b{0, 0};
  Int c{0};

  Circle() = default;
  Circle(Int a_, GaussianInt b_, Int c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}

  Int disc() const { return b.norm() - a * c; }
  bool is_line() const { return a == 0; }

  // scale to a primitive integer form, preserving the sign (hole orientation)
  void make_primitive() {
    Int g = igcd(igcd(a, c), igcd(b.re, b.im));
    if (g > 1) { a /= g; b.re /= g; b.im /= g; c /= g; }
  }
  // primitive and first nonzero of (a, b.re, b.im, c) positive; forgets orientation
  Circle canonical_unoriented() const {
    Circle r = *this;
    r.make_primitive();
    for (Int* v : {&r.a, &r.b.re, &r.b.im, &r.c}) {
      if (*v != 0) {
        if (*v < 0) { r.a = -r.a; r.b = -r.b; r.c = -r.c; }
        break;
      }
    }
    return r;
  }
  std::tuple<Int, Int, Int, Int> key() const { return {a, b.re, b.im, c}; }
  bool operator==(const Circle& o) const { return a == o.a && b == o.b && c == o.c; }

  // sign of H at a point of the extended plane; infinity reads the leading coefficient
  int sign_at(const GaussianRational& z) const {
    if (z.is_inf()) {
      if (a != 0) return a > 0 ? 1 : -1;
      return 0;  // every line passes through infinity
    }
    const GaussianInt& p = z.num;
    const GaussianInt& q = z.den;
    GaussianInt t = b.conj() * p * q.conj();
    Int v = a * p.norm() + 2 * t.re + c * q.norm();
    return v > 0 ? 1 : v < 0 ? -1 : 0;
  }

  // exact value at x + i*y with quadratic-field coordinates
  QuadExt eval(const QuadPoint& z) const {
    QuadExt v = QuadExt(Rational(a)) * (z.x * z.x + z.y * z.y);
    v = v + QuadExt(Rational(2 * b.re)) * z.x + QuadExt(Rational(2 * b.im)) * z.y;
    return v + QuadExt(Rational(c));
  }

  // H'(z) = H(g^{-1} z) up to a positive factor; preserves disc and hole side
  Circle transport(const Mobius& g) const {
    Mobius h = g.adjugate();  // det * g^{-1}; the unit det scales H by |det|^2 = 1
    GaussianInt na = GaussianInt(a) * h.a.norm() + b.conj() * h.a * h.c.conj() +
                     b * h.a.conj() * h.c + GaussianInt(c) * h.c.norm();
    GaussianInt nc = GaussianInt(a) * h.b.norm() + b.conj() * h.b * h.d.conj() +
                     b * h.b.conj() * h.d + GaussianInt(c) * h.d.norm();
    GaussianInt nb = GaussianInt(a) * h.b * h.a.conj() + b.conj() * h.b * h.c.conj() +
                     b * h.a.conj() * h.d + GaussianInt(c) * h.d * h.c.conj();
    if (na.im != 0 || nc.im != 0) throw std::logic_error("transport lost hermitian symmetry");
    return Circle(na.re, nb, nc.re);
  }

  // center and radius for drawing; requires a != 0
  void center_radius(double& cx, double& cy, double& r) const;

  // inner product of two disc-1 forms; tangency gives +-2
  static Int inner(const Circle& f, const Circle& g) {
    GaussianInt t = f.b.conj() * g.b;
    return 2 * t.re - f.a * g.c - g.a * f.c;
  }

  std::string str() const { return "(" + a.str() + "," + b.str() + "," + c.str() + ")"; }
};

// the four mutually tangent seed circles bounding holes of the strip gasket:
// {y > 0}, {y < -1}, the circle at 0 and the circle at 1
inline Circle seed_upper() { return Circle(0, {0, -1}, 0); }
inline Circle seed_lower() { return Circle(0, {0, 1}, 2); }
inline Circle seed_left() { return Circle(2, {0, 1}, 0); }
inline Circle seed_right() { return Circle(2, {-2, 1}, 2); }

// circle tangent to the real line at p/q in lowest terms
inline Circle ford_circle(const Rational& pq) {
  return Circle(2 * pq.den * pq.den, {-2 * pq.num * pq.den, 1}, 2 * pq.num * pq.num);
}

}  // namespace apollo
