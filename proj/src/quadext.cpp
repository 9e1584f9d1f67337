#include "apollo/quadext.hpp"
#include <cmath>

namespace apollo {

Int QuadExt::floor() const {
  if (is_rational()) return p.floor();
  // start from a double estimate, then correct with exact comparisons
  double est = to_double();
  Int m;
  if (std::abs(est) < 9e15) m = Int(static_cast<long long>(std::floor(est)));
  else m = Int(0);
  while (*this < QuadExt(Rational(m))) m -= 1;
  while (*this >= QuadExt(Rational(m + 1))) m += 1;
  return m;
}

double QuadExt::to_double() const {
  double v = p.to_double();
  if (!is_rational()) v += q.to_double() * std::sqrt(dd.convert_to<double>());
  return v;
}

// sign of u + v*sqrt(e), all rational data
static int sign_lin(const Rational& u, const Rational& v, const Int& e) {
  return QuadExt(u, v, e).sign();
}

int cmp_mixed(const QuadExt& a, const QuadExt& b) {
  if (a.dd == b.dd || a.is_rational() || b.is_rational()) return (a - b).sign();
  // x + q1*sqrt(D1) - q2*sqrt(D2), x rational, q1, q2 nonzero
  Rational x = a.p - b.p;
  const Rational& q1 = a.q;
  const Rational& q2 = b.q;
  const Int& d1 = a.dd;
  const Int& d2 = b.dd;
  // t = q1*sqrt(D1) - q2*sqrt(D2); sign via squaring
  int st;
  if (q1.sign() > 0 && q2.sign() < 0) st = 1;
  else if (q1.sign() < 0 && q2.sign() > 0) st = -1;
  else {
    Rational l = q1 * q1 * Rational(d1), r = q2 * q2 * Rational(d2);
    if (l == r) st = 0;
    else st = (l > r) ? q1.sign() : (-q2).sign();
  }
  if (st == 0) return x.sign();
  if (x.sign() == 0) return st;
  if (x.sign() == st) return st;
  // |x| vs |t|: x^2 vs t^2 = q1^2 D1 + q2^2 D2 - 2 q1 q2 sqrt(D1 D2)
  Rational u = x * x - q1 * q1 * Rational(d1) - q2 * q2 * Rational(d2);
  Rational v = Rational(2) * q1 * q2;
  int s2 = sign_lin(u, v, d1 * d2);  // sign of x^2 - t^2
  if (s2 == 0) return 0;
  return (s2 > 0) ? x.sign() : st;
}

IntervalQ sqrt_interval(const Int& d, unsigned bits) {
  if (d < 0) throw std::invalid_argument("sqrt of negative");
  Int scale = Int(1) << (2 * bits);
  Int r = isqrt(d * scale);
  Int den = Int(1) << bits;
  return IntervalQ(Rational(r, den), Rational(r + 1, den));
}

IntervalQ enclose(const QuadExt& v, unsigned bits) {
  IntervalQ base(v.p);
  if (v.is_rational()) return base;
  IntervalQ root = sqrt_interval(v.dd, bits);
  return base + IntervalQ(v.q) * root;
}

}  // namespace apollo
