#pragma once
#include "apollo/gaussian.hpp"

namespace apollo {

// element p + q*sqrt(dd) of a real quadratic field; dd = 0 iff the value is rational
struct QuadExt {
  Rational p{Int(0)}, q{Int(0)};
  Int dd{0};

  QuadExt() = default;
  QuadExt(Rational p_) : p(std::move(p_)) {}
  QuadExt(Rational p_, Rational q_, Int d_) : p(std::move(p_)), q(std::move(q_)), dd(std::move(d_)) {
    reduce();
  }

  void reduce() {
    if (q.sign() == 0 || dd == 0) { q = Rational(Int(0)); dd = 0; return; }
    Int r;
    if (is_perfect_square(dd, &r)) {
      p = p + q * Rational(r);
      q = Rational(Int(0));
      dd = 0;
    }
  }

  bool is_rational() const { return dd == 0; }

  QuadExt operator+(const QuadExt& o) const {
    check_field(o);
    return QuadExt(p + o.p, q + o.q, dd == 0 ? o.dd : dd);
  }
  QuadExt operator-(const QuadExt& o) const {
    check_field(o);
    return QuadExt(p - o.p, q - o.q, dd == 0 ? o.dd : dd);
  }
  QuadExt operator-() const { return QuadExt(-p, -q, dd); }
  QuadExt operator*(const QuadExt& o) const {
    check_field(o);
    Int d = dd == 0 ? o.dd : dd;
    return QuadExt(p * o.p + q * o.q * Rational(d), p * o.q + q * o.p, d);
  }
  QuadExt conj() const { return QuadExt(p, -q, dd); }
  Rational norm_field() const { return p * p - q * q * Rational(dd); }
  QuadExt inverse() const {
    Rational n = norm_field();
    if (n.sign() == 0) throw std::invalid_argument("inverse of zero");
    return QuadExt(p / n, -q / n, dd);
  }
  QuadExt operator/(const QuadExt& o) const { return *this * o.inverse(); }

  bool is_zero() const { return p.sign() == 0 && q.sign() == 0; }

  // exact sign of p + q*sqrt(dd)
  int sign() const {
    if (q.sign() == 0) return p.sign();
    if (p.sign() == 0) return q.sign();
    if (p.sign() == q.sign()) return p.sign();
    // compare p^2 with q^2 * dd; value sign follows the larger magnitude side
    Rational lhs = p * p, rhs = q * q * Rational(dd);
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? p.sign() : q.sign();
  }

  bool operator==(const QuadExt& o) const { return (*this - o).sign() == 0; }
  bool operator<(const QuadExt& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const QuadExt& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const QuadExt& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const QuadExt& o) const { return (*this - o).sign() >= 0; }

  Int floor() const;
  Int ceil() const { return -(-*this).floor(); }

  double to_double() const;
  std::string str() const {
    if (is_rational()) return p.str();
    return p.str() + (q.sign() >= 0 ? "+" : "") + q.str() + "*sqrt(" + dd.str() + ")";
  }

 private:
  void check_field(const QuadExt& o) const {
    if (dd != 0 && o.dd != 0 && dd != o.dd)
      throw std::invalid_argument("mixed quadratic fields in arithmetic");
  }
};

// exact sign of (a - b) where a, b may live in different quadratic fields
int cmp_mixed(const QuadExt& a, const QuadExt& b);

// point with coordinates in one real quadratic field
struct QuadPoint {
  QuadExt x, y;
  QuadExt norm2() const { return x * x + y * y; }
  bool operator==(const QuadPoint& o) const { return x == o.x && y == o.y; }
};

// closed rational interval certified to contain a value
struct IntervalQ {
  Rational lo, hi;

  IntervalQ() = default;
  IntervalQ(Rational v) : lo(v), hi(v) {}
  IntervalQ(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) throw std::invalid_argument("inverted interval");
  }

  IntervalQ operator+(const IntervalQ& o) const { return {lo + o.lo, hi + o.hi}; }
  IntervalQ operator-(const IntervalQ& o) const { return {lo - o.hi, hi - o.lo}; }
  IntervalQ operator*(const IntervalQ& o) const {
    Rational c[4] = {lo * o.lo, lo * o.hi, hi * o.lo, hi * o.hi};
    Rational l = c[0], h = c[0];
    for (int i = 1; i < 4; ++i) { if (c[i] < l) l = c[i]; if (h < c[i]) h = c[i]; }
    return {l, h};
  }
  bool strictly_below(const Rational& r) const { return hi < r; }
  Rational width() const { return hi - lo; }
};

// interval of width 2^-bits around sqrt(d), d >= 0
IntervalQ sqrt_interval(const Int& d, unsigned bits);
// certified enclosure of a quadratic-field value
IntervalQ enclose(const QuadExt& v, unsigned bits);

}  // namespace apollo
