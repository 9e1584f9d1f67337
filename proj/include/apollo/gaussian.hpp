#pragma once
#include "apollo/ints.hpp"
#include <array>
#include <optional>
#include <string>

namespace apollo {

struct GaussianInt {
  Int re{0}, im{0};

  GaussianInt() = default;
  GaussianInt(Int r) : re(std::move(r)) {}
  GaussianInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}

  bool operator==(const GaussianInt& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussianInt& o) const { return !(*this == o); }

  GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
  GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
  GaussianInt operator-() const { return {-re, -im}; }
  GaussianInt operator*(const GaussianInt& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianInt& operator+=(const GaussianInt& o) { re += o.re; im += o.im; return *this; }
  GaussianInt& operator-=(const GaussianInt& o) { re -= o.re; im -= o.im; return *this; }
  GaussianInt& operator*=(const GaussianInt& o) { *this = *this * o; return *this; }

  GaussianInt conj() const { return {re, -im}; }
  Int norm() const { return re * re + im * im; }
  bool is_zero() const { return re == 0 && im == 0; }
  bool is_unit() const { return norm() == 1; }
  bool is_real() const { return im == 0; }

  std::string str() const { return re.str() + "+" + im.str() + "*i"; }
};

inline GaussianInt operator*(const Int& k, const GaussianInt& g) { return {k * g.re, k * g.im}; }

// nearest-integer rounding of a/b componentwise; remainder norm <= norm(b)/2
inline GaussianInt gi_divround(const GaussianInt& a, const GaussianInt& b) {
  Int n = b.norm();
  GaussianInt t = a * b.conj();
  auto round_div = [&](const Int& x) {
    Int q = fdiv(2 * x + n, 2 * n);
    return q;
  };
  return {round_div(t.re), round_div(t.im)};
}

inline GaussianInt gi_gcd(GaussianInt a, GaussianInt b) {
  while (!b.is_zero()) {
    GaussianInt q = gi_divround(a, b);
    GaussianInt r = a - q * b;
    a = b;
    b = r;
  }
  return a;
}

// exact division; caller guarantees divisibility
inline GaussianInt gi_divexact(const GaussianInt& a, const GaussianInt& b) {
  Int n = b.norm();
  GaussianInt t = a * b.conj();
  GaussianInt q{t.re / n, t.im / n};
  return q;
}

inline const std::array<GaussianInt, 4>& gi_units() {
  static const std::array<GaussianInt, 4> u = {
      GaussianInt{1, 0}, GaussianInt{0, 1}, GaussianInt{-1, 0}, GaussianInt{0, -1}};
  return u;
}

// the unique associate u*g with re > 0 and im >= 0 (g != 0)
inline GaussianInt gi_canonical_associate(const GaussianInt& g, GaussianInt* unit_used = nullptr) {
  for (const auto& u : gi_units()) {
    GaussianInt c = u * g;
    if (c.re > 0 && c.im >= 0) {
      if (unit_used) *unit_used = u;
      return c;
    }
  }
  throw std::invalid_argument("canonical associate of zero");
}

// real rational, den >= 0, gcd(num, den) = 1; den == 0 encodes a signed infinity
struct Rational {
  Int num{0}, den{1};

  Rational() = default;
  Rational(Int n) : num(std::move(n)) {}
  Rational(Int n, Int d) : num(std::move(n)), den(std::move(d)) { normalize(); }

  void normalize() {
    if (den == 0) {
      if (num == 0) throw std::invalid_argument("0/0 rational");
      num = num > 0 ? 1 : -1;
      return;
    }
    if (den < 0) { num = -num; den = -den; }
    Int g = igcd(num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  static Rational inf() { return Rational(1, 0); }
  static Rational neg_inf() { return Rational(-1, 0); }
  bool is_inf() const { return den == 0; }
  bool is_int() const { return den == 1; }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    if (is_inf() || o.is_inf()) {
      Int l = is_inf() ? (num > 0 ? 2 : -2) : Int(0);
      Int r = o.is_inf() ? (o.num > 0 ? 2 : -2) : Int(0);
      if (l != r) return l < r;
      if (l == 0) return num * o.den < o.num * den;
      return false;
    }
    return num * o.den < o.num * den;
  }
  bool operator<=(const Rational& o) const { return *this == o || *this < o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  Rational operator+(const Rational& o) const {
    if (is_inf()) return *this;
    if (o.is_inf()) return o;
    return Rational(num * o.den + o.num * den, den * o.den);
  }
  Rational operator-(const Rational& o) const { return *this + Rational(-o.num, o.den); }
  Rational operator-() const { Rational r(*this); r.num = -r.num; return r; }
  Rational operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }
  Rational operator/(const Rational& o) const { return Rational(num * o.den, den * o.num); }

  int sign() const { return num > 0 ? 1 : num < 0 ? -1 : 0; }
  Int floor() const {
    if (is_inf()) throw std::invalid_argument("floor of infinity");
    return fdiv(num, den);
  }
  Int ceil() const { return -Rational(-num, den).floor(); }

  double to_double() const {
    if (is_inf()) return num > 0 ? 1e308 : -1e308;
    return num.convert_to<double>() / den.convert_to<double>();
  }
  std::string str() const {
    if (is_inf()) return num > 0 ? "inf" : "-inf";
    return den == 1 ? num.str() : num.str() + "/" + den.str();
  }
};

inline Rational rat_abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// point of the extended plane, num/den over Z[i]; infinity has den = 0;
// canonical: gcd 1 and den associate with re > 0, im >= 0 (or num = 1 at infinity)
struct GaussianRational {
  GaussianInt num{0, 0}, den{1, 0};

  GaussianRational() = default;
  GaussianRational(GaussianInt n, GaussianInt d) : num(std::move(n)), den(std::move(d)) {
    normalize();
  }
  explicit GaussianRational(const Rational& r) : num(r.num, 0), den(r.den, 0) { normalize(); }
  static GaussianRational inf() { return GaussianRational(GaussianInt{1, 0}, GaussianInt{0, 0}); }
  static GaussianRational from_parts(Rational x, Rational y) {
    // x + i*y with rational coordinates
    if (x.is_inf() || y.is_inf()) return inf();
    Int d = x.den * y.den / igcd(x.den, y.den);
    return GaussianRational(GaussianInt{x.num * (d / x.den), y.num * (d / y.den)},
                            GaussianInt{d, 0});
  }

  void normalize() {
    if (den.is_zero()) {
      if (num.is_zero()) throw std::invalid_argument("0/0 gaussian rational");
      num = {1, 0};
      return;
    }
    GaussianInt g = gi_gcd(num, den);
    if (g.norm() > 1) { num = gi_divexact(num, g); den = gi_divexact(den, g); }
    GaussianInt u;
    GaussianInt d = gi_canonical_associate(den, &u);
    den = d;
    num = u * num;
  }

  bool is_inf() const { return den.is_zero(); }
  bool operator==(const GaussianRational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  Rational real() const {
    if (is_inf()) throw std::invalid_argument("real part of infinity");
    GaussianInt t = num * den.conj();
    return Rational(t.re, den.norm());
  }
  Rational imag() const {
    if (is_inf()) throw std::invalid_argument("imag part of infinity");
    GaussianInt t = num * den.conj();
    return Rational(t.im, den.norm());
  }
  bool is_real_rational() const { return !is_inf() && imag().sign() == 0; }

  GaussianRational operator+(const GaussianRational& o) const {
    if (is_inf()) return *this;
    if (o.is_inf()) return o;
    return GaussianRational(num * o.den + o.num * den, den * o.den);
  }
  GaussianRational operator-(const GaussianRational& o) const {
    if (o.is_inf()) return o;
    return *this + GaussianRational(-o.num, o.den);
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return GaussianRational(num * o.num, den * o.den);
  }

  std::string str() const {
    if (is_inf()) return "inf";
    return num.str() + "/" + den.str();
  }
};

// accepts "inf", "p_re+p_im*i/q_re+q_im*i", bare integers, "a/b" real rationals,
// and "x,y" decimal-free coordinate pairs like "1/2,-1/3"
GaussianRational parse_point(const std::string& s);
Rational parse_rational(const std::string& s);

}  // namespace apollo
