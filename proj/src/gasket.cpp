#include "apollo/gasket.hpp"
#include <map>

namespace apollo {

namespace {

// child-cell disks of the base cell, inside = {H <= 0}
const Circle& disk_v1() { static Circle c(0, {-1, 0}, 2); return c; }   // Re(z) >= 1
const Circle& disk_v2() { static Circle c(2, {-1, 0}, 0); return c; }   // |z - 1/2| <= 1/2
const Circle& disk_v3() { static Circle c(2, {-1, 2}, 2); return c; }   // |z - (1/2 - i)| <= 1/2

Int max_norm(const GaussianRational& z) {
  return std::max(z.num.norm(), z.den.norm());
}

const GaussianRational& pt_inf() { static GaussianRational z = GaussianRational::inf(); return z; }
const GaussianRational& pt_zero() {
  static GaussianRational z{GaussianInt{0, 0}, GaussianInt{1, 0}};
  return z;
}
const GaussianRational& pt_mi() {
  static GaussianRational z{GaussianInt{0, -1}, GaussianInt{1, 0}};
  return z;
}

bool is_base_vertex(const GaussianRational& z) {
  return z == pt_inf() || z == pt_zero() || z == pt_mi();
}

}  // namespace

FareyQuadruple positively_present(const GaussianRational& z, const GaussianRational& z2) {
  GaussianInt p0 = z.num, q0 = z.den, r0 = z2.num, s0 = z2.den;
  GaussianInt d = p0 * s0 - q0 * r0;
  if (!d.is_unit()) throw ApolloError("NotFareyNeighbors", "ps-qr is not a unit");
  std::optional<FareyQuadruple> found;
  for (const auto& u : gi_units()) {
    for (const auto& v : gi_units()) {
      FareyQuadruple fq{u * p0, u * q0, v * r0, v * s0};
      if (fq.det() != GaussianInt{1, 0}) continue;
      GaussianInt t = fq.q.conj() * fq.s;
      bool ok;
      if (t.is_zero()) {
        bool inf_first = fq.p == GaussianInt{1, 0} && fq.q.is_zero() &&
                         fq.r.is_real() && fq.s == GaussianInt{1, 0};
        bool inf_second = fq.p.re == 1 && fq.q == GaussianInt{0, 1} &&
                          fq.r == GaussianInt{0, 1} && fq.s.is_zero();
        ok = inf_first || inf_second;
      } else {
        ok = t.re >= 0 && t.im >= 0;
      }
      if (ok && !found) found = fq;
    }
  }
  if (!found) throw ApolloError("NotPresentable", "no positive presentation with det 1");
  // deterministic sign: first nonzero coordinate positive
  FareyQuadruple fq = *found;
  for (const Int* w : {&fq.p.re, &fq.p.im, &fq.q.re, &fq.q.im,
                       &fq.r.re, &fq.r.im, &fq.s.re, &fq.s.im}) {
    if (*w != 0) {
      if (*w < 0) { fq.p = -fq.p; fq.q = -fq.q; fq.r = -fq.r; fq.s = -fq.s; }
      break;
    }
  }
  return fq;
}

RealQuadruple quadruple_of(const Rational& g) {
  if (g.is_inf()) throw std::invalid_argument("quadruple of infinity");
  if (g.is_int()) {
    if (g.num > 0) return {g.num - 1, 1, 1, 0};
    return {-1, 0, g.num + 1, 1};
  }
  // solve p*q0 - q*p0 = -1 with 1 <= q <= q0-1 via the extended Euclid identity
  Int p0 = g.num, q0 = g.den;
  Int old_r = q0, r = p0, old_x = 1, x = 0;
  while (r != 0) {
    Int quot = old_r / r;
    Int t = old_r - quot * r; old_r = r; r = t;
    t = old_x - quot * x; old_x = x; x = t;
  }
  Int g0 = old_r;  // +-1 times gcd = +-1 here
  Int y = (g0 - old_x * q0) / p0;
  if (g0 == -1) { old_x = -old_x; y = -y; }
  Int p = -old_x, q = y;
  Int k = fdiv(q, q0);
  q -= k * q0; p -= k * p0;
  if (q == 0) { q += q0; p += p0; }
  RealQuadruple rq{p, q, p0 - p, q0 - q};
  if (rq.p * rq.s - rq.q * rq.r != -1) throw std::logic_error("farey quadruple identity failed");
  return rq;
}

std::pair<Rational, Rational> farey_neighbors_real(const Rational& g) {
  RealQuadruple rq = quadruple_of(g);
  return {rq.left(), rq.right()};
}

Rational iota(const Rational& b) {
  RealQuadruple rq = quadruple_of(b);
  return Rational(rq.q, rq.q + rq.s);
}

Mobius eta_of(const Rational& b) {
  RealQuadruple t = quadruple_of(b);
  return Mobius(GaussianInt{-t.q - t.s, -t.q}, GaussianInt{t.p + t.r, t.p},
                GaussianInt{0, -(t.q + t.s)}, GaussianInt{0, t.p + t.r});
}

Cell cell_of(const Mobius& w) {
  return Cell{w.apply(pt_inf()), w.apply(pt_zero()), w.apply(pt_mi())};
}

Descent rational_descent(const GaussianRational& z0) {
  GaussianRational z = z0;
  Int lead = 0;
  WordBuilder body;
  if (!z.is_inf()) {
    Rational y = z.imag();
    if (y > Rational(Int(0)) || y < Rational(Int(-1)))
      throw ApolloError("NotAGasketRational", "outside the strip");
    Rational x = z.real();
    if (x.sign() < 0) {
      lead = (-x).ceil();
      z = z + GaussianRational(GaussianInt{lead, 0}, GaussianInt{1, 0});
    }
  }
  while (!is_base_vertex(z)) {
    Int before = max_norm(z);
    bool m1 = disk_v1().sign_at(z) <= 0;
    bool m2 = disk_v2().sign_at(z) <= 0;
    bool m3 = disk_v3().sign_at(z) <= 0;
    int count = int(m1) + int(m2) + int(m3);
    if (count == 0 || count == 3)
      throw ApolloError("NotAGasketRational", "not inside the cell structure");
    int k = m1 ? 1 : (m2 ? 2 : 3);
    bool at_vertex = count == 2;
    body.append(k);
    z = Mobius::V(k).inverse().apply(z);
    if (at_vertex) {
      if (!is_base_vertex(z))
        throw ApolloError("NotAGasketRational", "vertex step missed a base vertex");
    } else if (max_norm(z) >= before) {
      throw ApolloError("NotAGasketRational", "norm did not decrease");
    }
  }
  Descent d;
  d.word = make_finite_word(lead, body.take());
  d.base_vertex = z;
  return d;
}

bool is_gasket_rational(const GaussianRational& z) {
  try {
    rational_descent(z);
    return true;
  } catch (const ApolloError&) {
    return false;
  }
}

std::pair<Circle, Circle> circles_through_vertex(const GaussianRational& z) {
  Descent d = rational_descent(z);
  Mobius w = d.word.finite_matrix();
  std::pair<Circle, Circle> base;
  if (d.base_vertex == pt_inf()) base = {seed_upper(), seed_lower()};
  else if (d.base_vertex == pt_zero()) base = {seed_upper(), seed_left()};
  else base = {seed_lower(), seed_left()};
  Circle c1 = base.first.transport(w);
  Circle c2 = base.second.transport(w);
  c1.make_primitive();
  c2.make_primitive();
  return {c1, c2};
}

std::vector<Circle> gasket_circles(int depth) {
  std::vector<Circle> out;
  std::map<std::tuple<Int, Int, Int, Int>, bool> seen;
  std::vector<Circle> cur;
  auto add = [&](Circle c, std::vector<Circle>* next) {
    c.make_primitive();
    auto k = c.key();
    if (seen.count(k)) return;
    seen[k] = true;
    out.push_back(c);
    if (next) next->push_back(c);
  };
  for (const Circle& s : {seed_upper(), seed_lower(), seed_left(), seed_right()})
    add(s, &cur);
  std::vector<Mobius> gens;
  for (int k = 1; k <= 3; ++k) {
    gens.push_back(Mobius::V(k));
    gens.push_back(Mobius::V(k).inverse());
  }
  for (int level = 0; level < depth; ++level) {
    std::vector<Circle> next;
    for (const Circle& c : cur)
      for (const Mobius& g : gens) add(c.transport(g), &next);
    cur = std::move(next);
  }
  return out;
}

}  // namespace apollo
