#include "apollo/cutting.hpp"
#include <map>

namespace apollo {

GasketWord cutting_sequence_rational(const GaussianRational& z) {
  return rational_descent(z).word;
}

namespace {

const Circle& disk_v1() { static Circle c(0, {-1, 0}, 2); return c; }
const Circle& disk_v2() { static Circle c(2, {-1, 0}, 0); return c; }
const Circle& disk_v3() { static Circle c(2, {-1, 2}, 2); return c; }

QuadPoint mobius_apply_quad(const Mobius& m, const QuadPoint& z) {
  // (az + b) / (cz + d) with gaussian-integer entries on exact coordinates
  auto lin = [&](const GaussianInt& u, const GaussianInt& v) {
    QuadExt re = QuadExt(Rational(u.re)) * z.x - QuadExt(Rational(u.im)) * z.y +
                 QuadExt(Rational(v.re));
    QuadExt im = QuadExt(Rational(u.im)) * z.x + QuadExt(Rational(u.re)) * z.y +
                 QuadExt(Rational(v.im));
    return QuadPoint{re, im};
  };
  QuadPoint num = lin(m.a, m.b);
  QuadPoint den = lin(m.c, m.d);
  QuadExt n2 = den.norm2();
  if (n2.sign() == 0) throw ApolloError("FixedPointNotOnGasket", "image at infinity");
  QuadExt re = (num.x * den.x + num.y * den.y) / n2;
  QuadExt im = (num.y * den.x - num.x * den.y) / n2;
  return QuadPoint{re, im};
}

std::string quad_key(const QuadPoint& z) {
  return z.x.str() + "|" + z.y.str();
}

}  // namespace

FixedPointData hyperbolic_fixed_points(const Mobius& g0) {
  if (!g0.det().is_unit())
    throw ApolloError("FixedPointNotOnGasket", "determinant is not a unit");
  // normalize to a real trace
  Mobius g = g0;
  GaussianInt tr = g.trace();
  if (tr.re == 0 && tr.im != 0) {
    g = Mobius(GaussianInt{0, 1} * g.a, GaussianInt{0, 1} * g.b,
               GaussianInt{0, 1} * g.c, GaussianInt{0, 1} * g.d);
    tr = g.trace();
  }
  if (tr.im != 0) throw ApolloError("FixedPointNotOnGasket", "trace is not real");
  GaussianInt dt = g.det();
  if (dt.im != 0) {
    if (tr.is_zero()) throw ApolloError("EllipticElement", "finite order element");
    throw ApolloError("FixedPointNotOnGasket", "imaginary determinant");
  }
  Int delta = tr.re * tr.re - 4 * dt.re;
  if (delta < 0) throw ApolloError("EllipticElement", "negative discriminant");
  if (delta == 0) throw ApolloError("FixedPointNotOnGasket", "parabolic element");
  if (is_perfect_square(delta))
    throw ApolloError("EllipticElement", "order-two element");
  if (g.c.is_zero())
    throw ApolloError("FixedPointNotOnGasket", "unit-determinant element fixing infinity");
  // roots of c z^2 + (d - a) z - b = 0: ((a - d) +- sqrt(delta)) / (2c)
  GaussianInt t = g.a - g.d;
  GaussianInt c2 = GaussianInt{2, 0} * g.c;
  Int n = c2.norm();
  GaussianInt w = c2.conj();
  auto root = [&](int s) {
    // ((t + s*sqrt(delta)) * conj(2c)) / |2c|^2
    GaussianInt tw = t * w;
    QuadExt x(Rational(tw.re, n), Rational(s * w.re, n), delta);
    QuadExt y(Rational(tw.im, n), Rational(s * w.im, n), delta);
    return QuadPoint{x, y};
  };
  auto deriv_big = [&](const QuadPoint& z) {
    // |c z + d|^2 > 1 marks the attracting fixed point
    QuadExt re = QuadExt(Rational(g.c.re)) * z.x - QuadExt(Rational(g.c.im)) * z.y +
                 QuadExt(Rational(g.d.re));
    QuadExt im = QuadExt(Rational(g.c.im)) * z.x + QuadExt(Rational(g.c.re)) * z.y +
                 QuadExt(Rational(g.d.im));
    return (re * re + im * im - QuadExt(Rational(Int(1)))).sign() > 0;
  };
  QuadPoint zp = root(1), zm = root(-1);
  FixedPointData out;
  out.delta = delta;
  out.normalized = g;
  if (deriv_big(zp)) { out.z = zp; out.z_other = zm; }
  else if (deriv_big(zm)) { out.z = zm; out.z_other = zp; }
  else throw ApolloError("FixedPointNotOnGasket", "no attracting fixed point");
  return out;
}

GasketWord cutting_sequence_fixed_point(const Mobius& g0) {
  if (!g0.det().is_unit())
    throw ApolloError("FixedPointNotOnGasket", "determinant is not a unit");
  if (g0.is_identity_projective())
    throw ApolloError("EllipticElement", "identity element");
  // detect parabolic on a normalized representative
  Mobius g = g0;
  GaussianInt tr = g.trace();
  if (tr.re == 0 && tr.im != 0) {
    g = Mobius(GaussianInt{0, 1} * g.a, GaussianInt{0, 1} * g.b,
               GaussianInt{0, 1} * g.c, GaussianInt{0, 1} * g.d);
    tr = g.trace();
  }
  if (tr.im == 0 && g.det().im == 0 && tr.re * tr.re == 4 * g.det().re) {
    if (g.c.is_zero()) return GasketWord{};  // parabolic fixing infinity
    GaussianInt t = g.a - g.d;
    GaussianRational fp(t, GaussianInt{2, 0} * g.c);
    try {
      return cutting_sequence_rational(fp);
    } catch (const ApolloError&) {
      throw ApolloError("FixedPointNotOnGasket", "parabolic fixed point off the gasket");
    }
  }
  FixedPointData fp = hyperbolic_fixed_points(g0);
  QuadPoint z = fp.z;
  // strip check
  if (z.y.sign() > 0 || (z.y + QuadExt(Rational(Int(1)))).sign() < 0)
    throw ApolloError("FixedPointNotOnGasket", "fixed point outside the strip");
  Int lead = 0;
  if (z.x.sign() < 0) {
    lead = (-z.x).ceil();
    z.x = z.x + QuadExt(Rational(lead));
  }
  std::vector<int> letters;
  std::map<std::string, size_t> seen;
  size_t split = 0;
  for (size_t step = 0;; ++step) {
    if (step > 200000)
      throw ApolloError("FixedPointNotOnGasket", "descent failed to become periodic");
    auto [it, fresh] = seen.emplace(quad_key(z), letters.size());
    if (!fresh) { split = it->second; break; }
    int s1 = disk_v1().eval(z).sign();
    int s2 = disk_v2().eval(z).sign();
    int s3 = disk_v3().eval(z).sign();
    if (s1 == 0 || s2 == 0 || s3 == 0)
      throw ApolloError("FixedPointNotOnGasket", "irrational point on a cell boundary");
    int count = int(s1 < 0) + int(s2 < 0) + int(s3 < 0);
    if (count != 1)
      throw ApolloError("FixedPointNotOnGasket", "point escapes the cell structure");
    int k = s1 < 0 ? 1 : (s2 < 0 ? 2 : 3);
    letters.push_back(k);
    z = mobius_apply_quad(Mobius::V(k).inverse(), z);
  }
  std::vector<int> body(letters.begin(), letters.begin() + split);
  std::vector<int> tail(letters.begin() + split, letters.end());
  return make_periodic_word(lead, blocks_of_letters(body), blocks_of_letters(tail));
}

std::vector<Approximant> approximants(const GasketWord& word, int count) {
  // unroll enough blocks: need count+1 blocks (anchor looks one block ahead)
  std::vector<Block> blocks;
  if (word.lead > 0) blocks.push_back({1, word.lead});  // lead acts as a V1-power block
  for (const auto& b : word.body) blocks.push_back(b);
  if (word.is_finite()) {
    if (Int(count) + 1 > Int(blocks.size()))
      throw ApolloError("WordTooShort", "finite word has too few blocks");
  } else {
    while (Int(blocks.size()) < Int(count) + 1)
      for (const auto& b : word.tail) blocks.push_back(b);
  }
  blocks = merge_blocks(blocks);
  if (Int(count) + 1 > Int(blocks.size()))
    throw ApolloError("WordTooShort", "word has too few blocks");

  auto anchor = [](int letter) {
    switch (letter) {
      case 1: return GaussianRational::inf();
      case 2: return GaussianRational(GaussianInt{0, 0}, GaussianInt{1, 0});
      default: return GaussianRational(GaussianInt{0, -1}, GaussianInt{1, 0});
    }
  };
  bool neg_lead = word.lead > 0;
  std::vector<Approximant> out;
  Mobius m = Mobius::identity();
  for (int j = 0; j < count; ++j) {
    if (j > 0) {
      const Block& b = blocks[j - 1];
      Int e = (neg_lead && j == 1) ? -b.exp : b.exp;
      m = m * Mobius::V(b.letter).pow(e);
    }
    Approximant a;
    a.index = j;
    a.z = m.apply(anchor(blocks[j].letter));
    a.q = a.z.den;
    // enclosing cell after j+1 blocks: circumdiameter of its vertex quadruple
    Mobius m1 = m;
    {
      const Block& b = blocks[j];
      Int e = (neg_lead && j == 0) ? -b.exp : b.exp;
      m1 = m1 * Mobius::V(b.letter).pow(e);
    }
    FareyQuadruple fq = positively_present(m1.apply(GaussianRational::inf()),
                                           m1.apply(anchor(2)));
    auto cd = fq.circumdiameter();
    a.cell_bound = cd ? rat_abs(*cd) : Rational::inf();
    out.push_back(a);
  }
  return out;
}

bool dirichlet_bound_holds(const QuadPoint& z, const Approximant& aj,
                           const Approximant& aj1, unsigned max_bits) {
  // an infinite approximant has denominator 0, making the bound 2/0 vacuous
  if (aj.z.is_inf() || aj1.z.is_inf()) return true;
  Rational xj = aj.z.real(), yj = aj.z.imag();
  // |z - z_j|^2 * N(q_j) * N(q_{j+1}) < 4
  QuadExt dx = z.x - QuadExt(xj), dy = z.y - QuadExt(yj);
  QuadExt lhs = (dx * dx + dy * dy) * QuadExt(Rational(aj.q.norm() * aj1.q.norm()));
  for (unsigned bits = 64; bits <= max_bits; bits *= 2) {
    IntervalQ e = enclose(lhs, bits);
    if (e.strictly_below(Rational(Int(4)))) return true;
    if (Rational(Int(4)) <= e.lo) return false;
  }
  return (lhs - QuadExt(Rational(Int(4)))).sign() < 0;
}

GasketWord substitute_J(const GasketWord& word, const Int& a0) {
  // validate the prefix matches V1^{a0} followed by V2 or V3
  std::vector<Block> rest;
  int first_letter;
  if (a0 < 0) {
    if (word.lead != -a0)
      throw ApolloError("MalformedPrefix", "lead does not match a0");
    rest = word.body;
  } else {
    if (word.lead != 0)
      throw ApolloError("MalformedPrefix", "unexpected V1^{-t} prefix");
    rest = word.body;
    if (a0 > 0) {
      if (rest.empty() || rest.front().letter != 1 || rest.front().exp != a0)
        throw ApolloError("MalformedPrefix", "V1 prefix does not match a0");
      rest.erase(rest.begin());
    } else if (!rest.empty() && rest.front().letter == 1) {
      throw ApolloError("MalformedPrefix", "word starts with V1 but a0 = 0");
    }
  }
  if (rest.empty() && word.is_finite())
    throw ApolloError("MalformedPrefix", "no letter after the V1 prefix");
  std::vector<Block> tail = word.tail;
  if (rest.empty()) {
    // pull the first tail letter forward so the case split has a letter to eat
    std::vector<int> t = expand_letters(tail);
    rest.push_back({t.front(), 1});
    std::rotate(t.begin(), t.begin() + 1, t.end());
    tail = blocks_of_letters(t);
  }
  first_letter = rest.front().letter;
  if (first_letter == 1) throw ApolloError("MalformedPrefix", "V1 run longer than a0");
  // drop the single V2/V3 letter heading the remainder
  if (rest.front().exp == 1) rest.erase(rest.begin());
  else rest.front().exp -= 1;
  // case one (V2): w' maps by V1->V3, V2->V1, V3->V2
  // case two (V3): w' maps by V1->V2, V2->V3, V3->V1
  static const int map_case1[4] = {0, 3, 1, 2};
  static const int map_case2[4] = {0, 2, 3, 1};
  const int* mp = first_letter == 2 ? map_case1 : map_case2;
  std::vector<Block> new_body = substitute_blocks(rest, mp);
  std::vector<Block> new_tail = substitute_blocks(tail, mp);
  Int new_a0 = -a0 - 1;
  Int new_lead = 0;
  std::vector<Block> prefix;
  if (new_a0 < 0) new_lead = -new_a0;
  else if (new_a0 > 0) prefix.push_back({1, new_a0});
  prefix.push_back({3, 1});
  prefix.insert(prefix.end(), new_body.begin(), new_body.end());
  return make_periodic_word(new_lead, prefix, new_tail);
}

bool same_orbit(const GasketWord& w1, const GasketWord& w2) {
  if (w1.is_finite() != w2.is_finite()) return false;
  if (w1.is_finite()) return true;  // tangency points form a single orbit
  for (int t = 0; t < 3; ++t) {
    std::vector<Block> r = w1.tail;
    for (auto& b : r) b.letter = (b.letter - 1 + t) % 3 + 1;
    if (canonical_tail(r) == w2.tail) return true;
  }
  return false;
}

bool on_boundary(const GasketWord& word, bool* degenerate) {
  if (word.is_finite()) throw ApolloError("WordTooShort", "word has no periodic tail");
  bool used[4] = {false, false, false, false};
  for (const auto& b : word.tail) used[b.letter] = true;
  int distinct = int(used[1]) + int(used[2]) + int(used[3]);
  if (degenerate) *degenerate = distinct == 1;
  return distinct <= 2;
}

}  // namespace apollo
