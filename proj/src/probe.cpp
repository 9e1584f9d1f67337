#include "apollo/probe.hpp"
#include "apollo/cutting.hpp"
#include <algorithm>

namespace apollo {

namespace {

// a crown chain crosses at most six discs per period; 24 leaves margin
constexpr int kChainCap = 24;

// child-cell disks of the base cell, inside = {H <= 0}
const Circle& disk_v1() { static Circle c(0, {-1, 0}, 2); return c; }
const Circle& disk_v2() { static Circle c(2, {-1, 0}, 0); return c; }
const Circle& disk_v3() { static Circle c(2, {-1, 2}, 2); return c; }

const GaussianRational& pt_zero() {
  static GaussianRational z{GaussianInt{0, 0}, GaussianInt{1, 0}};
  return z;
}
const GaussianRational& pt_mi() {
  static GaussianRational z{GaussianInt{0, -1}, GaussianInt{1, 0}};
  return z;
}

// the marked line beta + u*((alpha - beta) - i); y(u) = -u identically
struct ProbeLine {
  Rational beta, dx;  // dx = alpha - beta

  GaussianRational at(const Rational& u) const {
    return GaussianRational::from_parts(beta + u * dx, -u);
  }
  // H(at(u)) = A u^2 + B u + C
  void coeffs(const Circle& c, Rational& A, Rational& B, Rational& C) const {
    Rational a(c.a);
    A = a * (dx * dx + Rational(Int(1)));
    B = Rational(Int(2)) * (a * beta * dx + Rational(c.b.re) * dx - Rational(c.b.im));
    C = a * beta * beta + Rational(2 * c.b.re) * beta + Rational(c.c);
  }
};

bool rational_sqrt(const Rational& r, Rational* root) {
  if (r.sign() < 0) return false;
  Int rn, rd;
  if (!is_perfect_square(r.num, &rn) || !is_perfect_square(r.den, &rd)) return false;
  if (root) *root = Rational(rn, rd);
  return true;
}

bool is_tangency(const GaussianRational& z) { return is_gasket_rational(z); }

// u-coordinate of a point expected on the line; rejects off-line points
Rational u_on_line(const ProbeLine& line, const GaussianRational& z) {
  if (z.is_inf()) throw ApolloError("InternalInconsistency", "probe point escaped to infinity");
  Rational u = -z.imag();
  if (line.beta + u * line.dx != z.real())
    throw ApolloError("InternalInconsistency", "core translate left the marked line");
  return u;
}

std::vector<Marking> orbit_markings_sorted(const MarkingOrbit& o) {
  std::vector<Marking> ms = o.markings;
  std::sort(ms.begin(), ms.end());
  return ms;
}

// first crossing of a circle after u_from; entry root of the secant quadratic
struct Entry {
  Circle circle;
  Rational u_in;
};

// locate the hole crossed at a sample inside (u_from, u_to); rationality of
// its entry is the exact test. irrational entry -> nullopt + note.
std::optional<Entry> sample_hole(const ProbeLine& line, const Rational& u_from,
                                 const Rational& u_to, std::string* note) {
  static const std::pair<int, int> fracs[] = {{1, 2}, {1, 3}, {2, 5}, {3, 7}, {4, 9}, {5, 11}};
  for (auto [num, den] : fracs) {
    Rational u_s = u_from + (u_to - u_from) * Rational(Int(num), Int(den));
    GaussianRational zs = line.at(u_s);
    Circle hole;
    try {
      hole = hole_containing(zs);
    } catch (const ApolloError& e) {
      if (e.code == "OnGasket") continue;  // resample off the configuration
      throw;
    }
    if (hole.is_line())
      throw ApolloError("InternalInconsistency", "probe sample left the strip");
    Rational A, B, C;
    line.coeffs(hole, A, B, C);
    Rational disc = B * B - Rational(Int(4)) * A * C, sq;
    if (!rational_sqrt(disc, &sq)) {
      *note = "irrational crossing of circle " + hole.str() + " inside (" + u_from.str() +
              ", " + u_to.str() + ")";
      return std::nullopt;
    }
    Rational u_in = (-B - sq) / (Rational(Int(2)) * A);
    if (u_in > u_to)
      throw ApolloError("InternalInconsistency", "sampled hole does not meet the gap");
    return Entry{hole, u_in};
  }
  throw ApolloError("PrecisionExhausted", "could not sample off the circle configuration");
}

// disc the line enters at a gasket vertex in the +u direction; nullopt when
// the line slips into the cusp pinched between the two circles there
std::optional<Circle> disc_entered_at(const ProbeLine& line, const GaussianRational& z,
                                      const Rational& u) {
  auto [t1, t2] = circles_through_vertex(z);
  for (const Circle& t : {t1, t2}) {
    Rational A, B, C;
    line.coeffs(t, A, B, C);
    if ((A * u * u + B * u + C).sign() != 0)
      throw ApolloError("InternalInconsistency", "vertex misses its own circle");
    if ((Rational(Int(2)) * A * u + B).sign() < 0) return t;
  }
  return std::nullopt;
}

// marking candidates read at a tangency crossing: rebase the plane so the
// crossing goes to infinity, then intersect the image line with both
// horizontal lines; the J-flip swaps which side of the plane is read
std::pair<Marking, Marking> read_candidates(const GaussianRational& z1, const Rational& alpha,
                                            const Rational& beta) {
  Descent d = rational_descent(z1);
  Mobius nm = Mobius::identity();
  if (d.base_vertex == pt_zero()) nm = Mobius::Smap() * Mobius::Smap();
  else if (d.base_vertex == pt_mi()) nm = Mobius::Smap();
  Mobius h = nm * d.word.finite_matrix().inverse();
  GaussianRational p0 = h.apply(GaussianRational::from_parts(beta, Rational(Int(0))));
  GaussianRational p1 = h.apply(GaussianRational::from_parts(alpha, Rational(Int(-1))));
  Rational x0 = p0.real(), y0 = p0.imag(), x1 = p1.real(), y1 = p1.imag();
  Rational dy = y1 - y0;
  if (dy.sign() == 0)
    throw ApolloError("InternalInconsistency", "rebased plane line is horizontal");
  Rational bt = x0 - y0 * (x1 - x0) / dy;
  Rational at = x0 + (Rational(Int(-1)) - y0) * (x1 - x0) / dy;
  return {Marking(at, bt), Marking(-bt, -at)};
}

}  // namespace

Circle hole_containing(const GaussianRational& z) {
  if (z.is_inf()) throw ApolloError("OnGasket", "infinity is a gasket point");
  if (seed_upper().sign_at(z) < 0) return seed_upper();
  if (seed_lower().sign_at(z) < 0) return seed_lower();
  GaussianRational zz = z;
  Mobius w = Mobius::identity();
  for (int depth = 0; depth < 4096; ++depth) {
    Rational x = zz.real();
    if (x.sign() < 0) {
      Int t = (-x).ceil();
      zz = zz + GaussianRational(GaussianInt{t, 0}, GaussianInt{1, 0});
      w = w * Mobius::V(1).pow(-t);
    }
    for (const Circle& hole : {seed_upper(), seed_lower(), seed_left(), seed_right()})
      if (hole.sign_at(zz) < 0) {
        Circle out = hole.transport(w);
        out.make_primitive();
        return out;
      }
    int k;
    if (disk_v1().sign_at(zz) < 0) k = 1;
    else if (disk_v2().sign_at(zz) < 0) k = 2;
    else if (disk_v3().sign_at(zz) < 0) k = 3;
    else throw ApolloError("OnGasket", "point lies on the circle configuration");
    zz = Mobius::V(k).inverse().apply(zz);
    w = w * Mobius::V(k);
  }
  throw ApolloError("PrecisionExhausted", "hole search depth cap hit");
}

ProbeResult inside_probe(const MarkingOrbit& o, const CoreWord& w) {
  if (o.core_type != CoreType::Hyperbolic)
    throw std::invalid_argument("probe requires a hyperbolic orbit");

  const Rational& alpha = o.markings[0].alpha;
  const Rational& beta = o.markings[0].beta;
  ProbeLine line{beta, alpha - beta};
  ProbeResult res;

  // the line is the axis of the core; its fixed points cut out the inside
  // arc, the only stretch whose crossings decide the far side of the plane
  FixedPointData fp = hyperbolic_fixed_points(o.core);
  QuadExt ua = -fp.z.y, ub = -fp.z_other.y;
  QuadExt u_minus = ua < ub ? ua : ub;
  QuadExt u_plus = ua < ub ? ub : ua;

  // bracket the inside arc rationally, then find a crossing in the bracket
  Rational u_lo, u_hi;
  for (unsigned bits = 16;; bits *= 2) {
    if (bits > 16384) throw ApolloError("PrecisionExhausted", "axis bracket refinement cap");
    IntervalQ a = enclose(u_minus, bits), b = enclose(u_plus, bits);
    if (a.hi < b.lo) { u_lo = a.hi; u_hi = b.lo; break; }
  }
  std::optional<Entry> e0 = sample_hole(line, u_lo, u_hi, &res.note);
  if (!e0) return res;
  if (!(u_minus < QuadExt(e0->u_in)))
    throw ApolloError("InternalInconsistency", "inside disc reaches the axis endpoint");

  // an elementary far side covers the inside arc by discs meeting at cusps,
  // so every crossing must enter and leave on the tangency set
  GaussianRational vertex = line.at(e0->u_in);
  Rational u_vertex = e0->u_in;
  if (!is_tangency(vertex)) {
    res.note = "circle " + e0->circle.str() + " entered at the rational point u=" +
               u_vertex.str() + " off the tangency set";
    return res;
  }

  // one fundamental domain of the inside arc, vertex to its core translate
  std::optional<Rational> u_next;
  for (const Mobius& g : {o.core, o.core.inverse()}) {
    Rational u = u_on_line(line, g.apply(vertex));
    if (u > u_vertex) u_next = u;
  }
  if (!u_next)
    throw ApolloError("InternalInconsistency", "core translate does not advance the vertex");

  // follow the chain across the period; any break certifies a non-crown far
  // side, and an overlong chain is a tangency spiral no crown can produce
  Circle cur = e0->circle;
  Rational u_in = u_vertex;
  bool closed = false;
  for (int steps = 0; steps < kChainCap; ++steps) {
    if (cur.is_line()) throw ApolloError("InternalInconsistency", "probe walked into a line hole");
    Rational A, B, C;
    line.coeffs(cur, A, B, C);
    Rational u_out = -B / A - u_in;  // Vieta from the rational entry
    if (u_out > *u_next)
      throw ApolloError("InternalInconsistency", "disc interior swallowed the period end");
    GaussianRational exit_pt = line.at(u_out);
    bool tan = is_tangency(exit_pt);
    res.crossings.push_back({cur, u_in, u_out, tan});
    if (!tan) {
      res.note = "circle " + cur.str() + " exits at the rational point u=" + u_out.str() +
                 " off the tangency set";
      return res;
    }
    if (u_out == *u_next) {
      closed = true;
      break;
    }
    std::optional<Circle> next = disc_entered_at(line, exit_pt, u_out);
    if (!next) {
      res.note = "chain pinches into the cusp at u=" + u_out.str();
      return res;
    }
    cur = *next;
    u_in = u_out;
  }
  if (!closed) {
    res.note = "tangency chain runs past " + std::to_string(kChainCap) +
               " discs without closing the period";
    return res;
  }

  // closed inside chain: elementary; the vertex is a cusp of the far crown
  auto [cand_a, cand_b] = read_candidates(vertex, alpha, beta);
  std::vector<Marking> own = orbit_markings_sorted(o);
  for (const Marking& cand : {cand_a, cand_b}) {
    MarkingOrbit co = orbit_of(cand);
    if (co.core_type != CoreType::Hyperbolic) continue;
    if (orbit_markings_sorted(co) == own) continue;  // read back our own side
    CoreWord cw = run_algorithm(co);
    if (!tails_letter_rotated_equal(cw.word.tail, w.word.tail)) continue;
    res.double_crown = true;
    res.complementary = cand;
    return res;
  }
  throw ApolloError("InternalInconsistency",
                    "inside chain closed but no complementary marking validates");
}

}  // namespace apollo
