#include "apollo/marking.hpp"

namespace apollo {

Marking t_map(const Marking& m) {
  const Rational& a = m.alpha;
  const Rational& b = m.beta;
  if (b.is_int()) {
    if (b.num > 0) return Marking(Rational(Int(1)), a + Rational(Int(1)) - b);
    return Marking(Rational(Int(0)), a - b);
  }
  RealQuadruple qd = quadruple_of(b);
  Rational qs(qd.q, qd.q + qd.s);                          // iota(b)
  Rational step(qd.q - qd.p - qd.r, qd.q + qd.s);
  return Marking(qs, a + step);
}

Marking tau(const Marking& m) {
  if (m.alpha.num == 0 && m.beta.num == 0 && !m.alpha.is_inf()) return m;
  Rational one{Int(1)};
  return Marking(one - m.alpha, one - m.beta);
}

MarkingOrbit orbit_of(const Marking& start) {
  MarkingOrbit o;
  Marking m = start;
  const size_t cap = 1000000;
  for (size_t i = 0; i < cap; ++i) {
    o.markings.push_back(m);
    m = t_map(m);
    if (m == start) break;
    if (i + 1 == cap) throw ApolloError("InternalInconsistency", "orbit did not close within iteration cap");
  }
  o.core = Mobius::identity();
  for (const Marking& mk : o.markings) {
    Mobius e = eta_of(mk.beta);
    o.etas.push_back(e);
    o.core = o.core * e.inverse();
  }
  GaussianInt tr = o.core.trace();
  if (tr.im != 0) throw ApolloError("NonRealTrace", "core trace " + tr.str() + " is not real");
  o.trace = tr.re;
  Int t2 = tr.re * tr.re;
  if (t2 < 4) {
    o.core_type = CoreType::Elliptic;
  } else if (t2 == 4) {
    if (o.core.is_identity_projective()) {
      o.core_type = CoreType::Elliptic;
      o.core_is_identity = true;
    } else {
      o.core_type = CoreType::Parabolic;
    }
  } else {
    o.core_type = CoreType::Hyperbolic;
  }
  return o;
}

std::vector<Rational> modular_symbol_of(const MarkingOrbit& o) {
  std::vector<Rational> comps;
  for (const Marking& mk : o.markings) {
    Rational b = mk.beta;
    Int fl = b.floor();
    comps.push_back(b - Rational(fl));
  }
  return comps;
}

}  // namespace apollo
