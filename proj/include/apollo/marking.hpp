#pragma once
#include "apollo/gasket.hpp"

namespace apollo {

// marking symbol (alpha, beta), normalized into
// ((0,1) x Q) u ({0} x Q>=0) u ({1} x Q<1) under (a, b) ~ (a+1, b+1)
struct Marking {
  Rational alpha, beta;

  Marking() : alpha(Int(0)), beta(Int(0)) {}
  Marking(Rational a, Rational b) : alpha(std::move(a)), beta(std::move(b)) { normalize(); }

  void normalize() {
    if (alpha.is_inf() || beta.is_inf()) throw std::invalid_argument("infinite marking");
    Int k;
    if (!alpha.is_int()) {
      k = alpha.floor();
    } else {
      k = alpha.num;
      if (beta < alpha) k -= 1;  // land on the alpha = 1 representative
    }
    alpha = alpha - Rational(k);
    beta = beta - Rational(k);
  }

  bool is_normalized() const {
    Rational zero{Int(0)}, one{Int(1)};
    if (alpha == zero) return beta >= zero;
    if (alpha == one) return beta < one;
    return zero < alpha && alpha < one;
  }

  bool operator==(const Marking& o) const { return alpha == o.alpha && beta == o.beta; }
  bool operator<(const Marking& o) const {
    if (alpha != o.alpha) return alpha < o.alpha;
    return beta < o.beta;
  }
  std::string str() const { return "(" + alpha.str() + "," + beta.str() + ")"; }
};

Marking t_map(const Marking& m);
Marking tau(const Marking& m);

enum class CoreType { Elliptic, Parabolic, Hyperbolic };
inline std::string core_type_str(CoreType t) {
  switch (t) {
    case CoreType::Elliptic: return "elliptic";
    case CoreType::Parabolic: return "parabolic";
    default: return "hyperbolic";
  }
}

struct MarkingOrbit {
  std::vector<Marking> markings;  // length d, markings[0] = input
  std::vector<Mobius> etas;       // eta_{beta_k}
  Mobius core;                    // eta_b^{-1} eta_{b1}^{-1} ... eta_{b_{d-1}}^{-1}
  Int trace;                      // real part of the core trace
  CoreType core_type;
  bool core_is_identity = false;  // degenerate elliptic closure, logged

  size_t period() const { return markings.size(); }
  const Rational& beta_at(size_t k) const { return markings[k % markings.size()].beta; }
  const Rational& alpha_at(size_t k) const { return markings[k % markings.size()].alpha; }
};

MarkingOrbit orbit_of(const Marking& m);

// components [beta_k mod 1] of the cyclic modular symbol of the orbit
std::vector<Rational> modular_symbol_of(const MarkingOrbit& o);

}  // namespace apollo
