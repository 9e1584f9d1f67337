#include "apollo/families.hpp"
#include <algorithm>
#include <array>

namespace apollo {

Int FamilyDescriptor::param(const std::string& name) const {
  for (const auto& p : params)
    if (p.first == name) return p.second;
  throw std::invalid_argument("family has no parameter " + name);
}

std::string FamilyDescriptor::params_str() const {
  std::string s;
  for (const auto& p : params) {
    if (!s.empty()) s += ",";
    s += p.first + "=" + p.second.str();
  }
  return s;
}

std::string FamilyDescriptor::str() const {
  std::string s = theorem + " " + std::to_string(index);
  if (theorem == "double_crown" && side == 1) s += "'";
  if (tau_side) s += " tau";
  if (!params.empty()) s += " (" + params_str() + ")";
  return s;
}

namespace {

using Param = std::pair<std::string, Int>;

FamilyDescriptor make(const char* theorem, int index, std::vector<Param> params,
                      int side = 0) {
  FamilyDescriptor f;
  f.theorem = theorem;
  f.index = index;
  f.side = side;
  f.params = std::move(params);
  return f;
}

const Rational kZero{Int(0)}, kOne{Int(1)}, kHalf{Int(1), Int(2)};

// ---- catalogue entry solvers; each matches one normalized marking ----

std::optional<FamilyDescriptor> solve_elliptic(const Marking& x) {
  const Rational &a = x.alpha, &b = x.beta;
  if (a == kZero && b == kZero) return make("elliptic", 1, {});
  if (a == kZero && b.num == 1) return make("elliptic", 2, {{"n", b.den}});
  if (b == kZero && a.num == 1) return make("elliptic", 2, {{"n", a.den}});
  auto e3 = [](const Rational& r) -> std::optional<Int> {
    if (r.num >= 2 && r.den == r.num * r.num - 1) return r.num;
    return std::nullopt;
  };
  if (a == kZero)
    if (auto n = e3(b)) return make("elliptic", 3, {{"n", *n}});
  if (b == kZero)
    if (auto n = e3(a)) return make("elliptic", 3, {{"n", *n}});
  return std::nullopt;
}

std::optional<FamilyDescriptor> solve_parabolic(const Marking& x) {
  const Rational &a = x.alpha, &b = x.beta;
  if (a == kHalf && b == kHalf) return make("parabolic", 1, {});
  auto p2 = [](const Rational& r) -> std::optional<Int> {
    if (r.num < 3 || r.num % 2 == 0) return std::nullopt;
    Int n = (r.num - 1) / 2;
    if (r.den == 2 * n * n + 2 * n) return n;
    return std::nullopt;
  };
  if (a == kZero)
    if (auto n = p2(b)) return make("parabolic", 2, {{"n", *n}});
  if (b == kZero)
    if (auto n = p2(a)) return make("parabolic", 2, {{"n", *n}});
  return std::nullopt;
}

struct MN {
  Int m, n;
};
struct MZ {
  Int m, zeta, n;
};

// x = (mn+1)/(n(nm+2)), m >= 3, n >= 1
std::optional<MN> solve_c3(const Rational& x) {
  if (x.sign() <= 0 || x.is_inf()) return std::nullopt;
  Int p = x.num, q = x.den;
  if (q % (p + 1) != 0) return std::nullopt;
  Int n = q / (p + 1);
  if (n < 1 || (p - 1) % n != 0) return std::nullopt;
  Int m = (p - 1) / n;
  if (m < 3 || p != m * n + 1 || q != n * (n * m + 2)) return std::nullopt;
  return MN{m, n};
}

// x = (mn-1)/(n(nm-2)), m >= 3, n >= 2
std::optional<MN> solve_c4(const Rational& x) {
  if (x.sign() <= 0 || x.is_inf() || x.num <= 1) return std::nullopt;
  Int p = x.num, q = x.den;
  if (q % (p - 1) != 0) return std::nullopt;
  Int n = q / (p - 1);
  if (n < 2 || (p + 1) % n != 0) return std::nullopt;
  Int m = (p + 1) / n;
  if (m < 3 || p != m * n - 1 || q != n * (n * m - 2)) return std::nullopt;
  return MN{m, n};
}

// x = m/(m^2+m*zeta-1), zeta | m^2-1, m >= 2; n = m + (m^2-1)/zeta
std::optional<MZ> solve_c5(const Rational& x) {
  if (x.sign() <= 0 || x.is_inf() || x.num < 2) return std::nullopt;
  Int m = x.num, num = x.den + 1 - m * m;
  if (num <= 0 || num % m != 0) return std::nullopt;
  Int zeta = num / m;
  if ((m * m - 1) % zeta != 0) return std::nullopt;
  return MZ{m, zeta, m + (m * m - 1) / zeta};
}

// x = m/(m*zeta-m^2+1), zeta | m^2-1, zeta*(m-2) >= m^2-1, m >= 3;
// n = m - (m^2-1)/zeta
std::optional<MZ> solve_c6(const Rational& x) {
  if (x.sign() <= 0 || x.is_inf() || x.num < 3) return std::nullopt;
  Int m = x.num, num = x.den - 1 + m * m;
  if (num % m != 0) return std::nullopt;
  Int zeta = num / m;
  if (zeta <= 0 || (m * m - 1) % zeta != 0) return std::nullopt;
  if (zeta * (m - 2) < m * m - 1) return std::nullopt;
  return MZ{m, zeta, m - (m * m - 1) / zeta};
}

// x = m/(m^2-m*zeta-1), zeta | m^2-1, 1 <= zeta <= m-2, m >= 3;
// n = (m^2-1)/zeta - m
std::optional<MZ> solve_c7(const Rational& x) {
  if (x.sign() <= 0 || x.is_inf() || x.num < 3) return std::nullopt;
  Int m = x.num, num = m * m - 1 - x.den;
  if (num <= 0 || num % m != 0) return std::nullopt;
  Int zeta = num / m;
  if (zeta > m - 2 || (m * m - 1) % zeta != 0) return std::nullopt;
  return MZ{m, zeta, (m * m - 1) / zeta - m};
}

// x = (+|-) 2t/(2t^2-1), t >= 2
std::optional<Int> solve_c8(const Rational& x) {
  if (x.is_inf()) return std::nullopt;
  Int p = iabs(x.num);
  if (p % 2 != 0) return std::nullopt;
  Int t = p / 2;
  if (t < 2 || x.den != 2 * t * t - 1) return std::nullopt;
  return t;
}

std::optional<FamilyDescriptor> solve_crown(const Marking& x) {
  const Rational &a = x.alpha, &b = x.beta;
  if (a.num == 1 && b.num == -1)
    return make("crown", 1, {{"m", a.den}, {"n", b.den}});
  if (a.num == 1 && b.num == 1 && a.den >= 2 && b.den >= 2 &&
      !(a.den == 2 && b.den == 2)) {
    Int m = std::min(a.den, b.den), n = std::max(a.den, b.den);
    return make("crown", 2, {{"m", m}, {"n", n}});
  }
  if (a != kZero) return std::nullopt;
  if (auto r = solve_c3(b)) return make("crown", 3, {{"m", r->m}, {"n", r->n}});
  if (auto r = solve_c4(b)) return make("crown", 4, {{"m", r->m}, {"n", r->n}});
  if (auto r = solve_c5(b))
    return make("crown", 5, {{"m", r->m}, {"n", r->n}, {"zeta", r->zeta}});
  if (auto r = solve_c6(b))
    return make("crown", 6, {{"m", r->m}, {"n", r->n}, {"zeta", r->zeta}});
  if (auto r = solve_c7(b))
    return make("crown", 7, {{"m", r->m}, {"n", r->n}, {"zeta", r->zeta}});
  if (auto t = solve_c8(b)) return make("crown", 8, {{"t", *t}});
  return std::nullopt;
}

// entries 5 and 6 of the double-crown catalogue require
// (k^2-n^2)^2 + 4 k^4 n^4 to be a perfect square with n != k; no such pair
// exists with n, k <= 100, so both entries are empty below the search bound
struct GateSolution {
  Int n, k, root;
};

const std::vector<GateSolution>& dc_gate() {
  static const std::vector<GateSolution> sols = [] {
    std::vector<GateSolution> out;
    for (Int n = 2; n <= 100; ++n)
      for (Int k = 2; k <= 100; ++k) {
        if (n == k) continue;  // m = (1+k^2)/k, integral only at k = 1
        Int s = k * k - n * n;
        Int d2 = s * s + 4 * k * k * k * k * n * n * n * n;
        Int root;
        if (is_perfect_square(d2, &root)) out.push_back({n, k, root});
      }
    return out;
  }();
  return sols;
}

Rational dc5_beta(const Int& m, const Int& n) {
  return Rational(n * m * m - m - n, m * m * n * n - n * n - 2 * m * n + 1);
}

Rational dc6_other_beta(const Int& m, const Int& k) {
  return Rational(k * m * m + m - k, m * m * k * k - k * k + 2 * m * k + 1);
}

// the shared parameter of double-crown entries 5 and 6
Int dc56_m(int index, const Int& n, const Int& k) {
  Int s = k * k - n * n, root;
  if (!is_perfect_square(s * s + 4 * k * k * k * k * n * n * n * n, &root))
    throw std::invalid_argument("double-crown entry without integral root");
  Int num, den;
  if (index == 5) {
    num = (k + n) * (k + n) + 2 * k * k * n * n + root;
    den = 2 * k * n * (n + k);
  } else {
    num = (k - n) * (k - n) + 2 * k * k * n * n + root;
    den = 2 * k * n * (n - k);
  }
  if (num % den != 0)
    throw std::invalid_argument("double-crown entry without integral m");
  return num / den;
}

std::optional<FamilyDescriptor> solve_dc56(const Marking& x) {
  for (const auto& g : dc_gate()) {
    const Int &n = g.n, &k = g.k;
    Int num5 = (k + n) * (k + n) + 2 * k * k * n * n + g.root;
    Int den5 = 2 * k * n * (n + k);
    if (num5 % den5 == 0) {
      Int m = num5 / den5;
      if (x == Marking(kZero, dc5_beta(m, n)))
        return make("double_crown", 5, {{"n", n}, {"k", k}}, 0);
      if (x == Marking(kOne, kOne - dc5_beta(m, k)))
        return make("double_crown", 5, {{"n", n}, {"k", k}}, 1);
    }
    if (n > k) {
      Int num6 = (k - n) * (k - n) + 2 * k * k * n * n + g.root;
      Int den6 = 2 * k * n * (n - k);
      if (num6 % den6 == 0) {
        Int m = num6 / den6;
        if (x == Marking(kZero, dc5_beta(m, n)))
          return make("double_crown", 6, {{"n", n}, {"k", k}}, 0);
        if (x == Marking(kZero, dc6_other_beta(m, k)))
          return make("double_crown", 6, {{"n", n}, {"k", k}}, 1);
      }
    }
  }
  return std::nullopt;
}

std::optional<FamilyDescriptor> solve_double_crown(const Marking& x) {
  const Rational &a = x.alpha, &b = x.beta;
  // entry 1: (1/n, (n-1)/n); complementary ((k-1)/k, (2k+1)/k) with k = n-2
  if (a.num == 1 && a.den >= 3 && b.num == a.den - 1 && b.den == a.den)
    return make("double_crown", 1, {{"n", a.den}}, 0);
  if (b.den == a.den && a.num == a.den - 1 && b.num == 2 * a.den + 1)
    return make("double_crown", 1, {{"n", a.den + 2}}, 1);
  // entry 2: one sporadic pair of orbits
  {
    static const std::array<Marking, 6> side0 = {
        Marking(Rational(Int(2), Int(7)), Rational(Int(5), Int(7))),
        Marking(Rational(Int(3), Int(7)), kZero),
        Marking(kZero, Rational(Int(3), Int(7))),
        Marking(Rational(Int(5), Int(7)), Rational(Int(2), Int(7))),
        Marking(Rational(Int(4), Int(7)), kOne),
        Marking(kOne, Rational(Int(4), Int(7)))};
    static const std::array<Marking, 2> side1 = {
        Marking(Rational(Int(1), Int(3)), Rational(Int(8), Int(3))),
        Marking(Rational(Int(2), Int(3)), Rational(Int(-5), Int(3)))};
    for (const auto& s : side0)
      if (x == s) return make("double_crown", 2, {}, 0);
    for (const auto& s : side1)
      if (x == s) return make("double_crown", 2, {}, 1);
  }
  // entry 3: (n/(nm-1), -m/(nm-1)); complementary (1-m/(nm+1), 1-n/(nm+1))
  if (a.sign() > 0 && b.sign() < 0 && a.den == b.den) {
    Int n = a.num, m = -b.num;
    if (m >= 2 && n >= 2 && a.den == n * m - 1)
      return make("double_crown", 3, {{"m", m}, {"n", n}}, 0);
  }
  if (a.sign() > 0 && b.sign() > 0 && a.den == b.den) {
    Int m = a.den - a.num, n = b.den - b.num;
    if (m >= 2 && n >= 2 && a.den == n * m + 1)
      return make("double_crown", 3, {{"m", m}, {"n", n}}, 1);
  }
  // entry 4: ((2n+1)/(4n), -1/n); complementary (n/(n+1), (2n+3)/(4n+4))
  if (b.num == -1) {
    Int n = b.den;
    if (a.num == 2 * n + 1 && a.den == 4 * n)
      return make("double_crown", 4, {{"n", n}}, 0);
  }
  if (a.sign() > 0 && a.den == a.num + 1) {
    Int n = a.num;
    if (b.num == 2 * n + 3 && b.den == 4 * n + 4)
      return make("double_crown", 4, {{"n", n}}, 1);
  }
  return solve_dc56(x);
}

template <class Solver>
std::optional<FamilyDescriptor> scan(const MarkingOrbit& o, Solver solve) {
  for (const auto& mk : o.markings)
    if (auto f = solve(mk)) return f;
  for (const auto& mk : o.markings)
    if (auto f = solve(tau(mk))) {
      f->tau_side = true;
      return f;
    }
  return std::nullopt;
}

template <class Solver>
void scan_all(const MarkingOrbit& o, Solver solve,
              std::vector<FamilyDescriptor>& out) {
  auto add = [&](FamilyDescriptor f) {
    for (const auto& g : out)
      if (g.theorem == f.theorem && g.index == f.index && g.side == f.side &&
          g.params == f.params)
        return;
    out.push_back(std::move(f));
  };
  for (const auto& mk : o.markings) {
    if (auto f = solve(mk)) add(*f);
    if (auto f = solve(tau(mk))) {
      f->tau_side = true;
      add(*f);
    }
  }
}

}  // namespace

std::optional<FamilyDescriptor> match_elliptic(const MarkingOrbit& o) {
  return scan(o, solve_elliptic);
}
std::optional<FamilyDescriptor> match_parabolic(const MarkingOrbit& o) {
  return scan(o, solve_parabolic);
}
std::optional<FamilyDescriptor> match_crown(const MarkingOrbit& o) {
  return scan(o, solve_crown);
}
std::optional<FamilyDescriptor> match_double_crown(const MarkingOrbit& o) {
  return scan(o, solve_double_crown);
}
std::optional<FamilyDescriptor> family_membership(const MarkingOrbit& o) {
  if (auto f = match_elliptic(o)) return f;
  if (auto f = match_parabolic(o)) return f;
  if (auto f = match_crown(o)) return f;
  return match_double_crown(o);
}

std::optional<FamilyDescriptor> match_elliptic(const Marking& m) {
  return match_elliptic(orbit_of(m));
}
std::optional<FamilyDescriptor> match_parabolic(const Marking& m) {
  return match_parabolic(orbit_of(m));
}
std::optional<FamilyDescriptor> match_crown(const Marking& m) {
  return match_crown(orbit_of(m));
}
std::optional<FamilyDescriptor> match_double_crown(const Marking& m) {
  return match_double_crown(orbit_of(m));
}
std::optional<FamilyDescriptor> family_membership(const Marking& m) {
  return family_membership(orbit_of(m));
}

std::vector<FamilyDescriptor> all_matches(const MarkingOrbit& o,
                                          const std::string& theorem) {
  std::vector<FamilyDescriptor> out;
  if (theorem == "elliptic") scan_all(o, solve_elliptic, out);
  else if (theorem == "parabolic") scan_all(o, solve_parabolic, out);
  else if (theorem == "crown") scan_all(o, solve_crown, out);
  else if (theorem == "double_crown") scan_all(o, solve_double_crown, out);
  else throw std::invalid_argument("unknown catalogue " + theorem);
  return out;
}

int elliptic_order(int index) {
  switch (index) {
    case 1: return 3;
    case 2: return 2;
    case 3: return 3;
    default: throw std::invalid_argument("elliptic catalogue has entries 1..3");
  }
}

int family_count(const std::string& theorem) {
  if (theorem == "elliptic") return 3;
  if (theorem == "parabolic") return 2;
  if (theorem == "crown") return 8;
  if (theorem == "double_crown") return 6;
  throw std::invalid_argument("unknown catalogue " + theorem);
}

namespace {

Marking listed_seed(const FamilyDescriptor& f) {
  auto R = [](Int n, Int d) { return Rational(std::move(n), std::move(d)); };
  if (f.theorem == "elliptic") {
    if (f.index == 1) return Marking(kZero, kZero);
    Int n = f.param("n");
    if (f.index == 2) return Marking(kZero, R(1, n));
    return Marking(kZero, R(n, n * n - 1));
  }
  if (f.theorem == "parabolic") {
    if (f.index == 1) return Marking(kHalf, kHalf);
    Int n = f.param("n");
    return Marking(kZero, R(2 * n + 1, 2 * n * n + 2 * n));
  }
  if (f.theorem == "crown") {
    switch (f.index) {
      case 1: return Marking(R(1, f.param("m")), R(-1, f.param("n")));
      case 2: return Marking(R(1, f.param("m")), R(1, f.param("n")));
      case 3: {
        Int m = f.param("m"), n = f.param("n");
        return Marking(kZero, R(m * n + 1, n * (n * m + 2)));
      }
      case 4: {
        Int m = f.param("m"), n = f.param("n");
        return Marking(kZero, R(m * n - 1, n * (n * m - 2)));
      }
      case 5: {
        Int m = f.param("m"), z = f.param("zeta"), n = f.param("n");
        return Marking(R(1, n), R(z + m, m * m + m * z - 1));
      }
      case 6: {
        Int m = f.param("m"), z = f.param("zeta"), n = f.param("n");
        return Marking(R(n - 1, n), kOne - R(z - m, m * z - m * m + 1));
      }
      case 7: {
        Int m = f.param("m"), z = f.param("zeta"), n = f.param("n");
        return Marking(R(n - 1, n), kOne + R(m - z, m * m - m * z - 1));
      }
      case 8: {
        Int t = f.param("t");
        return Marking(kOne - R(t, 2 * t * t - 1), kOne + R(t, 2 * t * t - 1));
      }
    }
    throw std::invalid_argument("crown catalogue has entries 1..8");
  }
  if (f.theorem == "double_crown") {
    switch (f.index) {
      case 1: {
        Int n = f.param("n");
        if (f.side == 0) return Marking(R(1, n), R(n - 1, n));
        Int k = n - 2;
        return Marking(R(k - 1, k), R(2 * k + 1, k));
      }
      case 2:
        return f.side == 0 ? Marking(R(2, 7), R(5, 7)) : Marking(R(1, 3), R(8, 3));
      case 3: {
        Int m = f.param("m"), n = f.param("n");
        if (f.side == 0) return Marking(R(n, n * m - 1), R(-m, n * m - 1));
        return Marking(kOne - R(m, n * m + 1), kOne - R(n, n * m + 1));
      }
      case 4: {
        Int n = f.param("n");
        if (f.side == 0) return Marking(R(2 * n + 1, 4 * n), R(-1, n));
        return Marking(R(n, n + 1), R(2 * n + 3, 4 * n + 4));
      }
      case 5:
      case 6: {
        Int m = dc56_m(f.index, f.param("n"), f.param("k"));
        if (f.side == 0) return Marking(kZero, dc5_beta(m, f.param("n")));
        if (f.index == 5) return Marking(kOne, kOne - dc5_beta(m, f.param("k")));
        return Marking(kZero, dc6_other_beta(m, f.param("k")));
      }
    }
    throw std::invalid_argument("double-crown catalogue has entries 1..6");
  }
  throw std::invalid_argument("unknown catalogue " + f.theorem);
}

}  // namespace

Marking family_seed(const FamilyDescriptor& f) {
  Marking s = listed_seed(f);
  return f.tau_side ? tau(s) : s;
}

FamilyDescriptor complementary_side(const FamilyDescriptor& f) {
  if (f.theorem != "double_crown")
    throw std::invalid_argument("only double crowns have a complementary orbit");
  FamilyDescriptor g = f;
  g.side = 1 - g.side;
  return g;
}

std::vector<Block> family_core_template(const FamilyDescriptor& f) {
  if (f.theorem == "elliptic" || f.theorem == "parabolic") return {};
  WordBuilder wb;
  auto L = [&](int l) {
    if (!f.tau_side || l == 3) return l;
    return 3 - l;  // exchange V1 and V2 on the mirrored side
  };
  auto put = [&](int l, Int e) { wb.append(L(l), std::move(e)); };
  if (f.theorem == "crown") {
    switch (f.index) {
      case 1:
        put(3, f.param("m"));
        put(1, f.param("n"));
        break;
      case 2:
        put(3, 1), put(2, f.param("m") - 2);
        put(3, 1), put(2, f.param("n") - 2);
        break;
      case 3:
        put(3, 1), put(1, f.param("m") - 2);
        break;
      case 4:
        put(3, 1), put(2, f.param("m") - 2);
        break;
      case 5:
        put(3, 1), put(2, f.param("m") - 2);
        put(3, 1), put(2, f.param("m") - 2);
        put(3, 1), put(2, f.param("n") - 2);
        break;
      case 6:
        put(3, 1), put(1, f.param("m") - 2);
        put(3, 1), put(1, f.param("m") - 2);
        put(3, 1), put(1, f.param("n") - 2);
        break;
      case 7:
        put(3, 1), put(2, f.param("m") - 1);
        put(3, 1), put(2, f.param("m") - 1);
        put(3, f.param("n") - 1);
        break;
      case 8: {
        Int t = f.param("t");
        put(2, 2 * t - 1), put(3, 1), put(2, 2 * t - 1);
        put(3, 2 * t - 1), put(2, 1), put(3, 2 * t - 1);
        break;
      }
      default:
        throw std::invalid_argument("crown catalogue has entries 1..8");
    }
    return wb.take();
  }
  switch (f.index) {
    case 1:
      put(3, 1), put(2, f.param("n") - 2);
      put(3, 1), put(1, f.param("n") - 2);
      break;
    case 2:
      put(3, 1), put(2, 1), put(3, 1), put(2, 1);
      put(3, 1), put(1, 1), put(3, 1), put(1, 1);
      break;
    case 3:
      put(2, 1), put(1, f.param("m") - 1), put(3, f.param("n") - 1);
      put(2, 1), put(3, f.param("m") - 1), put(1, f.param("n") - 1);
      break;
    case 4: {
      Int n = f.param("n");
      put(1, n), put(3, 1), put(2, 1), put(3, n - 1), put(2, 1), put(3, 1);
      break;
    }
    case 5:
    case 6: {
      Int m = dc56_m(f.index, f.param("n"), f.param("k"));
      put(1, 1), put(2, m - 2), put(3, 1), put(2, m - 2);
      break;
    }
    default:
      throw std::invalid_argument("double-crown catalogue has entries 1..6");
  }
  return wb.take();
}

bool crown_template_suspect(const FamilyDescriptor& f) {
  return f.theorem == "crown" && f.index == 7;
}

std::vector<FamilyDescriptor> family_instances(const std::string& theorem,
                                               int index, const Int& max_den) {
  std::vector<FamilyDescriptor> out;
  const Int& D = max_den;
  auto push = [&](FamilyDescriptor f) {
    Marking s = family_seed(f);
    if (s.alpha.den <= D && s.beta.den <= D) out.push_back(std::move(f));
  };
  if (theorem == "elliptic") {
    if (index == 1) push(make("elliptic", 1, {}));
    if (index == 2)
      for (Int n = 1; n <= D; ++n) push(make("elliptic", 2, {{"n", n}}));
    if (index == 3)
      for (Int n = 2; n * n - 1 <= D; ++n) push(make("elliptic", 3, {{"n", n}}));
  } else if (theorem == "parabolic") {
    if (index == 1) push(make("parabolic", 1, {}));
    if (index == 2)
      for (Int n = 1; 2 * n * n + 2 * n <= D; ++n)
        push(make("parabolic", 2, {{"n", n}}));
  } else if (theorem == "crown") {
    switch (index) {
      case 1:
        for (Int m = 1; m <= D; ++m)
          for (Int n = 1; n <= D; ++n)
            push(make("crown", 1, {{"m", m}, {"n", n}}));
        break;
      case 2:
        for (Int m = 2; m <= D; ++m)
          for (Int n = m; n <= D; ++n) {
            if (m == 2 && n == 2) continue;
            push(make("crown", 2, {{"m", m}, {"n", n}}));
          }
        break;
      case 3:
        for (Int n = 1; n * (3 * n + 2) <= D; ++n)
          for (Int m = 3; n * (n * m + 2) <= D; ++m)
            push(make("crown", 3, {{"m", m}, {"n", n}}));
        break;
      case 4:
        for (Int n = 2; n * (3 * n - 2) <= D; ++n)
          for (Int m = 3; n * (n * m - 2) <= D; ++m)
            push(make("crown", 4, {{"m", m}, {"n", n}}));
        break;
      case 5:
        for (Int m = 2; m * m + m - 1 <= D; ++m)
          for (Int z = 1; z <= m * m - 1; ++z) {
            if ((m * m - 1) % z != 0) continue;
            Int n = m + (m * m - 1) / z;
            if (m * m + m * z - 1 <= D && n <= D)
              push(make("crown", 5, {{"m", m}, {"n", n}, {"zeta", z}}));
          }
        break;
      case 6:
        for (Int m = 3; m <= D; ++m)
          for (Int z = 1; z <= m * m - 1; ++z) {
            if ((m * m - 1) % z != 0 || z * (m - 2) < m * m - 1) continue;
            Int n = m - (m * m - 1) / z;
            if (m * z - m * m + 1 <= D && n <= D)
              push(make("crown", 6, {{"m", m}, {"n", n}, {"zeta", z}}));
          }
        break;
      case 7:
        for (Int m = 3; 2 * m - 1 <= D; ++m)
          for (Int z = 1; z <= m - 2; ++z) {
            if ((m * m - 1) % z != 0) continue;
            Int n = (m * m - 1) / z - m;
            if (m * m - m * z - 1 <= D && n <= D)
              push(make("crown", 7, {{"m", m}, {"n", n}, {"zeta", z}}));
          }
        break;
      case 8:
        for (Int t = 2; 2 * t * t - 1 <= D; ++t)
          push(make("crown", 8, {{"t", t}}));
        break;
    }
  } else if (theorem == "double_crown") {
    switch (index) {
      case 1:
        for (Int n = 3; n <= D + 2; ++n) {
          push(make("double_crown", 1, {{"n", n}}, 0));
          push(make("double_crown", 1, {{"n", n}}, 1));
        }
        break;
      case 2:
        push(make("double_crown", 2, {}, 0));
        push(make("double_crown", 2, {}, 1));
        break;
      case 3:
        for (Int m = 2; 2 * m - 1 <= D + 1; ++m)
          for (Int n = 2; n * m - 1 <= D + 1; ++n) {
            push(make("double_crown", 3, {{"m", m}, {"n", n}}, 0));
            push(make("double_crown", 3, {{"m", m}, {"n", n}}, 1));
          }
        break;
      case 4:
        for (Int n = 1; n <= D; ++n) {
          push(make("double_crown", 4, {{"n", n}}, 0));
          push(make("double_crown", 4, {{"n", n}}, 1));
        }
        break;
      case 5:
      case 6:
        for (const auto& g : dc_gate()) {
          if (index == 6 && g.n <= g.k) continue;
          Int num, den;
          if (index == 5) {
            num = (g.k + g.n) * (g.k + g.n) + 2 * g.k * g.k * g.n * g.n + g.root;
            den = 2 * g.k * g.n * (g.n + g.k);
          } else {
            num = (g.k - g.n) * (g.k - g.n) + 2 * g.k * g.k * g.n * g.n + g.root;
            den = 2 * g.k * g.n * (g.n - g.k);
          }
          if (num % den != 0) continue;
          push(make("double_crown", index, {{"n", g.n}, {"k", g.k}}, 0));
          push(make("double_crown", index, {{"n", g.n}, {"k", g.k}}, 1));
        }
        break;
    }
  } else {
    throw std::invalid_argument("unknown catalogue " + theorem);
  }
  return out;
}

std::vector<FamilyDescriptor> all_family_instances(const Int& max_den) {
  std::vector<FamilyDescriptor> out;
  for (const char* th : {"elliptic", "parabolic", "crown", "double_crown"})
    for (int i = 1; i <= family_count(th); ++i) {
      auto v = family_instances(th, i, max_den);
      out.insert(out.end(), v.begin(), v.end());
    }
  return out;
}

namespace {

// does p/q in [0,1) appear as a beta value (mod 1) of a listed orbit
bool slope_listed(const Rational& r) {
  Int p = r.num, q = r.den;
  if (p == 0) return true;           // (0, 0) passes through 0
  if (p == 1 || p == q - 1) return true;  // crown 1 gives every 1/m, (n-1)/n
  if (q == p * p - 1 && p >= 2) return true;  // elliptic 3
  if (p % 2 == 1 && p >= 3) {        // parabolic 2
    Int n = (p - 1) / 2;
    if (q == 2 * n * n + 2 * n) return true;
  }
  if (solve_c3(r) || solve_c4(r) || solve_c5(r) || solve_c6(r) || solve_c7(r) ||
      solve_c8(r))
    return true;
  // crown 5 and 7 also pass through (zeta+m)/(m^2+m*zeta-1) resp.
  // (m-zeta)/(m^2-m*zeta-1); both force m = (q+1)/p
  if ((q + 1) % p == 0) {
    Int m = (q + 1) / p;
    Int z5 = p - m, z7 = m - p;
    if (m >= 2 && z5 >= 1 && (m * m - 1) % z5 == 0) return true;
    if (m >= 3 && z7 >= 1 && z7 <= m - 2 && (m * m - 1) % z7 == 0) return true;
  }
  // crown 6 passes through 1 - (zeta-m)/(m*zeta-m^2+1)
  if (q > p && (q - 1) % (q - p) == 0) {
    Int m = (q - 1) / (q - p), z = m + q - p;
    if (m >= 3 && (m * m - 1) % z == 0 && z * (m - 2) >= m * m - 1 &&
        q == m * z - m * m + 1)
      return true;
  }
  // crown 8 passes through t/(2t^2-1) and its 1-complements
  if (q == 2 * p * p - 1 && p >= 2) return true;
  if (q == 2 * (q - p) * (q - p) - 1 && q - p >= 2) return true;
  if ((q - p) % 2 == 0) {
    Int t = (q - p) / 2;
    if (t >= 2 && q == 2 * t * t - 1) return true;
  }
  // double crown 2: denominators 7 and 3
  if (q == 7 && p >= 2 && p <= 5) return true;
  // double crown 3: m/(nm-1), (nm-1-m)/(nm-1), n/(nm+1), (nm+1-n)/(nm+1)
  if ((q + 1) % p == 0 && p >= 2 && (q + 1) / p >= 2) return true;
  if (q > p && (q + 1) % (q - p) == 0 && q - p >= 2 && (q + 1) / (q - p) >= 2)
    return true;
  if ((q - 1) % p == 0 && p >= 2 && (q - 1) / p >= 2) return true;
  if (q > p && (q - 1) % (q - p) == 0 && q - p >= 2 && (q - 1) / (q - p) >= 2)
    return true;
  // double crown 4: (2n+1)/(4n) and (2n+3)/(4n+4)
  if (q % 4 == 0) {
    Int n = q / 4;
    if (n >= 1 && p == 2 * n + 1) return true;
    if (n >= 2 && p == 2 * n + 1) return true;  // (2k+3)/(4k+4) with k = n-1
  }
  // double crowns 5 and 6: empty below the integrality gate
  for (const auto& g : dc_gate()) {
    Int num5 = (g.k + g.n) * (g.k + g.n) + 2 * g.k * g.k * g.n * g.n + g.root;
    if (num5 % (2 * g.k * g.n * (g.n + g.k)) == 0) {
      Int m = num5 / (2 * g.k * g.n * (g.n + g.k));
      if (r == dc5_beta(m, g.n) || r == kOne - dc5_beta(m, g.k)) return true;
    }
    if (g.n <= g.k) continue;
    Int num6 = (g.k - g.n) * (g.k - g.n) + 2 * g.k * g.k * g.n * g.n + g.root;
    if (num6 % (2 * g.k * g.n * (g.n - g.k)) == 0) {
      Int m = num6 / (2 * g.k * g.n * (g.n - g.k));
      if (r == dc5_beta(m, g.n) || r == dc6_other_beta(m, g.k)) return true;
    }
  }
  return false;
}

}  // namespace

bool boundary_slope_in_catalogue(const Rational& r) {
  if (r.is_inf()) return false;
  Rational fr = r - Rational(r.floor());
  if (slope_listed(fr)) return true;
  if (fr.sign() == 0) return false;
  return slope_listed(kOne - fr);
}

}  // namespace apollo
