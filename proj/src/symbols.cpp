#include "apollo/symbols.hpp"
#include "apollo/cfrac.hpp"
#include "apollo/families.hpp"
#include <functional>
#include <sstream>

namespace apollo {

bool ModularSymbol::operator==(const ModularSymbol& o) const {
  if (cyclic != o.cyclic) return false;
  if (components.size() != o.components.size()) return false;
  if (!cyclic) return components == o.components;
  size_t n = components.size();
  for (size_t r = 0; r < n; ++r) {
    bool all = true;
    for (size_t i = 0; i < n && all; ++i) all = components[(i + r) % n] == o.components[i];
    if (all) return true;
  }
  return false;
}

std::string ModularSymbol::str() const {
  std::string s;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) s += "*";
    s += "[" + components[i].str() + "]";
  }
  return s;
}

static Rational mod_one(const Rational& r) { return r - Rational(r.floor()); }

ModularSymbol symbol_of_rational(const Rational& r) {
  if (r.is_inf()) throw std::invalid_argument("component must be finite");
  return {{mod_one(r)}, false};
}

ModularSymbol symbol_of_orbit(const MarkingOrbit& orbit) {
  return {modular_symbol_of(orbit), true};
}

std::string LimitExpression::str() const {
  std::string s = "<";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ",";
    s += entries[i] ? entries[i]->str() : "inf";
  }
  return s + ">";
}

std::vector<Int> component_entries(const Rational& r) {
  if (r.is_inf()) throw std::invalid_argument("component must be finite");
  CFWord w = cf_classical(mod_one(r));
  // a0 = 0 for values in [0,1); the component entries are a1..ak
  std::vector<Int> out(w.entries.begin() + 1, w.entries.end());
  return out;
}

Rational component_value(const std::vector<Int>& entries) {
  CFWord w;
  w.entries.push_back(Int(0));
  w.entries.insert(w.entries.end(), entries.begin(), entries.end());
  return mod_one(w.value());
}

static void check_entries(const LimitExpression& e) {
  for (size_t i = 1; i < e.entries.size(); ++i)
    if (e.entries[i] && *e.entries[i] < 1)
      throw std::invalid_argument("finite entries past position 0 must be >= 1");
}

ModularSymbol take_limit(const LimitExpression& e) {
  check_entries(e);
  std::vector<size_t> stars;
  for (size_t i = 0; i < e.entries.size(); ++i)
    if (!e.entries[i]) stars.push_back(i);

  ModularSymbol s;
  if (stars.empty()) {
    if (e.cyclic)
      throw std::invalid_argument("cyclic expression without infinite entries has no limit");
    std::vector<Int> seg;
    for (const auto& a : e.entries) seg.push_back(*a);
    s.components.push_back(component_value(seg));
    return s;
  }

  if (!e.cyclic) {
    size_t prev = 0;
    for (size_t st : stars) {
      std::vector<Int> seg;
      for (size_t i = prev; i < st; ++i) seg.push_back(*e.entries[i]);
      s.components.push_back(component_value(seg));
      prev = st + 1;
    }
    std::vector<Int> seg;
    for (size_t i = prev; i < e.entries.size(); ++i) seg.push_back(*e.entries[i]);
    s.components.push_back(component_value(seg));
    return s;
  }

  // cyclic: one component per star, the run following it up to the next star
  size_t n = e.entries.size();
  for (size_t j = 0; j < stars.size(); ++j) {
    size_t from = stars[j] + 1;
    size_t to = stars[(j + 1) % stars.size()];
    std::vector<Int> seg;
    for (size_t i = from; i % n != to; ++i) seg.push_back(*e.entries[i % n]);
    s.components.push_back(component_value(seg));
  }
  return s;
}

ModularSymbol word_limit(const std::vector<Block>& tail, const std::vector<bool>& starred) {
  if (tail.size() != starred.size()) throw std::invalid_argument("one star flag per block");
  LimitExpression e;
  e.cyclic = true;
  for (size_t i = 0; i < tail.size(); ++i)
    e.entries.push_back(starred[i] ? std::optional<Int>() : std::optional<Int>(tail[i].exp));
  return take_limit(e);
}

std::vector<Int> excursions(const ModularSymbol& s) {
  std::vector<Int> out;
  for (const Rational& r : s.components) out.push_back(Int(component_entries(r).size()));
  return out;
}

std::string ClosureReport::str() const {
  std::ostringstream os;
  for (const auto& it : items)
    os << (it.ok ? "ok   " : "FAIL ") << it.family << "  " << it.direction << "  " << it.detail
       << "\n";
  os << "families " << families << ", directions " << directions << ", failures " << failures;
  return os.str();
}

namespace {

struct Direction {
  std::string family;
  std::string name;
  std::function<FamilyDescriptor(const Int&)> at;
};

FamilyDescriptor fd(std::string th, int idx, std::vector<std::pair<std::string, Int>> ps,
                    int side = 0) {
  FamilyDescriptor d;
  d.theorem = std::move(th);
  d.index = idx;
  d.side = side;
  d.params = std::move(ps);
  return d;
}

std::vector<Direction> closure_directions() {
  std::vector<Direction> dirs;
  auto add = [&](std::string fam, std::string name,
                 std::function<FamilyDescriptor(const Int&)> at) {
    dirs.push_back({std::move(fam), std::move(name), std::move(at)});
  };

  add("elliptic 2", "n->inf", [](const Int& p) { return fd("elliptic", 2, {{"n", p}}); });
  add("elliptic 3", "n->inf", [](const Int& p) { return fd("elliptic", 3, {{"n", p}}); });
  add("parabolic 2", "n->inf", [](const Int& p) { return fd("parabolic", 2, {{"n", p}}); });

  add("crown 1", "m->inf", [](const Int& p) { return fd("crown", 1, {{"m", p}, {"n", 2}}); });
  add("crown 1", "n->inf", [](const Int& p) { return fd("crown", 1, {{"m", 2}, {"n", p}}); });
  add("crown 1", "m,n->inf", [](const Int& p) { return fd("crown", 1, {{"m", p}, {"n", p}}); });

  add("crown 2", "n->inf", [](const Int& p) { return fd("crown", 2, {{"m", 2}, {"n", p}}); });
  add("crown 2", "m,n->inf", [](const Int& p) { return fd("crown", 2, {{"m", p}, {"n", p}}); });
  add("crown 2", "m,n->inf skew",
      [](const Int& p) { return fd("crown", 2, {{"m", p}, {"n", p + 1}}); });

  add("crown 3", "m->inf", [](const Int& p) { return fd("crown", 3, {{"m", p}, {"n", 1}}); });
  add("crown 3", "n->inf", [](const Int& p) { return fd("crown", 3, {{"m", 3}, {"n", p}}); });
  add("crown 3", "m,n->inf", [](const Int& p) { return fd("crown", 3, {{"m", p}, {"n", p}}); });

  add("crown 4", "m->inf", [](const Int& p) { return fd("crown", 4, {{"m", p}, {"n", 2}}); });
  add("crown 4", "n->inf", [](const Int& p) { return fd("crown", 4, {{"m", 3}, {"n", p}}); });
  add("crown 4", "m,n->inf", [](const Int& p) { return fd("crown", 4, {{"m", p}, {"n", p}}); });

  add("crown 5", "m->inf zeta=1", [](const Int& p) {
    return fd("crown", 5, {{"m", p}, {"zeta", 1}, {"n", p * p + p - 1}});
  });
  add("crown 5", "m->inf zeta=m-1", [](const Int& p) {
    return fd("crown", 5, {{"m", p}, {"zeta", p - 1}, {"n", 2 * p + 1}});
  });
  add("crown 5", "m->inf zeta=m+1", [](const Int& p) {
    return fd("crown", 5, {{"m", p}, {"zeta", p + 1}, {"n", 2 * p - 1}});
  });
  add("crown 5", "m->inf zeta=m^2-1", [](const Int& p) {
    return fd("crown", 5, {{"m", p}, {"zeta", p * p - 1}, {"n", p + 1}});
  });

  add("crown 6", "m->inf zeta=m^2-1", [](const Int& p) {
    return fd("crown", 6, {{"m", p}, {"zeta", p * p - 1}, {"n", p - 1}});
  });
  add("crown 6", "m->inf zeta=(m^2-1)/2", [](const Int& p) {
    return fd("crown", 6, {{"m", p}, {"zeta", (p * p - 1) / 2}, {"n", p - 2}});
  });

  add("crown 7", "m->inf zeta=1", [](const Int& p) {
    return fd("crown", 7, {{"m", p}, {"zeta", 1}, {"n", p * p - p - 1}});
  });
  add("crown 7", "m->inf zeta=(m-1)/2", [](const Int& p) {
    return fd("crown", 7, {{"m", p}, {"zeta", (p - 1) / 2}, {"n", p + 2}});
  });

  add("crown 8", "t->inf", [](const Int& p) { return fd("crown", 8, {{"t", p}}); });

  for (int side = 0; side < 2; ++side) {
    std::string tick = side ? " side 1" : "";
    add("double crown 1", "n->inf" + tick,
        [side](const Int& p) { return fd("double_crown", 1, {{"n", p}}, side); });
    add("double crown 3", "m->inf" + tick,
        [side](const Int& p) { return fd("double_crown", 3, {{"m", p}, {"n", 2}}, side); });
    add("double crown 3", "n->inf" + tick,
        [side](const Int& p) { return fd("double_crown", 3, {{"m", 2}, {"n", p}}, side); });
    add("double crown 3", "m,n->inf" + tick,
        [side](const Int& p) { return fd("double_crown", 3, {{"m", p}, {"n", p}}, side); });
    add("double crown 4", "n->inf" + tick,
        [side](const Int& p) { return fd("double_crown", 4, {{"n", p}}, side); });
  }
  return dirs;
}

}  // namespace

ClosureReport verify_closure() {
  ClosureReport rep;
  rep.families = family_count("elliptic") + family_count("parabolic") + family_count("crown") +
                 family_count("double_crown");

  const std::vector<Int> scales = {Int(25), Int(45), Int(65)};
  for (const Direction& dir : closure_directions()) {
    rep.directions += 1;
    ClosureItem item{dir.family, dir.name, "", true};

    std::vector<std::vector<Rational>> comps;  // per scale
    for (const Int& p : scales) comps.push_back(modular_symbol_of(orbit_of(family_seed(dir.at(p)))));

    size_t period = comps[0].size();
    for (const auto& c : comps)
      if (c.size() != period) {
        item.ok = false;
        item.detail = "orbit period varies with the parameters";
      }

    if (item.ok) {
      std::string detail;
      for (size_t i = 0; i < period && item.ok; ++i) {
        std::vector<std::vector<Int>> ent;
        for (const auto& c : comps) ent.push_back(component_entries(c[i]));
        size_t len = ent[0].size();
        if (ent[1].size() != len || ent[2].size() != len) {
          item.ok = false;
          item.detail = "entry pattern does not stabilize on component " + std::to_string(i);
          break;
        }
        LimitExpression e;
        for (size_t k = 0; k < len && item.ok; ++k) {
          if (ent[0][k] == ent[1][k] && ent[1][k] == ent[2][k]) {
            e.entries.push_back(ent[0][k]);
          } else if (ent[0][k] < ent[1][k] && ent[1][k] < ent[2][k]) {
            e.entries.push_back(std::nullopt);
          } else {
            item.ok = false;
            item.detail = "entry " + std::to_string(k) + " of component " + std::to_string(i) +
                          " is neither constant nor growing";
          }
        }
        if (!item.ok) break;
        ModularSymbol lim = take_limit(e);
        for (const Rational& v : lim.components)
          if (!boundary_slope_in_catalogue(v)) {
            item.ok = false;
            item.detail = "limit component [" + v.str() + "] is not a listed boundary slope";
          }
        if (item.ok) {
          if (!detail.empty()) detail += "; ";
          detail += e.str() + " -> " + lim.str();
        }
      }
      if (item.ok) item.detail = detail;
    }

    if (!item.ok) rep.failures += 1;
    rep.items.push_back(std::move(item));
  }

  for (const char* fam : {"elliptic 1", "parabolic 1", "double crown 2"})
    rep.items.push_back({fam, "none", "no unbounded parameters", true});
  for (const char* fam : {"double crown 5", "double crown 6"})
    rep.items.push_back({fam, "none", "no instances below the parameter gate", true});
  return rep;
}

}  // namespace apollo
