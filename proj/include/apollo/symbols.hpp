#pragma once
#include "apollo/marking.hpp"
#include "apollo/words.hpp"
#include <optional>

namespace apollo {

// formal product of components [r] with r in [0,1); [r] stands for the
// geodesic {infinity, r}. cyclic symbols compare up to rotation.
struct ModularSymbol {
  std::vector<Rational> components;
  bool cyclic = false;

  size_t degree() const { return components.size(); }
  bool operator==(const ModularSymbol& o) const;
  std::string str() const;  // "[1/3]*[0]"
};

ModularSymbol symbol_of_rational(const Rational& r);
ModularSymbol symbol_of_orbit(const MarkingOrbit& orbit);  // cyclic, one [beta] per marking

// entry list <a1,...,ak> with some entries sent to infinity; finite entries
// must be >= 1 past position 0. cyclic lists wrap around.
struct LimitExpression {
  std::vector<std::optional<Int>> entries;  // nullopt marks an infinite entry
  bool cyclic = false;
  std::string str() const;  // "<2,inf,3>"
};

// continued fraction entries <a1..ak> of r mod 1, value [0; a1..ak]; <> for 0
std::vector<Int> component_entries(const Rational& r);
Rational component_value(const std::vector<Int>& entries);

// split at infinite entries, each maximal finite run becomes one component;
// a linear list with j infinities yields j+1 components, a cyclic one j.
// without infinities the list itself is the single component
ModularSymbol take_limit(const LimitExpression& e);

// periodic word with starred (unbounded) blocks: segments between stars are
// read as run-length entries and become one component each
ModularSymbol word_limit(const std::vector<Block>& tail, const std::vector<bool>& starred);

// per-component continued fraction lengths, the cusp excursion counts
std::vector<Int> excursions(const ModularSymbol& s);

struct ClosureItem {
  std::string family;     // descriptor of the instance family
  std::string direction;  // which parameters grow
  std::string detail;     // limit symbol, or the reason a check failed
  bool ok = true;
};

struct ClosureReport {
  std::vector<ClosureItem> items;
  int families = 0;    // catalogue families visited
  int directions = 0;  // parameter directions checked
  int failures = 0;
  std::string str() const;
};

// every unbounded parameter direction of every catalogue family: the orbit
// symbol components must limit to boundary slopes of listed planes
ClosureReport verify_closure();

}  // namespace apollo
