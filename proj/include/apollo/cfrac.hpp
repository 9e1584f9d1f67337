#pragma once
#include "apollo/gaussian.hpp"
#include <vector>

namespace apollo {

// continued fraction word [a0; a1, ..., ak], partial quotients a1.. >= 1.
// normal form ends in 1 (with k >= 1), except the single-entry word [0].
struct CFWord {
  std::vector<Int> entries;

  bool operator==(const CFWord& o) const { return entries == o.entries; }
  size_t size() const { return entries.size(); }
  bool is_normalized() const {
    if (entries.size() == 1) return entries[0] == 0;
    return entries.size() >= 2 && entries.back() == 1;
  }

  Rational value() const {
    Rational v = Rational::inf();
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
      if (v.is_inf()) v = Rational(*it);
      else v = Rational(*it) + Rational(v.den, v.num);
    }
    return v;
  }

  // classical display with last entry >= 2 (or a single entry), e.g. "[0;2,1,1,2]"
  std::string classical_str() const;
  // number of partial quotients a1..ak of the classical form
  Int classical_length() const;
};

// classical expansion, last partial quotient >= 2 when k >= 1; b finite
CFWord cf_classical(const Rational& b);

// normal form ending in 1 (or [0]); requires b >= 0 and finite
CFWord cf_expand(const Rational& b);

// normal form allowing any integer a0 (internal use for negative inputs)
CFWord cf_expand_any(const Rational& b);

}  // namespace apollo
