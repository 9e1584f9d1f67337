#include "apollo/cfrac.hpp"

namespace apollo {

std::string CFWord::classical_str() const {
  std::vector<Int> e = entries;
  if (e.size() >= 2 && e.back() == 1) {
    Int last = e[e.size() - 2] + 1;
    e.pop_back();
    e.back() = last;
  }
  std::string s = "[" + e[0].str();
  for (size_t i = 1; i < e.size(); ++i) s += (i == 1 ? ";" : ",") + e[i].str();
  return s + "]";
}

Int CFWord::classical_length() const {
  std::vector<Int> e = entries;
  if (e.size() >= 2 && e.back() == 1) e.pop_back();
  return Int(e.size()) - 1;
}

CFWord cf_classical(const Rational& b) {
  if (b.is_inf()) throw std::invalid_argument("cf of infinity");
  CFWord w;
  Int p = b.num, q = b.den;
  for (;;) {
    Int a = fdiv(p, q);
    w.entries.push_back(a);
    Int r = p - a * q;
    if (r == 0) break;
    p = q;
    q = r;
  }
  return w;
}

CFWord cf_expand_any(const Rational& b) {
  CFWord w = cf_classical(b);
  if (w.entries.size() == 1) {
    Int a0 = w.entries[0];
    if (a0 == 0) return w;
    w.entries = {a0 - 1, 1};
    return w;
  }
  Int last = w.entries.back();
  w.entries.back() = last - 1;
  w.entries.push_back(1);
  if (w.entries[w.entries.size() - 2] == 0) {
    // only possible when the classical word ended ...,1 which it never does
    throw std::logic_error("cf normalization produced a zero entry");
  }
  return w;
}

CFWord cf_expand(const Rational& b) {
  if (b.sign() < 0) throw std::invalid_argument("cf_expand requires b >= 0");
  return cf_expand_any(b);
}

}  // namespace apollo
