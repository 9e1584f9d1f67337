#include "apollo/gaussian.hpp"

namespace apollo {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  size_t b = s.find_last_not_of(" \t");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

Int parse_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  return Int(s);
}

// "re+im*i" where im carries its own sign, e.g. "3+-4*i"; bare "re" also accepted
GaussianInt parse_gaussian_int(const std::string& raw) {
  std::string s = strip(raw);
  size_t star = s.find("*i");
  if (star == std::string::npos) return GaussianInt{parse_int(s), 0};
  std::string head = s.substr(0, star);
  size_t sep = std::string::npos;
  for (size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' && (isdigit(head[i - 1]) != 0)) { sep = i; break; }
  }
  if (sep == std::string::npos) throw std::invalid_argument("bad gaussian integer: " + raw);
  return GaussianInt{parse_int(head.substr(0, sep)), parse_int(head.substr(sep + 1))};
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string s = strip(raw);
  if (s == "inf") return Rational::inf();
  if (s == "-inf") return Rational::neg_inf();
  size_t slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

GaussianRational parse_point(const std::string& raw) {
  std::string s = strip(raw);
  if (s == "inf") return GaussianRational::inf();
  size_t comma = s.find(',');
  if (comma != std::string::npos) {
    Rational x = parse_rational(s.substr(0, comma));
    Rational y = parse_rational(s.substr(comma + 1));
    return GaussianRational::from_parts(x, y);
  }
  if (s.find('i') != std::string::npos) {
    size_t slash = s.find("*i/");
    if (slash == std::string::npos) {
      return GaussianRational(parse_gaussian_int(s), GaussianInt{1, 0});
    }
    std::string num = s.substr(0, slash + 2);
    std::string den = s.substr(slash + 3);
    return GaussianRational(parse_gaussian_int(num), parse_gaussian_int(den));
  }
  Rational r = parse_rational(s);
  return GaussianRational(GaussianInt{r.num, 0}, GaussianInt{r.den, 0});
}

}  // namespace apollo
