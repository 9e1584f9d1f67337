#pragma once
#include "apollo/circle.hpp"
#include "apollo/words.hpp"
#include <optional>
#include <vector>

namespace apollo {

struct ApolloError : std::runtime_error {
  std::string code;
  ApolloError(std::string code_, const std::string& what_)
      : std::runtime_error(code_ + ": " + what_), code(std::move(code_)) {}
};

// pair of tangent gasket points presented as columns of a determinant-1 matrix
// over Z[i] with re(conj(q)*s) >= 0 and im(conj(q)*s) >= 0, fixed up to sign
struct FareyQuadruple {
  GaussianInt p, q, r, s;  // z = p/q, z2 = r/s, p*s - q*r = 1

  GaussianInt det() const { return p * s - q * r; }
  GaussianRational first() const { return GaussianRational(p, q); }
  GaussianRational second() const { return GaussianRational(r, s); }
  // image of -i under the matrix: the third vertex of the positively oriented cell
  GaussianRational third_vertex() const {
    return GaussianRational(GaussianInt{0, -1} * p + r, GaussianInt{0, -1} * q + s);
  }
  // diameter of the circle through the three vertices; nullopt when they are collinear
  std::optional<Rational> circumdiameter() const {
    GaussianInt t = q.conj() * s;
    if (t.re == 0) return std::nullopt;
    return Rational(1, t.re);
  }
};

// presentation of a tangent pair; throws NotFareyNeighbors / NotPresentable
FareyQuadruple positively_present(const GaussianRational& z, const GaussianRational& z2);

// real Farey parents: p/q < g < r/s with p*s - q*r = -1 (integer conventions:
// g > 0 integer gives (g-1, +inf); g <= 0 integer gives (-inf, g+1))
struct RealQuadruple {
  Int p, q, r, s;  // p*s - q*r = -1
  Rational left() const { return q == 0 ? Rational::neg_inf() : Rational(p, q); }
  Rational right() const { return s == 0 ? Rational::inf() : Rational(r, s); }
};
RealQuadruple quadruple_of(const Rational& g);
std::pair<Rational, Rational> farey_neighbors_real(const Rational& g);

// involution q/(q+s) built from the quadruple
Rational iota(const Rational& b);

// determinant-1 map sending b to infinity, {y=0} to {y=-1} and the circle over
// the Farey interval of b to {y=0}
Mobius eta_of(const Rational& b);

// triadic subdivision: one descent step. child index k means z lies in D_{V_k}.
// exactly-one membership recurses; two memberships happen only at cell vertices.
struct DescentStep {
  int child;        // 1, 2, 3
  bool at_vertex;   // z is the shared vertex of two child cells
};

// full descent of a gasket rational. word satisfies z = (word) * base_vertex.
struct Descent {
  GasketWord word;                 // finite cutting word
  GaussianRational base_vertex;    // inf, 0 or -i
};
Descent rational_descent(const GaussianRational& z);
bool is_gasket_rational(const GaussianRational& z);

// the two gasket circles through a tangency point
std::pair<Circle, Circle> circles_through_vertex(const GaussianRational& z);

// all gasket circles within the given word-length depth, deterministic order
std::vector<Circle> gasket_circles(int depth);

// vertices of cell A_w: labels V1 -> w*inf, V2 -> w*0, V3 -> w*(-i)
struct Cell {
  GaussianRational v1, v2, v3;
};
Cell cell_of(const Mobius& w);

}  // namespace apollo
