#pragma once
#include "apollo/gasket.hpp"
#include "apollo/quadext.hpp"

namespace apollo {

// finite cutting sequence of a gasket rational, based at the imaginary axis
GasketWord cutting_sequence_rational(const GaussianRational& z);

// exact attracting fixed point of a hyperbolic unit-determinant matrix,
// after unit normalization to a real trace; coordinates live in Q(sqrt(delta))
struct FixedPointData {
  QuadPoint z;        // attracting fixed point
  QuadPoint z_other;  // repelling fixed point
  Int delta;          // tr^2 - 4 det of the normalized representative
  Mobius normalized;  // real-trace representative
};
FixedPointData hyperbolic_fixed_points(const Mobius& g);

// eventually periodic word of the attracting fixed point; finite for parabolic g
GasketWord cutting_sequence_fixed_point(const Mobius& g);

struct Approximant {
  int index;
  GaussianRational z;
  GaussianInt q;        // denominator of z
  Rational cell_bound;  // circumdiameter of the enclosing block cell; inf = line
};

// block-wise approximants z_j, anchored by the letter of block j+1
std::vector<Approximant> approximants(const GasketWord& word, int count);

// true when |z - z_j| < 2/|q_j q_{j+1}| holds, certified by interval arithmetic
// refined up to max_bits, falling back to an exact field computation
bool dirichlet_bound_holds(const QuadPoint& z, const Approximant& aj,
                           const Approximant& aj1, unsigned max_bits = 256);

// word rewriting for the order-2 symmetry J(z) = -z - i; word must start
// V1^{a0} V2 ... or V1^{a0} V3 ... with the V1 exponent exactly a0 (negative
// a0 encodes the V1^{-t} prefix)
GasketWord substitute_J(const GasketWord& word, const Int& a0);

bool same_orbit(const GasketWord& w1, const GasketWord& w2);

// tail uses at most two distinct letters; single-letter tails set *degenerate
bool on_boundary(const GasketWord& word, bool* degenerate = nullptr);

}  // namespace apollo
