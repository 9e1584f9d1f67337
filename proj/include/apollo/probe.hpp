#pragma once
#include "apollo/coreword.hpp"

namespace apollo {

// one circle crossed by the marked line, with the parameter interval inside
struct ProbeCrossing {
  Circle circle;
  Rational u_in, u_out;
  bool tangency_exit = false;  // exit point is a gasket tangency
};

struct ProbeResult {
  bool double_crown = false;
  std::optional<Marking> complementary;  // set when double_crown
  std::vector<ProbeCrossing> crossings;
  std::string note;  // where rationality failed, for reports
};

// walks the marked line from beta to its core-element translate, one circle
// at a time; every crossing is tested exactly for rationality. a complete
// tangency chain certifies the double crown and reads the complementary
// marking at the first crossing; any irrational crossing refutes it.
// requires a hyperbolic orbit whose tail uses all three letters.
ProbeResult inside_probe(const MarkingOrbit& o, const CoreWord& w);

// complementary disc of the gasket whose interior contains z; throws
// OnGasket when z lies on the closure of the circle configuration
Circle hole_containing(const GaussianRational& z);

}  // namespace apollo
