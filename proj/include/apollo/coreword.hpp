#pragma once
#include "apollo/marking.hpp"
#include "apollo/cfrac.hpp"

namespace apollo {

// alternating-block word of a rational b >= 0: continued fraction in normal
// form with the final 1 dropped, entries becoming exponents of V1, V2, V1, ...
// in turn. throws std::invalid_argument below 0 and at infinity.
std::vector<Block> w_of(const Rational& b);

// companion word w(-1/b), w(b/(1-b)) or w(b-1); undefined at 0, 1 and infinity
std::vector<Block> w_tilde(const Rational& b);

// rendering "V1^-2 V2^3 V1" used in traces
std::string blocks_str(Int lead, const std::vector<Block>& bs);

struct AlgorithmStep {
  size_t k;                    // loop index (0 for the branch-2 row)
  std::string branch;          // "2(a)".."2(f)", "4(a)".."4(c)"
  std::string marking;         // T^k of the start marking
  std::string assignment;      // e.g. "V2,V3,V1"
  std::string cf_display;      // e.g. "beta_3: -1/beta=[3;4]"
  std::string fragment;        // blocks appended to c or w at this step
};

struct CoreWord {
  MarkingOrbit orbit;          // orbit of the start marking actually used
  size_t restart_shift = 0;    // T-power applied to the input before success
  int wraps = 1;               // orbit periods w spans; 3 when one period ends
                               // with the letter assignment rotated
  Int lead;                    // t in the V1^{-t} prefix of the conjugator
  std::vector<Block> c_blocks; // conjugator c after the prefix
  std::vector<Block> w_blocks; // periodic part w as produced by the run
  GasketWord word;             // canonical form of c * w^infinity
  Mobius element;              // c * mat(w) * c^{-1}
  std::vector<AlgorithmStep> steps;
  std::vector<std::string> notes;

  CoreType type() const { return orbit.core_type; }
};

// cutting word of the fixed point attached to a marking. throws
// ApolloError("EllipticInput") when the orbit core has finite order and
// ApolloError("InternalInconsistency") when no rotation of the orbit admits
// non-degenerate fragments or the result disagrees with the orbit core.
CoreWord run_algorithm(const Marking& m);
CoreWord run_algorithm(const MarkingOrbit& orbit);

}  // namespace apollo
