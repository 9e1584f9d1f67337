#pragma once
#include "apollo/coreword.hpp"
#include "apollo/families.hpp"
#include "apollo/probe.hpp"
#include <functional>
#include <map>

namespace apollo {

enum class PlaneKind { Elliptic, Parabolic, SingleCrown, DoubleCrown, NonElementary };
std::string plane_kind_str(PlaneKind k);

// full type decision for the plane of a marking. family is the catalogue
// entry whose theorem agrees with the kind, when one matches.
struct Classification {
  PlaneKind kind = PlaneKind::NonElementary;
  std::optional<FamilyDescriptor> family;
  std::optional<GasketWord> core_word;   // hyperbolic kinds
  std::optional<Marking> complementary;  // DoubleCrown only
};

Classification classify(const Marking& m);
Classification classify(const MarkingOrbit& o);

// size and area data of an elementary plane. cf_lengths holds the classical
// continued-fraction lengths of alpha then beta for each orbit marking.
// spike_counts: crown spikes per side; polygon sides for elliptic; puncture
// ring length for parabolic.
struct ComplexityReport {
  std::vector<Int> cf_lengths;
  int reduced_length = 0;
  std::vector<size_t> spike_counts;
  Int area_over_pi{0};

  Int cf_max() const;
  std::string str() const;
};

ComplexityReport complexity_report(const Classification& c, const MarkingOrbit& o);

// census line for one orbit-and-mirror class, keyed by its least eligible
// marking
struct CensusRow {
  Marking rep;
  size_t period = 0;
  Classification cls;
  std::optional<ComplexityReport> complexity;  // elementary kinds

  std::string csv_line() const;
  static std::string csv_header();
};

using RowSink = std::function<void(const CensusRow&)>;

// aggregate census over normalized markings with both denominators at most
// max_den and beta in [beta_lo, beta_hi); one row per T-orbit-and-mirror
// class, represented by its least member within the same grid
struct EnumReport {
  Int max_den{0};
  Int beta_lo{0}, beta_hi{0};
  unsigned long long scanned = 0;  // grid markings visited
  unsigned long long classes = 0;  // rows emitted
  std::map<std::string, unsigned long long> kind_counts;
  std::map<std::string, unsigned long long> family_counts;
  std::vector<std::string> discrepancies;

  std::string summary() const;
};

// classify every class in the grid and check the catalogue theorems against
// the computed kinds; disagreements become report items, never aborts. rows
// stream to the sink in marking order. threads = 0 picks the hardware count.
EnumReport enumerate_and_verify(const Int& max_den, const RowSink& sink = {},
                                unsigned threads = 0);

// integer solutions of (k^2-n^2)^2 + 4k^4n^4 = t^2 with 1 <= n,k <= bound;
// the diagonal n = k always solves it and is flagged
struct GateSolution {
  Int n, k, t;
  bool trivial = false;
};
std::vector<GateSolution> conjecture_a_search(const Int& bound);

}  // namespace apollo
