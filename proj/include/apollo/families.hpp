#pragma once
#include "apollo/marking.hpp"
#include "apollo/words.hpp"
#include <optional>

namespace apollo {

// membership record for the elementary-surface catalogues. theorem names the
// catalogue ("elliptic", "parabolic", "crown", "double_crown"), index the
// entry within it (1-based). side selects the orbit for double crowns
// (0 = listed, 1 = complementary); tau_side is set when the match went
// through (1-a, 1-b). params holds the named integers in order m, n, k,
// zeta, t as applicable.
struct FamilyDescriptor {
  std::string theorem;
  int index = 0;
  int side = 0;
  bool tau_side = false;
  std::vector<std::pair<std::string, Int>> params;

  Int param(const std::string& name) const;
  std::string params_str() const;  // "m=3,n=2"
  std::string str() const;         // "crown 3 (m=3,n=2)"
};

// catalogue membership of a marking, scanning its T-orbit and the orbit of
// (1-a, 1-b). nullopt means the marking is in no listed orbit.
std::optional<FamilyDescriptor> match_elliptic(const Marking& m);
std::optional<FamilyDescriptor> match_parabolic(const Marking& m);
std::optional<FamilyDescriptor> match_crown(const Marking& m);
std::optional<FamilyDescriptor> match_double_crown(const Marking& m);
std::optional<FamilyDescriptor> family_membership(const Marking& m);

// orbit-scanning variants reusing a precomputed orbit of m
std::optional<FamilyDescriptor> match_elliptic(const MarkingOrbit& o);
std::optional<FamilyDescriptor> match_parabolic(const MarkingOrbit& o);
std::optional<FamilyDescriptor> match_crown(const MarkingOrbit& o);
std::optional<FamilyDescriptor> match_double_crown(const MarkingOrbit& o);
std::optional<FamilyDescriptor> family_membership(const MarkingOrbit& o);

// every catalogue match across the orbit and its mirror, deduplicated by
// entry, side and parameters; memberships are expected to be unambiguous
std::vector<FamilyDescriptor> all_matches(const MarkingOrbit& o,
                                          const std::string& theorem);

// rotation order of the core of an elliptic catalogue entry (3, 2, 3)
int elliptic_order(int index);

// first marking of the listed orbit selected by a descriptor (side and
// tau_side applied)
Marking family_seed(const FamilyDescriptor& f);

// descriptor of the complementary double-crown orbit
FamilyDescriptor complementary_side(const FamilyDescriptor& f);

// published core word of a crown or double-crown entry, before canonical
// reduction. tau_side exchanges V1 and V2. entry 7 of the crown catalogue is
// reproduced as printed even though it fails its own trace check; compare
// against computed words informationally there.
std::vector<Block> family_core_template(const FamilyDescriptor& f);
bool crown_template_suspect(const FamilyDescriptor& f);

// all catalogue instances of one entry whose seed marking has both
// denominators at most max_den; side 0 and 1 for double crowns
std::vector<FamilyDescriptor> family_instances(const std::string& theorem,
                                               int index, const Int& max_den);
std::vector<FamilyDescriptor> all_family_instances(const Int& max_den);

// catalogue entry counts: elliptic, parabolic, crown, double_crown
int family_count(const std::string& theorem);

// true when [r] (taken mod 1) appears as a beta value in some catalogue
// orbit or its (1-a, 1-b) mirror; these are the boundary slopes of
// elementary planes
bool boundary_slope_in_catalogue(const Rational& r);

}  // namespace apollo
