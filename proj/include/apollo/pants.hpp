#pragma once
#include "apollo/marking.hpp"
#include "apollo/words.hpp"

namespace apollo {

// boundary monodromies of the pair-of-pants family indexed by (m, n, k) and
// the closed-form identity their product satisfies
struct PantsReport {
  Int m, n, k;
  Mobius m1;          // V2^n V1^{m-1} V3 V1^{-1} V2^{-n}
  Mobius m2;          // V1^{-1} V3 V1^{k+1}
  Mobius product;     // m1 * m2 = -mat(V2^n V1^m V2^n V1^{k+2})
  GasketWord word;    // canonical periodic word of the product geodesic
  Mobius word_matrix; // one period of the word, before canonical rotation
  Rational limit_slope;  // symbol value of the word as k grows, (mn+1)/(n^2 m+2n)
};

// throws ApolloError("InternalInconsistency") when the product disagrees
// with the closed form; valid for all m, n, k >= 1
PantsReport pants_family(const Int& m, const Int& n, const Int& k);

}  // namespace apollo
