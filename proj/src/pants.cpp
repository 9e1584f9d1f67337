#include "apollo/pants.hpp"
#include "apollo/gasket.hpp"

namespace apollo {

PantsReport pants_family(const Int& m, const Int& n, const Int& k) {
  if (m < 1 || n < 1 || k < 1) throw std::invalid_argument("pants parameters must be >= 1");
  PantsReport r;
  r.m = m;
  r.n = n;
  r.k = k;

  Mobius v1 = Mobius::V(1), v2 = Mobius::V(2), v3 = Mobius::V(3);
  Mobius v2n = v2.pow(n);
  r.m1 = v2n * v1.pow(m - 1) * v3 * v1.inverse() * v2n.inverse();
  r.m2 = v1.inverse() * v3 * v1.pow(k + 1);
  r.product = r.m1 * r.m2;

  // closed form: entries of -(V2^n V1^m V2^n V1^{k+2})
  Int nm1 = n * m + 1, nm2 = n * m + 2;
  Mobius closed(GaussianInt(-nm1, 0), GaussianInt(-((k + 2) * nm1 + m), 0),
                GaussianInt(-n * nm2, 0), GaussianInt(-(n * (k + 2) * nm2 + nm1), 0));
  WordBuilder wb;
  wb.append(2, n);
  wb.append(1, m);
  wb.append(2, n);
  wb.append(1, k + 2);
  std::vector<Block> blocks = wb.take();
  r.word_matrix = matrix_of_blocks(blocks);
  if (!(r.product == closed) || !(r.product == -r.word_matrix))
    throw ApolloError("InternalInconsistency",
                      "pants product disagrees with its closed form at m=" + m.str() +
                          " n=" + n.str() + " k=" + k.str());

  r.word = make_periodic_word(Int(0), std::vector<Block>{}, blocks);
  r.limit_slope = Rational(n * m + 1, n * nm2);
  return r;
}

}  // namespace apollo
