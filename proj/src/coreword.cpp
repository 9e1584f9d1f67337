#include "apollo/coreword.hpp"

namespace apollo {

// full builder: the first block may carry a negative V1 power for b below 0
static std::vector<Block> blocks_of(const Rational& b) {
  if (b.is_inf()) throw std::invalid_argument("w of infinity");
  if (b.sign() == 0) return {};
  CFWord cf = cf_expand_any(b);
  std::vector<Int> e = cf.entries;
  e.pop_back();  // the trailing 1 marks the end, it is not a block
  std::vector<Block> out;
  int letter = 1;
  for (size_t i = 0; i < e.size(); ++i, letter = 3 - letter)
    if (e[i] != 0) out.push_back({letter, e[i]});
  return out;
}

std::vector<Block> w_of(const Rational& b) {
  if (!b.is_inf() && b.sign() < 0)
    throw std::invalid_argument("w of a negative rational");
  return blocks_of(b);
}

std::vector<Block> w_tilde(const Rational& b) {
  Rational one{Int(1)};
  if (b.is_inf() || b.sign() == 0 || b == one)
    throw std::invalid_argument("companion word undefined at " + b.str());
  if (b.sign() < 0) return blocks_of(Rational(-b.den, b.num));
  if (b < one) return blocks_of(b / (one - b));
  return blocks_of(b - one);
}

std::string blocks_str(Int lead, const std::vector<Block>& bs) {
  std::string s;
  if (lead != 0) s = "V1^-" + lead.str();
  for (const auto& b : bs) {
    if (!s.empty()) s += " ";
    s += "V" + std::to_string(b.letter);
    if (b.exp != 1) s += "^" + b.exp.str();
  }
  return s.empty() ? "e" : s;
}

namespace {

// non-representable fragment argument; caught to restart from a shifted marking
struct DegenerateFragment {
  Rational arg;
};

struct Runner {
  const MarkingOrbit& o;
  size_t d;
  std::array<int, 4> A{0, 1, 2, 3};  // A[i] = letter currently assigned to A_i
  Int lead{0};
  int wraps = 1;
  WordBuilder cb, wb;
  std::vector<AlgorithmStep> steps;

  explicit Runner(const MarkingOrbit& orbit) : o(orbit), d(orbit.period()) {}

  void shift_sigma() {
    auto B = A;
    A[1] = B[2]; A[2] = B[3]; A[3] = B[1];
  }
  void shift_sigma2() {
    auto B = A;
    A[1] = B[3]; A[2] = B[1]; A[3] = B[2];
  }
  std::string assignment_str() const {
    return "V" + std::to_string(A[1]) + ",V" + std::to_string(A[2]) + ",V" + std::to_string(A[3]);
  }
  std::vector<Block> mapped(std::vector<Block> bs) const {
    for (auto& b : bs) b.letter = A[b.letter];
    return bs;
  }
  std::vector<Block> tilde(const Rational& x) const {
    Rational one{Int(1)};
    if (x.is_inf() || x.sign() == 0 || x == one) throw DegenerateFragment{x};
    return mapped(w_tilde(x));
  }
  // conjugator blocks may open with a negative V1 power; fold it into the prefix
  std::vector<Block> strip_lead(std::vector<Block> bs) {
    if (!bs.empty() && bs.front().exp < 0) {
      if (bs.front().letter != 1)
        throw ApolloError("InternalInconsistency", "negative block on a shifted letter");
      lead = -bs.front().exp;
      bs.erase(bs.begin());
    }
    return bs;
  }
  static std::string cf_disp(const std::string& label, const Rational& v) {
    return label + "=" + v.str() + "=" + cf_classical(v).classical_str();
  }
  void record(size_t k, const std::string& branch, const std::string& disp,
              const std::string& frag) {
    steps.push_back({k, branch, o.markings[k % d].str(), assignment_str(), disp, frag});
  }

  void run() {
    const Rational zero{Int(0)}, one{Int(1)};
    const Rational& b0 = o.beta_at(0);
    size_t k = 1;
    Int D{Int(d)};
    bool done = false;

    if (b0.is_int() && b0 <= zero) {
      shift_sigma();
      lead = -b0.num;
      cb.append(mapped(blocks_of(o.beta_at(1))));
      record(0, "2(a)", cf_disp("beta_1", o.beta_at(1)),
             "c = " + blocks_str(lead, cb.blocks()));
      k = 2;
      D += 1;
    } else {
      const Rational& b1 = o.beta_at(1);
      const Rational& b3 = o.beta_at(3);
      if (b1 == zero || b1 == one) {
        bool left = (b1 == zero);
        auto [bl, br] = farey_neighbors_real(b0);
        Rational bs = left ? bl : br;
        if (bs.is_inf()) throw DegenerateFragment{bs};
        cb.append(strip_lead(mapped(blocks_of(bs))));
        Rational x = iota(bs);
        if ((left && b3 != zero) || (!left && b3 != one)) {
          // fragments for k = 1, 2 fold into the conjugator
          cb.append(A[3]);
          cb.append(tilde(x));
          record(0, left ? "2(c)" : "2(e)",
                 cf_disp(left ? "beta_L" : "beta_R", bs) + ", " + cf_disp("iota", x),
                 "c = " + blocks_str(lead, cb.blocks()));
          k = 3;
        } else {
          // the whole period folds into one lamppost fragment
          auto [xl, xr] = farey_neighbors_real(x);
          Rational xs = left ? xl : xr;
          wb.append(A[3]);
          wb.append(tilde(xs));
          record(0, left ? "2(d)" : "2(f)",
                 cf_disp(left ? "beta_L" : "beta_R", bs) + ", " +
                     cf_disp(left ? "iota_L" : "iota_R", xs),
                 "c = " + blocks_str(lead, cb.blocks()) + " ; w = " + blocks_str(0, wb.blocks()));
          done = true;
        }
      } else {
        cb.append(strip_lead(mapped(blocks_of(b0))));
        record(0, "2(b)", cf_disp("beta_0", b0), "c = " + blocks_str(lead, cb.blocks()));
        k = 1;
      }
    }

    if (done) return;

    // one pass covers indices [entry_k, entry_k + d); a pass that shifted the
    // assignment leaves the next period relabeled, so the letter sequence only
    // closes once the assignment returns to its entry state at a pass boundary
    const size_t entry_k = k;
    const auto entry_A = A;
    while (Int(k) <= D || A != entry_A || (k - entry_k) % d != 0) {
      if (k > entry_k + 3 * d)
        throw ApolloError("InternalInconsistency",
                          "letter assignment does not realign within three periods");
      const Rational& b = o.beta_at(k);
      if (b < zero) shift_sigma2();
      else if (b > one) shift_sigma();
      const Rational& bn = o.beta_at(k + 1);
      WordBuilder frag;
      std::string branch, disp;
      size_t kcur = k;
      if (bn == zero || bn == one) {
        bool left = (bn == zero);
        auto [bl, br] = farey_neighbors_real(b);
        Rational bs = left ? bl : br;
        if (bs.is_inf()) throw DegenerateFragment{bs};
        Rational x = iota(bs);
        frag.append(A[3]);
        frag.append(tilde(bs));
        frag.append(A[3]);
        frag.append(tilde(x));
        branch = left ? "4(b)" : "4(c)";
        disp = cf_disp(left ? "beta_L" : "beta_R", bs) + ", " + cf_disp("iota", x);
        k += 3;
      } else {
        frag.append(A[3]);
        frag.append(tilde(b));
        branch = "4(a)";
        disp = b.sign() < 0 ? cf_disp("-1/beta", Rational(-b.den, b.num)) : cf_disp("beta", b);
        k += 1;
      }
      record(kcur, branch, disp, "w += " + blocks_str(0, frag.blocks()));
      wb.append(frag.blocks());
    }
    wraps = int((k - entry_k) / d);
  }
};

}  // namespace

CoreWord run_algorithm(const MarkingOrbit& orbit) {
  if (orbit.core_type == CoreType::Elliptic)
    throw ApolloError("EllipticInput", "core has finite order, no coding word exists");
  size_t d = orbit.period();
  std::vector<std::string> notes;
  size_t nonpos = 0;
  for (const auto& m : orbit.markings)
    if (m.beta.is_int() && m.beta.sign() <= 0) ++nonpos;
  if (nonpos > 1)
    notes.push_back("orbit visits " + std::to_string(nonpos) + " nonpositive integer markings");

  for (size_t s = 0; s < d; ++s) {
    MarkingOrbit o = s == 0 ? orbit : orbit_of(orbit.markings[s]);
    // no opening branch reads a unit base marking; start one step later
    if (o.beta_at(0) == Rational(Int(1))) {
      notes.push_back("restart: unit base marking from T^" + std::to_string(s) +
                      " of the input");
      continue;
    }
    Runner r(o);
    try {
      r.run();
    } catch (const DegenerateFragment& df) {
      notes.push_back("restart: degenerate fragment at " + df.arg.str() + " from T^" +
                      std::to_string(s) + " of the input");
      continue;
    }
    CoreWord cw;
    cw.restart_shift = s;
    cw.lead = r.lead;
    cw.wraps = r.wraps;
    cw.c_blocks = r.cb.take();
    cw.w_blocks = r.wb.take();

    Mobius C = make_finite_word(cw.lead, cw.c_blocks).finite_matrix();
    Mobius W = matrix_of_blocks(cw.w_blocks);
    cw.element = C * W * C.inverse();
    // a triple-period word codes the cube of the core element
    Int target = cw.wraps == 3 ? o.trace * o.trace * o.trace - 3 * o.trace : o.trace;
    GaussianInt tr = cw.element.trace();
    if (tr.im != 0 || tr.re * tr.re != target * target) {
      notes.push_back("restart: coded element trace " + tr.str() + " from T^" +
                      std::to_string(s) + " disagrees with the core");
      continue;
    }
    if (cw.wraps == 3)
      notes.push_back("period word spans three orbit periods; one period returns the "
                      "letters rotated");
    cw.orbit = std::move(o);
    cw.steps = std::move(r.steps);
    cw.notes = std::move(notes);
    cw.word = make_periodic_word(cw.lead, cw.c_blocks, cw.w_blocks);
    return cw;
  }
  std::string why = "no rotation of the orbit yields the core element";
  for (const std::string& n : notes) why += "; " + n;
  throw ApolloError("InternalInconsistency", why);
}

CoreWord run_algorithm(const Marking& m) { return run_algorithm(orbit_of(m)); }

}  // namespace apollo
