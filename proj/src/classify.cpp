#include "apollo/classify.hpp"
#include <atomic>
#include <condition_variable>
#include <mutex>
#include <set>
#include <thread>

namespace apollo {

std::string plane_kind_str(PlaneKind k) {
  switch (k) {
    case PlaneKind::Elliptic: return "elliptic";
    case PlaneKind::Parabolic: return "parabolic";
    case PlaneKind::SingleCrown: return "single_crown";
    case PlaneKind::DoubleCrown: return "double_crown";
    default: return "nonelementary";
  }
}

Classification classify(const MarkingOrbit& o) {
  Classification c;
  if (o.core_type == CoreType::Elliptic) {
    c.kind = PlaneKind::Elliptic;
    c.family = match_elliptic(o);
    return c;
  }
  if (o.core_type == CoreType::Parabolic) {
    c.kind = PlaneKind::Parabolic;
    c.family = match_parabolic(o);
    return c;
  }
  CoreWord w = run_algorithm(o);
  c.core_word = w.word;
  std::set<int> letters;
  for (const Block& b : w.word.tail) letters.insert(b.letter);
  if (letters.size() == 2) {
    c.kind = PlaneKind::SingleCrown;
    c.family = match_crown(o);
    return c;
  }
  if (letters.size() != 3)
    throw ApolloError("InternalInconsistency",
                      "hyperbolic tail uses " + std::to_string(letters.size()) + " letters");
  ProbeResult pr = inside_probe(o, w);
  if (pr.double_crown) {
    c.kind = PlaneKind::DoubleCrown;
    c.complementary = pr.complementary;
    c.family = match_double_crown(o);
  } else {
    c.kind = PlaneKind::NonElementary;
  }
  return c;
}

Classification classify(const Marking& m) { return classify(orbit_of(m)); }

Int ComplexityReport::cf_max() const {
  Int m{0};
  for (const Int& v : cf_lengths)
    if (v > m) m = v;
  return m;
}

std::string ComplexityReport::str() const {
  std::string s = "cf_max=" + cf_max().str() + " reduced=" + std::to_string(reduced_length) +
                  " spikes=";
  for (size_t i = 0; i < spike_counts.size(); ++i)
    s += (i ? "+" : "") + std::to_string(spike_counts[i]);
  return s + " area=" + area_over_pi.str() + "pi";
}

ComplexityReport complexity_report(const Classification& c, const MarkingOrbit& o) {
  if (c.kind == PlaneKind::NonElementary)
    throw std::invalid_argument("complexity report requires an elementary plane");
  ComplexityReport r;
  for (const Marking& mk : o.markings) {
    r.cf_lengths.push_back(cf_classical(mk.alpha).classical_length());
    r.cf_lengths.push_back(cf_classical(mk.beta).classical_length());
  }
  if (c.core_word) r.reduced_length = static_cast<int>(c.core_word->tail.size());
  size_t d = o.markings.size();
  switch (c.kind) {
    case PlaneKind::Elliptic: {
      // rotation order from the trace: identity 1, trace 0 order 2, else 3
      int order = o.core_is_identity ? 1 : (o.trace == 0 ? 2 : 3);
      if (c.family && !o.core_is_identity && elliptic_order(c.family->index) != order)
        throw ApolloError("InternalInconsistency",
                          "catalogue order disagrees with the trace at " + o.markings[0].str());
      size_t sides = d * static_cast<size_t>(order);
      r.spike_counts = {sides};
      r.area_over_pi = Int(sides) - 2;
      break;
    }
    case PlaneKind::Parabolic:
      r.spike_counts = {d};
      r.area_over_pi = Int(d);
      break;
    case PlaneKind::SingleCrown:
      r.spike_counts = {d};
      r.area_over_pi = Int(d);
      break;
    default: {
      if (!c.complementary)
        throw std::invalid_argument("double crown report requires the complementary marking");
      size_t dc = orbit_of(*c.complementary).period();
      r.spike_counts = {d, dc};
      r.area_over_pi = Int(d + dc);
      break;
    }
  }
  return r;
}

namespace {

std::string join_params(const FamilyDescriptor& f) {
  std::string s;
  for (size_t i = 0; i < f.params.size(); ++i)
    s += (i ? ";" : "") + f.params[i].first + "=" + f.params[i].second.str();
  return s;
}

}  // namespace

std::string CensusRow::csv_header() {
  return "alpha,beta,period,kind,theorem,family,params,core_word,cf_max,reduced_len,spikes,"
         "area_over_pi";
}

std::string CensusRow::csv_line() const {
  std::string s = rep.alpha.str() + "," + rep.beta.str() + "," + std::to_string(period) + "," +
                  plane_kind_str(cls.kind) + ",";
  if (cls.family) {
    s += cls.family->theorem + "," + std::to_string(cls.family->index) + "," +
         join_params(*cls.family);
  } else {
    s += ",,";
  }
  s += ",";
  if (cls.core_word) s += cls.core_word->str();
  s += ",";
  if (complexity) {
    s += complexity->cf_max().str() + "," + std::to_string(complexity->reduced_length) + ",";
    for (size_t i = 0; i < complexity->spike_counts.size(); ++i)
      s += (i ? "+" : "") + std::to_string(complexity->spike_counts[i]);
    s += "," + complexity->area_over_pi.str();
  } else {
    s += ",,,";
  }
  return s;
}

std::string EnumReport::summary() const {
  std::string s = "max_den=" + max_den.str() + " beta_window=[" + beta_lo.str() + "," +
                  beta_hi.str() + ") scanned=" + std::to_string(scanned) +
                  " classes=" + std::to_string(classes) + "\n";
  for (const auto& [k, v] : kind_counts) s += k + "=" + std::to_string(v) + "\n";
  for (const auto& [k, v] : family_counts) s += k + ": " + std::to_string(v) + "\n";
  s += "discrepancies=" + std::to_string(discrepancies.size());
  return s;
}

namespace {

// reduced fractions with denominator at most n in [lo, hi), ascending
std::vector<Rational> farey_window(const Int& n, const Int& lo, const Int& hi) {
  std::vector<Rational> out;
  for (Int q = 1; q <= n; ++q)
    for (Int p = lo * q; p < hi * q; ++p) {
      Rational r(p, q);
      if (r.den == q) out.push_back(r);
    }
  std::sort(out.begin(), out.end());
  return out;
}

const Int kBetaLo{-3}, kBetaHi{4};

bool eligible(const Marking& m, const Int& max_den) {
  return m.alpha.den <= max_den && m.beta.den <= max_den && Rational(kBetaLo) <= m.beta &&
         m.beta < Rational(kBetaHi);
}

struct BatchOut {
  std::vector<CensusRow> rows;
  EnumReport part;
};

void census_row(const Marking& m, const MarkingOrbit& o, const Int& max_den, BatchOut& out) {
  Classification c = classify(o);
  CensusRow row;
  row.rep = m;
  row.period = o.markings.size();
  row.cls = c;
  EnumReport& rep = out.part;
  rep.kind_counts[plane_kind_str(c.kind)]++;
  auto flag = [&](const std::string& what) { rep.discrepancies.push_back(m.str() + ": " + what); };

  if (c.kind == PlaneKind::NonElementary) {
    if (auto fm = family_membership(o))
      flag("nonelementary yet listed as " + fm->str());
  } else {
    if (!c.family) {
      std::string listed = "no catalogue entry";
      if (auto fm = family_membership(o)) listed = "listed only as " + fm->str();
      flag(plane_kind_str(c.kind) + " with " + listed);
    } else {
      rep.family_counts[c.family->theorem + " " + std::to_string(c.family->index)]++;
    }
    if (c.kind == PlaneKind::SingleCrown && c.family) {
      // the mirror relabels a crown within its entry; two entries would clash
      for (const FamilyDescriptor& f : all_matches(o, "crown"))
        if (f.index != c.family->index)
          flag("crown listed under entries " + std::to_string(c.family->index) + " and " +
               std::to_string(f.index));
    }
    if (c.kind == PlaneKind::DoubleCrown && c.family && c.complementary) {
      auto cf = match_double_crown(orbit_of(*c.complementary));
      if (!cf || cf->index != c.family->index)
        flag("complementary side not paired with entry " + std::to_string(c.family->index));
    }
    ComplexityReport cx = complexity_report(c, o);
    for (const Int& L : cx.cf_lengths)
      if (L > 8) flag("continued fraction length " + L.str() + " exceeds 8");
    if (cx.reduced_length > 8)
      flag("reduced length " + std::to_string(cx.reduced_length) + " exceeds 8");
    if (c.kind == PlaneKind::SingleCrown || c.kind == PlaneKind::DoubleCrown)
      for (size_t s : cx.spike_counts)
        if (s > 6) flag("crown with " + std::to_string(s) + " spikes exceeds 6");
    if (cx.area_over_pi > 8) flag("area " + cx.area_over_pi.str() + "pi exceeds 8pi");
    row.complexity = std::move(cx);
  }
  out.rows.push_back(std::move(row));
}

BatchOut run_batch(const Rational& alpha, const std::vector<Rational>& betas,
                   const Int& max_den) {
  BatchOut out;
  for (const Rational& b : betas) {
    Marking m{alpha, b};
    if (m.alpha != alpha || m.beta != b) continue;  // not its own normal form
    ++out.part.scanned;
    MarkingOrbit o = orbit_of(m);
    // emit only from the least eligible marking of the orbit and its mirror
    bool least = true;
    for (const Marking& x : o.markings) {
      Marking tx = tau(x);
      if ((eligible(x, max_den) && x < m) || (eligible(tx, max_den) && tx < m)) {
        least = false;
        break;
      }
    }
    if (!least) continue;
    ++out.part.classes;
    census_row(m, o, max_den, out);
  }
  return out;
}

void merge_batch(EnumReport& rep, BatchOut& out, const RowSink& sink) {
  rep.scanned += out.part.scanned;
  rep.classes += out.part.classes;
  for (const auto& [k, v] : out.part.kind_counts) rep.kind_counts[k] += v;
  for (const auto& [k, v] : out.part.family_counts) rep.family_counts[k] += v;
  for (std::string& d : out.part.discrepancies) rep.discrepancies.push_back(std::move(d));
  if (sink)
    for (const CensusRow& r : out.rows) sink(r);
}

}  // namespace

EnumReport enumerate_and_verify(const Int& max_den, const RowSink& sink, unsigned threads) {
  if (max_den < 2) throw std::invalid_argument("max_den must be at least 2");
  EnumReport rep;
  rep.max_den = max_den;
  rep.beta_lo = kBetaLo;
  rep.beta_hi = kBetaHi;
  std::vector<Rational> alphas = farey_window(max_den, Int(0), Int(2));
  alphas.erase(std::upper_bound(alphas.begin(), alphas.end(), Rational(Int(1))), alphas.end());
  std::vector<Rational> betas = farey_window(max_den, kBetaLo, kBetaHi);

  unsigned want = threads ? threads : std::thread::hardware_concurrency();
  if (want < 1) want = 1;
  if (want == 1) {
    for (const Rational& a : alphas) {
      BatchOut out = run_batch(a, betas, max_den);
      merge_batch(rep, out, sink);
    }
    return rep;
  }

  std::atomic<size_t> next{0};
  std::mutex mu;
  std::condition_variable cv;
  std::map<size_t, BatchOut> ready;
  auto work = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= alphas.size()) return;
      BatchOut out = run_batch(alphas[i], betas, max_den);
      std::lock_guard<std::mutex> lk(mu);
      ready.emplace(i, std::move(out));
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < want; ++t) pool.emplace_back(work);
  for (size_t i = 0; i < alphas.size(); ++i) {
    std::unique_lock<std::mutex> lk(mu);
    cv.wait(lk, [&] { return ready.count(i) > 0; });
    BatchOut out = std::move(ready.at(i));
    ready.erase(i);
    lk.unlock();
    merge_batch(rep, out, sink);
  }
  for (std::thread& t : pool) t.join();
  return rep;
}

std::vector<GateSolution> conjecture_a_search(const Int& bound) {
  if (bound < 1) throw std::invalid_argument("bound must be at least 1");
  std::vector<GateSolution> out;
  for (Int n = 1; n <= bound; ++n)
    for (Int k = 1; k <= bound; ++k) {
      Int d = k * k - n * n;
      Int kn = k * k * n * n;
      Int v = d * d + 4 * kn * kn;
      Int t;
      if (is_perfect_square(v, &t)) out.push_back({n, k, t, n == k});
    }
  return out;
}

}  // namespace apollo
