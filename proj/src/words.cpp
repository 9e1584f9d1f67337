#include "apollo/words.hpp"
#include <sstream>

namespace apollo {

std::vector<Block> merge_blocks(const std::vector<Block>& bs) {
  WordBuilder b;
  b.append(bs);
  return b.take();
}

std::vector<int> expand_letters(const std::vector<Block>& bs) {
  std::vector<int> out;
  for (const auto& b : bs) {
    if (b.exp > Int(1000000)) throw std::length_error("block too long to expand");
    long long n = b.exp.convert_to<long long>();
    for (long long i = 0; i < n; ++i) out.push_back(b.letter);
  }
  return out;
}

std::vector<Block> blocks_of_letters(const std::vector<int>& ls) {
  WordBuilder b;
  for (int l : ls) b.append(l);
  return b.take();
}

Mobius matrix_of_blocks(const std::vector<Block>& bs) {
  Mobius m = Mobius::identity();
  for (const auto& b : bs) m = m * Mobius::V(b.letter).pow(b.exp);
  return m;
}

Mobius GasketWord::finite_matrix() const {
  if (!is_finite()) throw std::invalid_argument("matrix of an infinite word");
  Mobius m = Mobius::V(1).pow(-lead);
  return m * matrix_of_blocks(body);
}

static size_t least_rotation(const std::vector<int>& s) {
  size_t n = s.size();
  size_t best = 0;
  for (size_t cand = 1; cand < n; ++cand) {
    for (size_t i = 0; i < n; ++i) {
      int a = s[(cand + i) % n], b = s[(best + i) % n];
      if (a != b) {
        if (a < b) best = cand;
        break;
      }
    }
  }
  return best;
}

static std::vector<int> primitive_root(const std::vector<int>& s) {
  size_t n = s.size();
  for (size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (size_t i = d; i < n && ok; ++i) ok = s[i] == s[i - d];
    if (ok) return std::vector<int>(s.begin(), s.begin() + d);
  }
  return s;
}

std::vector<Block> canonical_tail(const std::vector<Block>& tail) {
  if (tail.empty()) return {};
  std::vector<int> ls = expand_letters(tail);
  ls = primitive_root(ls);
  size_t r = least_rotation(ls);
  std::rotate(ls.begin(), ls.begin() + r, ls.end());
  return blocks_of_letters(ls);
}

bool tails_letter_rotated_equal(const std::vector<Block>& a, const std::vector<Block>& b) {
  std::vector<Block> cb = canonical_tail(b);
  for (int j = 0; j < 3; ++j) {
    std::vector<Block> r = a;
    for (Block& blk : r) blk.letter = (blk.letter - 1 + j) % 3 + 1;
    if (canonical_tail(r) == cb) return true;
  }
  return false;
}

GasketWord make_finite_word(Int lead, std::vector<Block> body) {
  if (lead < 0) throw std::invalid_argument("negative lead");
  GasketWord w;
  w.lead = std::move(lead);
  w.body = merge_blocks(body);
  if (w.lead > 0 && !w.body.empty() && w.body.front().letter == 1)
    throw std::invalid_argument("lead followed by a V1 block");
  return w;
}

GasketWord make_periodic_word(Int lead, std::vector<Block> body, std::vector<Block> tail) {
  if (tail.empty()) return make_finite_word(std::move(lead), std::move(body));
  std::vector<int> t = expand_letters(merge_blocks(tail));
  std::vector<int> b = expand_letters(merge_blocks(body));
  // drop whole periods from the end of the body
  t = primitive_root(t);
  auto ends_with = [&]() {
    if (b.size() < t.size()) return false;
    return std::equal(t.begin(), t.end(), b.end() - t.size());
  };
  while (ends_with()) b.erase(b.end() - t.size(), b.end());
  // canonical rotation, compensated by extending the body
  size_t r = least_rotation(t);
  b.insert(b.end(), t.begin(), t.begin() + r);
  std::rotate(t.begin(), t.begin() + r, t.end());
  // the body may now end with copies of the rotated tail again
  auto ends_with2 = [&]() {
    if (b.size() < t.size()) return false;
    return std::equal(t.begin(), t.end(), b.end() - t.size());
  };
  while (ends_with2()) b.erase(b.end() - t.size(), b.end());
  GasketWord w;
  w.lead = std::move(lead);
  w.body = blocks_of_letters(b);
  w.tail = blocks_of_letters(t);
  if (w.lead < 0) throw std::invalid_argument("negative lead");
  if (w.lead > 0 && !w.body.empty() && w.body.front().letter == 1)
    throw std::invalid_argument("lead followed by a V1 block");
  if (w.lead > 0 && w.body.empty() && w.tail.front().letter == 1)
    throw std::invalid_argument("lead followed by a V1 block");
  return w;
}

std::string GasketWord::str() const {
  std::vector<std::string> parts;
  if (lead > 0) parts.push_back("1^-" + lead.str());
  if (!body.empty()) {
    std::string s;
    for (const auto& b : body)
      for (Int i = 0; i < b.exp; ++i) s += (s.empty() ? "" : " ") + std::to_string(b.letter);
    parts.push_back(s);
  }
  if (!tail.empty()) {
    std::string s = "(";
    bool first = true;
    for (const auto& b : tail)
      for (Int i = 0; i < b.exp; ++i) {
        if (!first) s += " ";
        s += std::to_string(b.letter);
        first = false;
      }
    parts.push_back(s + ")");
  }
  if (parts.empty()) return "e";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " | " + parts[i];
  return out;
}

GasketWord GasketWord::parse(const std::string& s) {
  GasketWord w;
  std::string cur;
  std::vector<std::string> sections;
  std::stringstream ss(s);
  std::string tok;
  std::vector<std::string> toks;
  while (ss >> tok) {
    if (tok != "|") toks.push_back(tok);
  }
  if (toks.size() == 1 && toks[0] == "e") return w;
  std::vector<Block> body, tail;
  bool in_tail = false, tail_done = false;
  WordBuilder bb, tb;
  for (auto& t : toks) {
    if (t.rfind("1^-", 0) == 0) {
      w.lead = Int(t.substr(3));
      continue;
    }
    bool open = !t.empty() && t.front() == '(';
    bool close = !t.empty() && t.back() == ')';
    std::string core = t;
    if (open) core = core.substr(1);
    if (close) core = core.substr(0, core.size() - 1);
    if (open) in_tail = true;
    if (tail_done) throw std::invalid_argument("letters after periodic tail");
    if (core.empty()) throw std::invalid_argument("empty token in word");
    int letter = std::stoi(core);
    if (letter < 1 || letter > 3) throw std::invalid_argument("letter out of range");
    if (in_tail) tb.append(letter);
    else bb.append(letter);
    if (close) { in_tail = false; tail_done = true; }
  }
  return make_periodic_word(w.lead, bb.take(), tb.take());
}

GasketWord rotate_letters(const GasketWord& w, int t) {
  t = ((t % 3) + 3) % 3;
  if (t == 0) return w;
  if (w.lead > 0)
    throw std::invalid_argument("cannot rotate letters of a word with a negative-power prefix");
  auto rot = [&](std::vector<Block> bs) {
    for (auto& b : bs) b.letter = (b.letter - 1 + t) % 3 + 1;
    return bs;
  };
  return make_periodic_word(0, rot(w.body), rot(w.tail));
}

std::vector<Block> substitute_blocks(const std::vector<Block>& bs, const int map[4]) {
  std::vector<Block> out;
  out.reserve(bs.size());
  for (const auto& b : bs) out.push_back({map[b.letter], b.exp});
  return merge_blocks(out);
}

}  // namespace apollo
