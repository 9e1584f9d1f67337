#pragma once
#include "apollo/mobius.hpp"
#include <vector>

namespace apollo {

// one maximal run V_letter^exp, exp >= 1
struct Block {
  int letter;  // 1, 2 or 3
  Int exp;
  bool operator==(const Block& o) const { return letter == o.letter && exp == o.exp; }
};

// word V1^{-lead} * body * (tail)^infinity in the positive letters V1, V2, V3.
// lead >= 0; body blocks merged (adjacent letters differ); when lead > 0 the body
// does not start with V1. tail empty for finite words; otherwise primitive and
// rotated to the lexicographically least letter sequence.
struct GasketWord {
  Int lead{0};
  std::vector<Block> body;
  std::vector<Block> tail;

  GasketWord() = default;

  bool is_finite() const { return tail.empty(); }
  bool is_empty() const { return lead == 0 && body.empty() && tail.empty(); }

  bool operator==(const GasketWord& o) const {
    return lead == o.lead && body == o.body && tail == o.tail;
  }

  // letter count of lead + body (finite part)
  Int finite_length() const {
    Int n = lead;
    for (const auto& b : body) n += b.exp;
    return n;
  }
  Int tail_length() const {
    Int n = 0;
    for (const auto& b : tail) n += b.exp;
    return n;
  }

  Mobius finite_matrix() const;  // requires is_finite()

  std::string str() const;
  static GasketWord parse(const std::string& s);
};

// builders keep block invariants; exponents may be zero (skipped) but not negative
class WordBuilder {
 public:
  void append(int letter, Int exp = Int(1)) {
    if (exp < 0) throw std::invalid_argument("negative block exponent");
    if (exp == 0) return;
    if (!blocks_.empty() && blocks_.back().letter == letter) blocks_.back().exp += exp;
    else blocks_.push_back({letter, std::move(exp)});
  }
  void append(const std::vector<Block>& bs) {
    for (const auto& b : bs) append(b.letter, b.exp);
  }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::vector<Block> take() { return std::move(blocks_); }

 private:
  std::vector<Block> blocks_;
};

std::vector<Block> merge_blocks(const std::vector<Block>& bs);
std::vector<int> expand_letters(const std::vector<Block>& bs);
std::vector<Block> blocks_of_letters(const std::vector<int>& ls);
Mobius matrix_of_blocks(const std::vector<Block>& bs);

// primitive root of the letter sequence, then least rotation (Booth)
std::vector<Block> canonical_tail(const std::vector<Block>& tail);

// equal canonical tails after relabeling every letter by the same cyclic shift
bool tails_letter_rotated_equal(const std::vector<Block>& a, const std::vector<Block>& b);

// finite word from lead/body; periodic word normalizer absorbs whole tail copies
// at the end of body and re-rotates the tail canonically
GasketWord make_finite_word(Int lead, std::vector<Block> body);
GasketWord make_periodic_word(Int lead, std::vector<Block> body, std::vector<Block> tail);

// V_k -> V_{k+t mod 3} on every letter; finite or periodic.
// words with a nonzero lead cannot be rotated (the lead is V1-specific).
GasketWord rotate_letters(const GasketWord& w, int t);

// letters-only substitution used when conjugating by J
std::vector<Block> substitute_blocks(const std::vector<Block>& bs, const int map[4]);

}  // namespace apollo
