#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace burau {

/// sigma_index^power.
struct Letter {
  int index;
  int power;

  bool operator==(const Letter&) const = default;
};

/// A word in the Artin generators of B_3 or B_4.
///
/// Words are free-group words in canonical form: adjacent letters with the
/// same index are merged and zero powers dropped. No braid relations are
/// applied; braid equality is decided through representations.
class BraidWord {
 public:
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<Letter> letters);

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const;  // sum of |power|

  /// Appends a letter, merging with the tail.
  void push_back(Letter l);

  /// True when only sigma_1 occurs (including the empty word).
  bool is_sigma1_power() const;

  std::string to_string() const;

  bool operator==(const BraidWord&) const = default;

 private:
  int strands_;
  std::vector<Letter> letters_;
};

BraidWord parse_word(std::string_view text, int strands);

BraidWord concat(const BraidWord& u, const BraidWord& v);
BraidWord inverse(const BraidWord& u);
long exponent_sum(const BraidWord& u);
BraidWord power(const BraidWord& u, int k);
/// u v u^-1 v^-1
BraidWord commutator(const BraidWord& u, const BraidWord& v);
/// Same letters viewed in B_strands (strands must not shrink below use).
BraidWord embed(const BraidWord& u, int strands);

/// Named words: a1, a2, center3 (B_3); x4, y4, omega1, omega2 (B_4).
BraidWord named_word(std::string_view name, int strands);
std::vector<std::string> named_word_names();

}  // namespace burau
