#include "burau/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "burau/error.hpp"

namespace burau {

namespace {

void check_strands(int strands) {
  if (strands != 3 && strands != 4)
    throw PreconditionError("unsupported strand count " + std::to_string(strands) + " (expected 3 or 4)");
}

// x^-1 y^2 ... over the alphabet {x, y}; exponents are expanded by the
// caller through concat/power.
struct XyLetter {
  char gen;
  int power;
};

const std::vector<XyLetter> kOmega1 = {{'x', -1}, {'y', 2}, {'x', -1}, {'y', 1},  {'x', 1},
                                       {'y', 1},  {'x', 2}, {'y', -2}, {'x', -1}, {'y', -3}};
const std::vector<XyLetter> kOmega2 = {{'y', -1}, {'x', 1}, {'y', -2}, {'x', 1}, {'y', -1}, {'x', -1},
                                       {'y', -1}, {'x', -2}, {'y', 2}, {'x', 1}, {'y', 2}};

BraidWord expand_xy(const std::vector<XyLetter>& word) {
  BraidWord x = named_word("x4", 4);
  BraidWord y = named_word("y4", 4);
  BraidWord out(4);
  for (const auto& l : word) out = concat(out, power(l.gen == 'x' ? x : y, l.power));
  return out;
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) { check_strands(strands); }

BraidWord::BraidWord(int strands, std::vector<Letter> letters) : BraidWord(strands) {
  for (const auto& l : letters) push_back(l);
}

std::size_t BraidWord::length() const {
  std::size_t n = 0;
  for (const auto& l : letters_) n += static_cast<std::size_t>(std::abs(l.power));
  return n;
}

void BraidWord::push_back(Letter l) {
  if (l.index < 1 || l.index >= strands_)
    throw PreconditionError("generator index " + std::to_string(l.index) + " out of range for B_" +
                            std::to_string(strands_));
  if (l.power == 0) return;
  if (!letters_.empty() && letters_.back().index == l.index) {
    letters_.back().power += l.power;
    if (letters_.back().power == 0) letters_.pop_back();
    return;
  }
  letters_.push_back(l);
}

bool BraidWord::is_sigma1_power() const {
  return std::all_of(letters_.begin(), letters_.end(), [](const Letter& l) { return l.index == 1; });
}

std::string BraidWord::to_string() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(l.index);
    if (l.power != 1) out += '^' + std::to_string(l.power);
  }
  return out;
}

BraidWord parse_word(std::string_view text, int strands) {
  BraidWord word(strands);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&](bool allow_sign) {
    std::size_t start = i;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits) throw ParseError("expected integer", digits);
    int value = 0;
    const char* first = text.data() + start + (text[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text.data() + i, value);
    if (ec != std::errc() || ptr != text.data() + i) throw ParseError("integer out of range", start);
    return value;
  };

  skip_ws();
  while (i < text.size()) {
    std::size_t token_start = i;
    if (text[i] != 's') throw ParseError("expected 's'", i);
    ++i;
    int index = read_int(false);
    int pw = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      pw = read_int(true);
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError("expected whitespace between tokens", i);
    if (index < 1 || index >= strands) {
      std::string token(text.substr(token_start, i - token_start));
      throw PreconditionError("generator index out of range in token '" + token + "' for B_" +
                              std::to_string(strands));
    }
    word.push_back({index, pw});
    skip_ws();
  }
  return word;
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands())
    throw PreconditionError("strand-count mismatch: B_" + std::to_string(u.strands()) + " vs B_" +
                            std::to_string(v.strands()));
  BraidWord out = u;
  for (const auto& l : v.letters()) out.push_back(l);
  return out;
}

BraidWord inverse(const BraidWord& u) {
  BraidWord out(u.strands());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) out.push_back({it->index, -it->power});
  return out;
}

long exponent_sum(const BraidWord& u) {
  long s = 0;
  for (const auto& l : u.letters()) s += l.power;
  return s;
}

BraidWord power(const BraidWord& u, int k) {
  const BraidWord base = k < 0 ? inverse(u) : u;
  BraidWord out(u.strands());
  for (int i = 0; i < std::abs(k); ++i) out = concat(out, base);
  return out;
}

BraidWord commutator(const BraidWord& u, const BraidWord& v) {
  return concat(concat(u, v), concat(inverse(u), inverse(v)));
}

BraidWord embed(const BraidWord& u, int strands) {
  return BraidWord(strands, u.letters());
}

BraidWord named_word(std::string_view name, int strands) {
  auto need = [&](int n) {
    if (strands != n)
      throw PreconditionError("named word '" + std::string(name) + "' lives in B_" + std::to_string(n) +
                              ", not B_" + std::to_string(strands));
  };
  if (name == "a1") {
    need(3);
    return BraidWord(3, {{1, -1}, {2, 1}});
  }
  if (name == "a2") {
    need(3);
    return BraidWord(3, {{2, 1}, {1, -1}});
  }
  if (name == "center3") {
    need(3);
    return BraidWord(3, {{1, 1}, {2, 1}, {1, 1}, {2, 1}, {1, 1}, {2, 1}});
  }
  if (name == "x4") {
    need(4);
    return BraidWord(4, {{1, 1}, {3, -1}});
  }
  if (name == "y4") {
    need(4);
    return BraidWord(4, {{2, 1}, {1, 1}, {3, -1}, {2, -1}});
  }
  if (name == "omega1") {
    need(4);
    return expand_xy(kOmega1);
  }
  if (name == "omega2") {
    need(4);
    return expand_xy(kOmega2);
  }
  throw PreconditionError("unknown named word '" + std::string(name) + "'");
}

std::vector<std::string> named_word_names() {
  return {"a1", "a2", "center3", "x4", "y4", "omega1", "omega2"};
}

}  // namespace burau
