#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "clasp/error.hpp"

namespace clasp {

/// One Artin generator sigma_gen^sign, gen is 1-based.
struct Letter {
  int gen = 1;
  int sign = 1;

  [[nodiscard]] Letter inverse() const { return {gen, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// An element of B_n written as a fully expanded word in the Artin generators.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands, std::vector<Letter> letters = {})
      : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw InputError("braid index must be at least 1");
    for (const Letter& l : letters_) {
      if (l.gen < 1 || l.gen >= strands_)
        throw InputError("generator index s" + std::to_string(l.gen) + " out of range for B_" +
                         std::to_string(strands_));
      if (l.sign != 1 && l.sign != -1) throw InputError("letter sign must be +1 or -1");
    }
  }

  [[nodiscard]] int strands() const { return strands_; }
  [[nodiscard]] const std::vector<Letter>& letters() const { return letters_; }
  [[nodiscard]] std::size_t length() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }

  /// Concatenation; both words must live in the same braid group.
  [[nodiscard]] BraidWord operator*(const BraidWord& other) const {
    if (other.strands_ != strands_) throw InputError("cannot multiply braids of different index");
    std::vector<Letter> out = letters_;
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return BraidWord(strands_, std::move(out));
  }

  /// Compact text form, e.g. "s1^3 s2^-1"; the identity prints as "".
  [[nodiscard]] std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size();) {
      std::size_t j = i;
      while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
      const int power = static_cast<int>(j - i) * letters_[i].sign;
      if (!out.empty()) out += ' ';
      out += 's' + std::to_string(letters_[i].gen);
      if (power != 1) out += '^' + std::to_string(power);
      i = j;
    }
    return out;
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend std::ostream& operator<<(std::ostream& os, const BraidWord& w) {
    return os << "B" << w.strands_ << "[" << w.str() << "]";
  }

 private:
  int strands_ = 1;
  std::vector<Letter> letters_;
};

/// Parses "s1 s2^-1 s1^3" style text. Powers are expanded; s_i^0 is dropped.
/// Empty text (or "id") denotes the identity braid.
inline BraidWord parse_braid(std::string_view text, int strands) {
  if (strands < 1) throw InputError("braid index must be at least 1");
  std::vector<Letter> letters;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](bool allow_sign) -> long long {
    bool neg = false;
    if (allow_sign && pos < text.size() && text[pos] == '-') {
      neg = true;
      ++pos;
    }
    const std::size_t start = pos;
    long long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000) throw InputError("number too large in braid word");
      ++pos;
    }
    if (pos == start) throw InputError("expected digits at offset " + std::to_string(start));
    return neg ? -value : value;
  };

  skip_ws();
  if (text.substr(pos) == "id") return BraidWord(strands);
  while (pos < text.size()) {
    if (text[pos] != 's')
      throw InputError("malformed braid token at offset " + std::to_string(pos) + ": expected 's'");
    ++pos;
    const long long gen = read_int(false);
    long long power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      power = read_int(true);
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != 's')
      throw InputError("malformed braid token at offset " + std::to_string(pos));
    if (gen < 1 || gen >= strands)
      throw InputError("generator index s" + std::to_string(gen) + " out of range for B_" +
                       std::to_string(strands));
    const int sign = power < 0 ? -1 : 1;
    for (long long k = 0; k < (power < 0 ? -power : power); ++k)
      letters.push_back({static_cast<int>(gen), sign});
    skip_ws();
  }
  return BraidWord(strands, std::move(letters));
}

/// Permutation induced on strand positions: perm[p] is the bottom position
/// reached by the strand entering at top position p (0-based).
inline std::vector<int> braid_permutation(const BraidWord& w) {
  // at[p] = top position of the strand currently at position p
  std::vector<int> at(static_cast<std::size_t>(w.strands()));
  std::iota(at.begin(), at.end(), 0);
  for (const Letter& l : w.letters()) std::swap(at[l.gen - 1], at[l.gen]);
  std::vector<int> perm(at.size());
  for (std::size_t p = 0; p < at.size(); ++p) perm[static_cast<std::size_t>(at[p])] = static_cast<int>(p);
  return perm;
}

struct NumericInvariants {
  int exponent_sum = 0;
  int self_linking = 0;  // exponent sum minus strand count
  int component_count = 0;
  friend bool operator==(const NumericInvariants&, const NumericInvariants&) = default;
};

inline NumericInvariants numeric_invariants(const BraidWord& w) {
  NumericInvariants inv;
  for (const Letter& l : w.letters()) inv.exponent_sum += l.sign;
  inv.self_linking = inv.exponent_sum - w.strands();
  const std::vector<int> perm = braid_permutation(w);
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t p = 0; p < perm.size(); ++p) {
    if (seen[p]) continue;
    ++inv.component_count;
    for (std::size_t q = p; !seen[q]; q = static_cast<std::size_t>(perm[q])) seen[q] = true;
  }
  return inv;
}

enum class Transform { Mirror, Reverse, Inverse };

inline BraidWord transform(const BraidWord& w, Transform kind) {
  std::vector<Letter> out = w.letters();
  switch (kind) {
    case Transform::Mirror:
      for (Letter& l : out) l.sign = -l.sign;
      break;
    case Transform::Reverse:
      std::reverse(out.begin(), out.end());
      break;
    case Transform::Inverse:
      std::reverse(out.begin(), out.end());
      for (Letter& l : out) l.sign = -l.sign;
      break;
  }
  return BraidWord(w.strands(), std::move(out));
}

inline BraidWord mirror(const BraidWord& w) { return transform(w, Transform::Mirror); }
inline BraidWord inverse(const BraidWord& w) { return transform(w, Transform::Inverse); }

// ---------------------------------------------------------------------------
// Dehornoy ordering

enum class SigmaSign { SigmaPositive, SigmaNegative, Trivial };

inline std::string to_string(SigmaSign s) {
  switch (s) {
    case SigmaSign::SigmaPositive: return "sigma-positive";
    case SigmaSign::SigmaNegative: return "sigma-negative";
    case SigmaSign::Trivial: return "trivial";
  }
  return "?";
}

/// Sign read off syntactically: the lowest generator present decides, and
/// the word must use it with one sign only. The empty word is Trivial; a word
/// that is not sigma-definite as written throws.
inline SigmaSign syntactic_sign(const std::vector<Letter>& letters) {
  if (letters.empty()) return SigmaSign::Trivial;
  int lowest = letters.front().gen;
  for (const Letter& l : letters) lowest = std::min(lowest, l.gen);
  int sign = 0;
  for (const Letter& l : letters) {
    if (l.gen != lowest) continue;
    if (sign == 0) sign = l.sign;
    else if (sign != l.sign) throw InternalError("word is not sigma-definite");
  }
  return sign > 0 ? SigmaSign::SigmaPositive : SigmaSign::SigmaNegative;
}

struct HandleReduction {
  std::vector<Letter> word;  // handle-free result
  std::size_t steps = 0;
};

inline constexpr std::size_t kHandleReductionCap = 1'000'000;

/// Dehornoy handle reduction. A sigma_i-handle is a factor s_i^e v s_i^-e in
/// which v contains neither s_i nor s_{i-1}. Each step reduces the handle
/// whose closing letter is leftmost; such a handle contains no other handle,
/// so it is permitted and the process terminates.
inline HandleReduction handle_reduce(std::vector<Letter> word,
                                     std::size_t cap = kHandleReductionCap) {
  HandleReduction result;
  for (;;) {
    std::size_t open = 0, close = 0;
    bool found = false;
    for (std::size_t k = 1; k < word.size() && !found; ++k) {
      const Letter& last = word[k];
      for (std::size_t p = k; p-- > 0;) {
        const Letter& l = word[p];
        if (l.gen == last.gen - 1) break;
        if (l.gen == last.gen) {
          if (l.sign == -last.sign) {
            open = p;
            close = k;
            found = true;
          }
          break;
        }
      }
    }
    if (!found) break;
    if (++result.steps > cap)
      throw InternalError("handle reduction exceeded " + std::to_string(cap) + " steps");

    const int i = word[open].gen;
    const int e = word[open].sign;
    std::vector<Letter> replaced;
    replaced.reserve(word.size() + 2 * (close - open));
    replaced.insert(replaced.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(open));
    for (std::size_t p = open + 1; p < close; ++p) {
      const Letter& l = word[p];
      if (l.gen == i + 1) {
        replaced.push_back({i + 1, -e});
        replaced.push_back({i, l.sign});
        replaced.push_back({i + 1, e});
      } else {
        replaced.push_back(l);
      }
    }
    replaced.insert(replaced.end(), word.begin() + static_cast<std::ptrdiff_t>(close) + 1, word.end());
    word = std::move(replaced);
  }
  result.word = std::move(word);
  return result;
}

inline SigmaSign dehornoy_sign(const BraidWord& w) {
  return syntactic_sign(handle_reduce(w.letters()).word);
}

}  // namespace clasp
