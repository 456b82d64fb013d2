#pragma once

#include <cstddef>
#include <string_view>
#include <utility>

#include "unbordered/partial_word.hpp"

namespace unbordered {

enum class WitnessSource { Wichmann, Sqrt, Counterexample };

std::string_view to_string(WitnessSource source) noexcept;

/// An unbordered partial word together with where it came from. The
/// constructor re-checks unborderedness and the hole count, so a value of
/// this type is always a valid witness.
class WitnessWord {
 public:
  WitnessWord(PartialWord word, std::size_t claimed_holes, WitnessSource source);

  [[nodiscard]] const PartialWord& word() const noexcept { return word_; }
  [[nodiscard]] std::size_t holes() const noexcept { return claimed_holes_; }
  [[nodiscard]] WitnessSource source() const noexcept { return source_; }

 private:
  PartialWord word_;
  std::size_t claimed_holes_;
  WitnessSource source_;
};

/// Expands exponent notation such as "a^4 b^3 .^58 a (.^2 c)^3" left to
/// right; '.' is the hole, whitespace is ignored and (X)^0 is empty.
[[nodiscard]] PartialWord expand_pattern(std::string_view pattern, Alphabet alphabet);

/// a b^r .^r (a .^{2r})^r b (.^{4r+2} c)^s (.^{2r+1} d)^{r+1} b^r
[[nodiscard]] WitnessWord wichmann_word(int r, int s);

/// W(r,s) (.^r c)^i .^{j-1} c, for 1 <= j <= r+1; i = j = 0 gives W(r,s).
[[nodiscard]] WitnessWord wichmann_word_ext(int r, int s, int i, int j);

/// Split of the tail length for the square-root word of length n: with
/// q = floor(sqrt n), t1 * q + t2 = n - q - 1 and 0 <= t2 <= q - 1.
struct SqrtSplit {
  int q;
  int t1;
  int t2;
};
[[nodiscard]] SqrtSplit sqrt_split(int n);

/// a^{q-1} b (.^{q-1} c)^{t1} .^{t2} c. Throws TooShort for n < 4.
[[nodiscard]] WitnessWord sqrt_word(int n);

/// Four-letter unbordered word of length n with at least
/// n - sqrt(3n-3) - 4 holes. Throws TooShort for n < 4.
[[nodiscard]] WitnessWord hb4_witness(int n);

/// The two words of lengths 136 and 139 showing that the hole maximum can
/// jump by more than one when the length grows by one.
[[nodiscard]] std::pair<WitnessWord, WitnessWord> counterexample_words();

}  // namespace unbordered
