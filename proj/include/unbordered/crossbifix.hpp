#pragma once

#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "unbordered/partial_word.hpp"
#include "unbordered/twod.hpp"

namespace unbordered {

inline constexpr std::uint64_t default_code_limit = std::uint64_t{1} << 20;

/// Full words of one shape; a 1D code has height 1.
struct Code {
  int width = 0;
  int height = 1;
  Alphabet alphabet;
  std::vector<std::vector<Symbol>> words;

  [[nodiscard]] std::size_t size() const noexcept { return words.size(); }
};

/// All hole fillings of a seed. Filling number t writes the base-|A| digits
/// of t into the holes, the leftmost (row-major first) hole most significant,
/// so iteration runs through letters in alphabet order.
class Fillings {
 public:
  /// Throws AlphabetMismatch when the seed uses a letter outside `alphabet`.
  Fillings(const PartialWord& seed, const Alphabet& alphabet);
  Fillings(const PartialWord2D& seed, const Alphabet& alphabet);

  [[nodiscard]] int width() const noexcept { return width_; }
  [[nodiscard]] int height() const noexcept { return height_; }
  [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] std::size_t holes() const noexcept { return hole_positions_.size(); }
  /// |A|^holes; saturates at UINT64_MAX.
  [[nodiscard]] std::uint64_t count() const noexcept { return count_; }
  [[nodiscard]] bool count_exact() const noexcept { return exact_; }
  [[nodiscard]] double log2_count() const noexcept;

  /// Requires index < count().
  [[nodiscard]] std::vector<Symbol> at(std::uint64_t index) const;
  /// Filling with hole h set to digits[h].
  [[nodiscard]] std::vector<Symbol> with_digits(const std::vector<Symbol>& digits) const;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = std::vector<Symbol>;
    using difference_type = std::ptrdiff_t;
    using pointer = const value_type*;
    using reference = const value_type&;

    iterator() = default;
    iterator(const Fillings* owner, bool end);
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.digits_ == b.digits_);
    }

   private:
    const Fillings* owner_ = nullptr;
    std::vector<Symbol> digits_;
    std::vector<Symbol> current_;
    bool done_ = true;
  };

  [[nodiscard]] iterator begin() const { return iterator(this, false); }
  [[nodiscard]] iterator end() const { return iterator(this, true); }

  /// Every filling as a Code; TooLarge when count() > limit.
  [[nodiscard]] Code materialize(std::uint64_t limit = default_code_limit) const;

 private:
  void init(const std::vector<Symbol>& cells);

  int width_ = 0;
  int height_ = 1;
  Alphabet alphabet_;
  std::vector<Symbol> cells_;
  std::vector<std::size_t> hole_positions_;
  std::uint64_t count_ = 1;
  bool exact_ = true;
};

[[nodiscard]] Fillings fillings(const PartialWord& seed, const Alphabet& alphabet);

/// No word agrees with any word (itself included) on a nonempty proper
/// overlap. In 1D: prefix_l(c1) != suffix_l(c2) for all l in 1..n-1. In 2D
/// the overlaps are those of the nonzero shift vectors. Throws MixedLengths
/// when the words differ in size.
[[nodiscard]] bool is_cross_bifix_free(const Code& code);

/// Throws BorderedSeed unless the seed is unbordered and TooLarge when the
/// code has more than `limit` words.
[[nodiscard]] Code code_from_word(const PartialWord& seed, const Alphabet& alphabet,
                                  std::uint64_t limit = default_code_limit);
[[nodiscard]] Code code_from_word_2d(const PartialWord2D& seed, const Alphabet& alphabet,
                                     std::uint64_t limit = default_code_limit);

struct CodeCheck {
  std::size_t holes;
  std::uint64_t size;  // saturated
  double log2_size;
  bool materialized;
  std::uint64_t words_checked;
  bool cross_bifix_free;
};

/// Builds L(seed) and checks it. Codes up to `limit` words are checked in
/// full; larger ones on `samples` evenly strided fillings.
[[nodiscard]] CodeCheck check_code_from_word(const PartialWord& seed, const Alphabet& alphabet,
                                             std::uint64_t limit = default_code_limit,
                                             std::uint64_t samples = 4096);

/// One word per line (1D) or grids separated by blank lines (2D).
[[nodiscard]] std::string emit_code(const Code& code);

}  // namespace unbordered
