#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unbordered {

class Ruler;

/// A symbol is either a letter index in [0, k) or the hole.
using Symbol = std::int32_t;
inline constexpr Symbol hole = -1;

/// Letters are the integers 0..size-1; text I/O renders them as 'a', 'b', ...
/// and the hole as '.'.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::size_t size);

  /// Alphabet spelled by a string of distinct letters in order, e.g. "abc".
  /// Only the prefix form "ab...": the i-th character must be 'a' + i.
  static Alphabet parse(std::string_view letters);

  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] bool contains(Symbol s) const noexcept {
    return s >= 0 && static_cast<std::size_t>(s) < size_;
  }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::size_t size_ = 0;
};

char render_symbol(Symbol s);

class PartialWord {
 public:
  PartialWord() = default;
  /// Throws InvalidParams if a non-hole symbol is outside the alphabet.
  PartialWord(std::vector<Symbol> symbols, Alphabet alphabet);

  /// Parses "ab..c". The alphabet defaults to the smallest prefix alphabet
  /// covering the letters used.
  static PartialWord parse(std::string_view text);
  static PartialWord parse(std::string_view text, Alphabet alphabet);

  [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
  [[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }
  [[nodiscard]] Symbol operator[](std::size_t i) const { return symbols_[i]; }
  [[nodiscard]] bool is_hole(std::size_t i) const { return symbols_[i] == hole; }
  [[nodiscard]] std::span<const Symbol> symbols() const noexcept {
    return symbols_;
  }
  [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] std::size_t hole_count() const noexcept;
  [[nodiscard]] bool is_full() const noexcept { return hole_count() == 0; }

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const PartialWord&, const PartialWord&) = default;

 private:
  std::vector<Symbol> symbols_;
  Alphabet alphabet_;
};

struct BorderReport {
  std::vector<std::size_t> border_lengths;

  [[nodiscard]] bool is_unbordered() const noexcept {
    return border_lengths.empty();
  }
};

/// u ↑ v. Throws LengthMismatch when the lengths differ.
[[nodiscard]] bool compatible(const PartialWord& u, const PartialWord& v);

/// Symbol-level compatibility of two equal-length spans.
[[nodiscard]] bool compatible(std::span<const Symbol> u,
                              std::span<const Symbol> v) noexcept;

/// All border lengths in 1..n-1.
[[nodiscard]] BorderReport borders(const PartialWord& w);

/// Short-circuiting unborderedness test for spans.
[[nodiscard]] bool is_unbordered(std::span<const Symbol> w) noexcept;
[[nodiscard]] bool is_unbordered(const PartialWord& w) noexcept;

/// Letter positions in increasing order.
[[nodiscard]] std::vector<int> domain(const PartialWord& w);

/// The word over |R| letters with mark i carrying the i-th letter and holes
/// elsewhere. Throws IncompleteRuler when R is not complete.
[[nodiscard]] PartialWord word_from_ruler(const Ruler& ruler);

}  // namespace unbordered
