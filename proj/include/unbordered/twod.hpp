#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "unbordered/partial_word.hpp"
#include "unbordered/ruler.hpp"

namespace unbordered {

struct Point {
  int x = 0;
  int y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Marks inside the rectangle {0..width-1} x {0..height-1}, kept sorted
/// row-major (by y, then x) and distinct.
class Ruler2D {
 public:
  Ruler2D(int width, int height, std::vector<Point> marks);

  /// H lines of W characters, '#' for a mark and '.' otherwise.
  static Ruler2D parse(std::string_view text);

  [[nodiscard]] int width() const noexcept { return width_; }
  [[nodiscard]] int height() const noexcept { return height_; }
  [[nodiscard]] const std::vector<Point>& marks() const noexcept { return marks_; }
  [[nodiscard]] std::size_t size() const noexcept { return marks_.size(); }
  [[nodiscard]] bool contains(Point p) const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Ruler2D&, const Ruler2D&) = default;

 private:
  int width_;
  int height_;
  std::vector<Point> marks_;
};

/// Coverage of the difference vectors (x, y) with |x| <= W-1, |y| <= H-1.
/// Only the half-plane y > 0 or (y = 0 and x >= 0) is stored since
/// measuring v also measures -v.
class VectorCover {
 public:
  VectorCover(int width, int height);

  void set(int dx, int dy) noexcept;
  [[nodiscard]] bool test(int dx, int dy) const noexcept;
  /// Number of covered nonzero vectors in the half-plane.
  [[nodiscard]] std::size_t count_nonzero() const noexcept;
  /// 2WH - W - H
  [[nodiscard]] std::size_t required_nonzero() const noexcept;
  /// Uncovered nonzero half-plane vectors, ordered by (x, y).
  [[nodiscard]] std::vector<Point> missing() const;

 private:
  [[nodiscard]] std::size_t index(int dx, int dy) const noexcept;

  int width_;
  int height_;
  std::vector<std::uint64_t> bits_;
};

/// Throws EmptyRuler on a ruler without marks.
[[nodiscard]] bool is_complete_2d(const Ruler2D& ruler);
[[nodiscard]] std::vector<Point> missing_vectors_2d(const Ruler2D& ruler);

/// Mirror images of a 2D ruler inside its rectangle.
[[nodiscard]] Ruler2D flip_horizontal(const Ruler2D& ruler);
[[nodiscard]] Ruler2D flip_vertical(const Ruler2D& ruler);

struct BlockParams {
  int l;
  int k;
};

/// l = floor(sqrt(W) / 2^(1/4)), k likewise with H, clamped to
/// [1, W-1] and [1, H-1].
[[nodiscard]] BlockParams default_block_params(int width, int height);

enum class BlockLayout {
  /// R1 = {0..l} x {1..k-1}, R2 = R1 + (W-1-l, 0): the text read literally.
  /// It leaves vectors with y = 0 (mod k) unmeasured and is kept only to
  /// document that.
  Literal,
  /// R1 = {0..l-1} x {0..k-1}, R2 = R1 + (W-l, 0): |R1| = |R2| = lk.
  Corrected,
};

/// R1 ∪ R2 ∪ R3 ∪ R4 with R3 the (l, k) lattice inside the rectangle and R4
/// the far column and row of lattice points plus the far corner. No
/// completeness check.
[[nodiscard]] Ruler2D block_layout_2d(int width, int height, int l, int k,
                                      BlockLayout layout);

/// The block/lattice construction with the corrected layout, verified by
/// is_complete_2d. Throws InvalidParams for out-of-range parameters and
/// IncompleteConstruction (listing the missing vectors) if the result is
/// not complete.
[[nodiscard]] Ruler2D construct_2d(int width, int height, int l, int k);
[[nodiscard]] Ruler2D construct_2d(int width, int height);

/// Upper bound on |construct_2d(W, H, l, k)| counted set by set:
/// 2lk + (floor((W-1)/l)+1)(floor((H-1)/k)+1) + floor((H-1)/k) +
/// floor((W-1)/l) + 3.
[[nodiscard]] long long construct_2d_mark_bound(int width, int height, int l, int k);

/// Product set Ra x Rb. Throws IncompleteRuler if either input is incomplete.
[[nodiscard]] Ruler2D cartesian_2d(const Ruler& ra, const Ruler& rb);

class PartialWord2D {
 public:
  PartialWord2D(int width, int height, std::vector<Symbol> cells, Alphabet alphabet);

  /// H lines of W characters over [a-z] and '.'.
  static PartialWord2D parse(std::string_view text);

  [[nodiscard]] int width() const noexcept { return width_; }
  [[nodiscard]] int height() const noexcept { return height_; }
  [[nodiscard]] Symbol at(int x, int y) const {
    return cells_[static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
                  static_cast<std::size_t>(x)];
  }
  [[nodiscard]] const std::vector<Symbol>& cells() const noexcept { return cells_; }
  [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] std::size_t hole_count() const noexcept;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const PartialWord2D&, const PartialWord2D&) = default;

 private:
  int width_;
  int height_;
  std::vector<Symbol> cells_;
  Alphabet alphabet_;
};

[[nodiscard]] Ruler2D domain_2d(const PartialWord2D& word);

/// Domain complete and every nonzero vector realized by two marks carrying
/// different letters.
[[nodiscard]] bool is_unbordered_2d(const PartialWord2D& word);

struct BinaryWord2D {
  PartialWord2D word;
  std::size_t base_marks;
  std::size_t repair_marks;
};

/// Letter a on R1 ∪ R2, letter b on the lattice sets, then extra marks until
/// the word is unbordered: one mark where that suffices, else a pair p, p + v
/// with different letters. Blocks are at least 2 x 2 when W, H >= 3. Throws
/// InvalidParams unless W, H >= 2, and RepairFailed when no hole can realize
/// a missing vector. That happens on some grids with W or H <= 4, including
/// 2 x 2, 2 x 3 and 3 x 3, where no binary unbordered word exists at all.
[[nodiscard]] BinaryWord2D binary_word_2d(int width, int height);

/// Smallest c and then c' with value_i <= 2*sqrt(2)*sqrt(W_i H_i) +
/// c (sqrt W_i + sqrt H_i) + c' for all samples, c' capped at c_prime_cap
/// while c is fitted.
struct EnvelopeFit {
  double c;
  double c_prime;
};

struct EnvelopeSample {
  int width;
  int height;
  double value;
};

[[nodiscard]] EnvelopeFit fit_envelope(const std::vector<EnvelopeSample>& samples,
                                       double c_prime_cap);

struct SweepRow {
  int width;
  int height;
  std::size_t ruler_marks;
  bool ruler_complete;
  std::size_t word_letters;
  std::size_t word_holes;
  std::size_t repair_marks;
  bool word_unbordered;
};

/// construct_2d and binary_word_2d over the grid of sizes, one task per
/// (W, H). Rows are ordered by (W, H) independent of the worker count.
[[nodiscard]] std::vector<SweepRow> sweep_2d(int min_side, int max_side, bool with_words,
                                             unsigned workers);

}  // namespace unbordered
