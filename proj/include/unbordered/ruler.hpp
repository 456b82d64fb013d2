#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unbordered {

/// Sorted distinct marks, the smallest being 0; the largest is the length.
class Ruler {
 public:
  Ruler() : marks_{0} {}
  /// Sorts the input. Throws DuplicateMark on repeated marks and
  /// InvalidParams when the set is empty or its minimum is not 0.
  explicit Ruler(std::vector<int> marks);

  /// "0,1,4,6" or a difference representation "d:1,2,3,7,4,4,1".
  static Ruler parse(std::string_view text);

  [[nodiscard]] int length() const noexcept { return marks_.back(); }
  [[nodiscard]] std::size_t size() const noexcept { return marks_.size(); }
  [[nodiscard]] std::span<const int> marks() const noexcept { return marks_; }
  [[nodiscard]] bool contains(int mark) const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Ruler&, const Ruler&) = default;
  friend auto operator<=>(const Ruler&, const Ruler&) = default;

 private:
  std::vector<int> marks_;
};

/// {n - m : m in R}
[[nodiscard]] Ruler reflect(const Ruler& ruler);

[[nodiscard]] bool is_complete(const Ruler& ruler);
[[nodiscard]] bool is_complete(std::span<const int> sorted_marks);

/// Distances in 0..n no pair of marks measures, ascending.
[[nodiscard]] std::vector<int> missing_distances(const Ruler& ruler);

/// Nonzero steps whose partial sums (with a leading 0) are the marks up to
/// translation; negative steps are allowed.
struct DifferenceRepresentation {
  std::vector<int> diffs;

  static DifferenceRepresentation parse(std::string_view text);
  [[nodiscard]] std::string to_string() const;
};

/// Throws DuplicateMark when two partial sums coincide and InvalidParams
/// on a zero step.
[[nodiscard]] Ruler ruler_from_differences(const DifferenceRepresentation& d);

struct WichmannParams {
  int r = 0;
  int s = 0;
  int i = 0;
  int j = 0;

  friend bool operator==(const WichmannParams&, const WichmannParams&) = default;
};

/// 4r(r+s+2) + 3s + 3
[[nodiscard]] long long wichmann_length(int r, int s);
/// 4r + s + 3
[[nodiscard]] int wichmann_marks(int r, int s);
[[nodiscard]] long long extended_wichmann_length(const WichmannParams& p);
[[nodiscard]] int extended_wichmann_marks(const WichmannParams& p);

/// (1^r, r+1, (2r+1)^r, (4r+3)^s, (2r+2)^(r+1), 1^r [, (r+1)^i, j])
[[nodiscard]] DifferenceRepresentation wichmann_differences(
    const WichmannParams& p);
/// ((-1)^r, (2r+1)^(r+1), (4r+3)^s, (2r+2)^(r+1), 1^r [, (r+1)^i, j])
[[nodiscard]] DifferenceRepresentation wichmann_differences_symmetric(
    const WichmannParams& p);

[[nodiscard]] Ruler wichmann(int r, int s);

/// Throws InvalidParams unless r, s, i >= 0 and either (i, j) = (0, 0) or
/// 1 <= j <= r + 1.
[[nodiscard]] Ruler extended_wichmann(int r, int s, int i, int j);
[[nodiscard]] Ruler extended_wichmann(const WichmannParams& p);

/// Extended Wichmann parameters of length exactly n with at most
/// sqrt(3n) + 4 marks, chosen as r >= 4, s = 2r + e, e in [-2, 3].
/// Empty for n < 213.
[[nodiscard]] std::optional<WichmannParams> cover_params(long long n);

/// {0..q-1} ∪ {multiples of q up to n} ∪ {n}
[[nodiscard]] Ruler block_ruler(int n, int q);

/// A complete ruler of length n (n >= 1) with at most sqrt(3n) + 4 marks.
[[nodiscard]] Ruler cover_length(int n);

}  // namespace unbordered
