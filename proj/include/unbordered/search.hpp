#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "unbordered/partial_word.hpp"
#include "unbordered/ruler.hpp"
#include "unbordered/twod.hpp"

namespace unbordered {

/// Zero means unlimited. Exceeding either limit yields a record flagged
/// BudgetExceeded instead of an exception.
struct SearchBudget {
  std::uint64_t max_nodes = 0;
  double max_seconds = 0.0;
};

struct SearchOptions {
  SearchBudget budget;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 1;
};

enum class Problem { M1, HBk, HBinf, M2 };
enum class SearchStatus { Optimal, BudgetExceeded, Infeasible };

std::string_view to_string(Problem p) noexcept;
std::string_view to_string(SearchStatus s) noexcept;
Problem problem_from_string(std::string_view s);
SearchStatus status_from_string(std::string_view s);

using Witness = std::variant<std::monostate, Ruler, PartialWord, Ruler2D>;

struct SearchRecord {
  Problem problem;
  std::vector<long long> params;
  /// Optimal value, or the best bound known when the budget ran out; empty
  /// when infeasible.
  std::optional<long long> value;
  SearchStatus status = SearchStatus::Optimal;
  Witness witness;
  std::uint64_t nodes_expanded = 0;
  double elapsed_seconds = 0.0;

  [[nodiscard]] bool optimal() const noexcept { return status == SearchStatus::Optimal; }
};

/// Mark -> letter for the marks of a ruler, in mark order.
struct LetterAssignment {
  std::vector<Symbol> letters;
};

/// Exact M1(n) with the lexicographically smallest optimal ruler as witness.
/// Throws InvalidParams for n < 0 or n > 1023.
[[nodiscard]] SearchRecord min_marks(int n, const SearchOptions& options = {});

/// A letter assignment over k letters such that every distance 1..n is
/// measured by two marks with different letters; the lexicographically
/// smallest one in first-use letter order. Empty if none exists.
[[nodiscard]] std::optional<LetterAssignment> letter_assignment(const Ruler& ruler, int k);

/// Exact HB_k(n): the fewest marks m such that some complete ruler of
/// length n-1 with m marks has a valid k-letter assignment; value n - m.
/// Witness is the word built from the lexicographically first such ruler.
[[nodiscard]] SearchRecord max_holes(int n, int k, const SearchOptions& options = {});

/// n - M1(n-1) with witness word_from_ruler of the optimal ruler.
[[nodiscard]] SearchRecord max_holes_inf(int n, const SearchOptions& options = {});

/// Exact M2(W, H) for tiny rectangles; the witness is the lexicographically
/// smallest optimal mark set in row-major cell order.
[[nodiscard]] SearchRecord min_marks_2d(int width, int height, const SearchOptions& options = {});

struct MonotonicityRow {
  int n;
  std::optional<long long> hb3;
  /// HB3(n) > HB3(n-1) + 1; empty if either value is unknown.
  std::optional<bool> violation;
};

struct MonotonicityReport {
  std::vector<MonotonicityRow> rows;
  /// Witness-level jump of the four-letter counterexample pair:
  /// holes(139-word) - holes(136-word) - 3.
  long long hb4_witness_excess;
  [[nodiscard]] bool any_violation() const;
};

/// HB3(n) for n = 1..max_n and the HB3(n+1) <= HB3(n) + 1 check.
[[nodiscard]] MonotonicityReport hb3_monotonicity_experiment(int max_n,
                                                             const SearchOptions& options = {});

/// Re-verifies a record's witness; true when it is valid and achieves the
/// stated value.
[[nodiscard]] bool verify_record(const SearchRecord& record);

}  // namespace unbordered
