#include <doctest.h>

#include <cmath>

#include "../oracles.hpp"
#include "unbordered/bounds.hpp"
#include "unbordered/cli.hpp"
#include "unbordered/error.hpp"
#include "unbordered/ruler.hpp"
#include "unbordered/search.hpp"

using namespace unbordered;

namespace {

const Ruler& ruler_of(const SearchRecord& r) { return std::get<Ruler>(r.witness); }
const PartialWord& word_of(const SearchRecord& r) { return std::get<PartialWord>(r.witness); }

SearchOptions workers(unsigned w) {
  SearchOptions o;
  o.workers = w;
  return o;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("min_marks examples") {
  const auto r6 = min_marks(6);
  CHECK(r6.optimal());
  CHECK(r6.value == 4);
  CHECK(ruler_of(r6) == Ruler::parse("0,1,4,6"));
  const auto r0 = min_marks(0);
  CHECK(r0.value == 1);
  CHECK(ruler_of(r0) == Ruler());
  const auto r22 = min_marks(22);
  CHECK(*r22.value <= static_cast<long long>(wichmann(1, 1).size()));
  CHECK(verify_record(r22));
  CHECK_THROWS_AS((void)min_marks(-1), Error);
}

TEST_CASE("min_marks agrees with subset enumeration and gives the lexicographically first witness") {
  for (int n = 1; n <= 16; ++n) {
    const auto rec = min_marks(n);
    REQUIRE(rec.optimal());
    CHECK(*rec.value == oracle::min_marks(n));
    CHECK(verify_record(rec));
    // No lexicographically smaller ruler with the same mark count is complete.
    const auto witness = ruler_of(rec);
    const int m = static_cast<int>(*rec.value);
    std::vector<int> pick(static_cast<std::size_t>(n - 1), 0);
    std::fill(pick.end() - (m - 2), pick.end(), 1);
    std::optional<std::vector<int>> first;
    do {
      std::vector<int> marks{0};
      for (int i = 0; i < n - 1; ++i)
        if (pick[static_cast<std::size_t>(i)]) marks.push_back(i + 1);
      marks.push_back(n);
      if (oracle::complete_ruler(marks) && (!first || marks < *first)) first = marks;
    } while (std::next_permutation(pick.begin(), pick.end()));
    REQUIRE(first.has_value());
    CHECK(std::vector<int>(witness.marks().begin(), witness.marks().end()) == *first);
  }
}

TEST_CASE("min_marks bounds sandwich") {
  for (int n = 1; n <= 30; ++n) {
    const auto rec = min_marks(n);
    CHECK(usable_lower(leech_lower(n)) <= *rec.value);
    CHECK(*rec.value <= static_cast<long long>(cover_length(n).size()));
  }
}

TEST_CASE("min_marks is deterministic across worker counts") {
  for (int n : {12, 23, 29}) {
    const auto a = min_marks(n, workers(1));
    const auto b = min_marks(n, workers(4));
    CHECK(record_to_json(a).dump() == record_to_json(b).dump());
  }
}

TEST_CASE("min_marks budget fallback") {
  SearchOptions o;
  o.budget.max_nodes = 10;
  const auto rec = min_marks(30, o);
  CHECK(rec.status == SearchStatus::BudgetExceeded);
  CHECK(rec.value == static_cast<long long>(cover_length(30).size()));
  CHECK(verify_record(rec));
  SearchOptions t;
  t.budget.max_seconds = 1e-6;
  const auto timed = min_marks(45, t);
  CHECK(timed.status == SearchStatus::BudgetExceeded);
  CHECK(verify_record(timed));
  // The same node budget gives the same record for any worker count.
  o.workers = 3;
  CHECK(record_to_json(min_marks(30, o)).dump() == record_to_json(rec).dump());
}

TEST_CASE("letter_assignment examples") {
  CHECK(letter_assignment(Ruler::parse("0,1,4,6"), 4).has_value());
  for (int n = 1; n <= 8; ++n) CHECK_FALSE(letter_assignment(Ruler({0, n}), 1).has_value());
  const auto w22 = wichmann(2, 2);
  const auto a = letter_assignment(w22, 4);
  REQUIRE(a.has_value());
  CHECK(a->letters.size() == w22.size());
  CHECK_FALSE(letter_assignment(Ruler::parse("0,1,4"), 4).has_value());
}

TEST_CASE("letter assignments measure every distance with two letters") {
  for (int n = 1; n <= 10; ++n)
    for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
      std::vector<int> m{0};
      for (int i = 1; i < n; ++i)
        if (mask >> (i - 1) & 1U) m.push_back(i);
      m.push_back(n);
      if (!oracle::complete_ruler(m)) continue;
      for (int k = 1; k <= 3; ++k) {
        const auto a = letter_assignment(Ruler(m), k);
        // Independent check: the word with these letters is unbordered.
        oracle::Cells cells(static_cast<std::size_t>(n) + 1, -1);
        bool any = false;
        if (a) {
          for (std::size_t t = 0; t < m.size(); ++t) {
            CHECK(a->letters[t] < k);
            cells[static_cast<std::size_t>(m[t])] = a->letters[t];
          }
          CHECK(oracle::unbordered(cells));
        } else {
          // Exhaustively confirm infeasibility.
          std::vector<int> col(m.size(), 0);
          while (true) {
            for (std::size_t t = 0; t < m.size(); ++t) cells[static_cast<std::size_t>(m[t])] = col[t];
            if (oracle::unbordered(cells)) any = true;
            std::size_t p = 0;
            while (p < col.size() && ++col[p] == k) col[p++] = 0;
            if (p == col.size()) break;
          }
          CHECK_FALSE(any);
        }
      }
    }
}

TEST_CASE("max_holes examples") {
  const auto r22 = max_holes(2, 2);
  CHECK(r22.value == 0);
  const auto r77 = max_holes(7, 7);
  CHECK(r77.value == 3);
  CHECK(domain(word_of(r77)) == std::vector<int>{0, 1, 4, 6});
  CHECK(max_holes(1, 1).value == 0);
  const auto inf = max_holes(5, 1);
  CHECK(inf.status == SearchStatus::Infeasible);
  CHECK_FALSE(inf.value.has_value());
  CHECK(verify_record(inf));
  for (int n = 2; n <= 16; ++n) {
    const long long m1 = *min_marks(n - 1).value;
    const auto rec = max_holes(n, static_cast<int>(m1));
    CHECK(rec.value == n - m1);
    CHECK(verify_record(rec));
  }
}

TEST_CASE("max_holes agrees with the brute force over partial words") {
  for (int n = 1; n <= 10; ++n)
    for (int k = 1; k <= 4; ++k) {
      const auto rec = max_holes(n, k);
      const auto expected = oracle::max_holes(n, k);
      CAPTURE(n);
      CAPTURE(k);
      if (!expected) {
        CHECK(rec.status == SearchStatus::Infeasible);
      } else {
        REQUIRE(rec.optimal());
        CHECK(rec.value == *expected);
        CHECK(oracle::unbordered(oracle::Cells(word_of(rec).symbols().begin(), word_of(rec).symbols().end())));
      }
    }
}

TEST_CASE("binary optimum is floor(n - 2 sqrt(n - 1))") {
  for (int n = 2; n <= 20; ++n)
    CHECK(*max_holes(n, 2).value == static_cast<long long>(std::floor(n - 2.0 * std::sqrt(n - 1.0))));
}

TEST_CASE("max_holes_inf") {
  CHECK(max_holes_inf(7).value == 3);
  CHECK(max_holes_inf(1).value == 0);
  const auto r30 = max_holes_inf(30);
  CHECK(r30.value == 30 - *min_marks(29).value);
  CHECK(r30.value == 21);
  CHECK(verify_record(r30));
}

TEST_CASE("HB3 monotonicity experiment") {
  const auto rep = hb3_monotonicity_experiment(12);
  CHECK(rep.rows.size() == 12);
  CHECK_FALSE(rep.any_violation());
  for (const auto& row : rep.rows) {
    REQUIRE(row.hb3.has_value());
    CHECK(hb3_lower(row.n) <= *row.hb3);
  }
  CHECK(rep.hb4_witness_excess == 1);
  CHECK_FALSE(hb3_monotonicity_experiment(1).any_violation());
  SearchOptions tiny;
  tiny.budget.max_nodes = 1;
  const auto unknown = hb3_monotonicity_experiment(8, tiny);
  CHECK_FALSE(unknown.rows.back().hb3.has_value());
}

TEST_CASE("min_marks_2d") {
  const auto r22 = min_marks_2d(2, 2);
  CHECK(r22.value == 4);
  CHECK(min_marks_2d(1, 1).value == 1);
  for (int w = 1; w <= 4; ++w)
    for (int h = 1; h <= 4; ++h) {
      if (w * h > 16) continue;
      const auto rec = min_marks_2d(w, h);
      REQUIRE(rec.optimal());
      CHECK(*rec.value == oracle::min_marks_2d(w, h));
      CHECK(verify_record(rec));
      const double lower = std::sqrt(4.0 * w * h - 2.0 * (w + h) + 0.25) + 0.5;
      CHECK(*rec.value >= usable_lower(lower));
    }
  CHECK_THROWS_AS((void)min_marks_2d(9, 9), Error);
}

TEST_CASE("verify_record rejects tampered records") {
  auto rec = min_marks(10);
  rec.value = *rec.value - 1;
  CHECK_FALSE(verify_record(rec));
  auto w = max_holes(8, 3);
  w.value = *w.value + 1;
  CHECK_FALSE(verify_record(w));
}

}  // TEST_SUITE
