#include <doctest.h>

#include "helpers.hpp"
#include "unbordered/error.hpp"
#include "unbordered/partial_word.hpp"
#include "unbordered/ruler.hpp"

using namespace unbordered;

TEST_SUITE("partial_word") {

TEST_CASE("compatibility examples and non-transitivity") {
  const auto abc = PartialWord::parse("abc");
  const auto a_c = PartialWord::parse("a.c");
  const auto cc = PartialWord::parse(".cc", Alphabet(3));
  CHECK(compatible(abc, a_c));
  CHECK(compatible(cc, a_c));
  CHECK_FALSE(compatible(cc, abc));
  CHECK(compatible(PartialWord::parse(""), PartialWord::parse("")));
  CHECK_THROWS_AS((void)compatible(abc, PartialWord::parse("ab")), Error);
}

TEST_CASE("compatibility is reflexive and symmetric") {
  for (int n = 0; n <= 4; ++n)
    for_each_word(n, 2, [&](const PartialWord& u) {
      CHECK(compatible(u, u));
      for_each_word(n, 2, [&](const PartialWord& v) {
        CHECK(compatible(u, v) == compatible(v, u));
      });
    });
}

TEST_CASE("border examples") {
  CHECK(is_unbordered(PartialWord::parse("ab.c")));
  const auto r = borders(PartialWord::parse("a.b"));
  CHECK(r.border_lengths == std::vector<std::size_t>{2});
  CHECK_FALSE(r.is_unbordered());
  for (const char* w : {".a", ".ab", ".bca", "..a"}) {
    const auto b = borders(PartialWord::parse(w));
    REQUIRE_FALSE(b.border_lengths.empty());
    CHECK(b.border_lengths.front() == 1);
  }
  CHECK(is_unbordered(PartialWord::parse(".")));
  CHECK(is_unbordered(PartialWord::parse("a")));
  CHECK(is_unbordered(PartialWord::parse("")));
}

TEST_CASE("domain examples") {
  CHECK(domain(PartialWord::parse("a.c")) == std::vector<int>{0, 2});
  CHECK(domain(PartialWord::parse("..", Alphabet(1))).empty());
  CHECK(domain(PartialWord::parse("abc")) == std::vector<int>{0, 1, 2});
}

TEST_CASE("word_from_ruler examples") {
  const auto w = word_from_ruler(Ruler::parse("0,1,4,6"));
  CHECK(w.to_string() == "ab..c.d");
  CHECK(is_unbordered(w));
  CHECK(word_from_ruler(Ruler()).to_string() == "a");
  const auto grid = word_from_ruler(Ruler::parse("0,1,3,6,13,20,24,28,29"));
  CHECK(grid.size() == 30);
  CHECK(grid.hole_count() == 21);
  CHECK(is_unbordered(grid));
  CHECK_THROWS_AS((void)word_from_ruler(Ruler::parse("0,1,4")), Error);
}

TEST_CASE("parsing and rendering") {
  CHECK(PartialWord::parse("ab..c").alphabet().size() == 3);
  CHECK(PartialWord::parse("ab..c").to_string() == "ab..c");
  CHECK(PartialWord::parse("ab..c").hole_count() == 2);
  CHECK_THROWS_AS((void)PartialWord::parse("ab#"), Error);
  try {
    (void)PartialWord::parse("abd", Alphabet::parse("abc"));
    FAIL("expected AlphabetMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AlphabetMismatch);
  }
  CHECK_THROWS_AS((void)Alphabet::parse("ac"), Error);
}

TEST_CASE("borders agree with the direct definition and with the shift form") {
  for (int n = 0; n <= 7; ++n)
    for_each_word(n, 3, [&](const PartialWord& w) {
      const bool o = oracle::unbordered(cells_of(w));
      CHECK(borders(w).is_unbordered() == o);
      CHECK(is_unbordered(w) == o);
      CHECK(w.hole_count() + domain(w).size() == w.size());
    });
}

TEST_CASE("unbordered words of length >= 2 have complete domains") {
  // 1..3 letters, lengths 2..10
  std::size_t seen = 0;
  for (int k = 1; k <= 3; ++k)
    for (int n = 2; n <= 10; ++n)
      for_each_word(n, k, [&](const PartialWord& w) {
        if (!is_unbordered(w)) return;
        ++seen;
        const auto d = domain(w);
        REQUIRE(d.size() >= 2);
        CHECK(d.front() == 0);
        CHECK(d.back() == n - 1);
        CHECK(oracle::complete_ruler(d));
      });
  CHECK(seen > 0);
}

TEST_CASE("complete rulers of length <= 12 give unbordered words") {
  for (int n = 1; n <= 12; ++n) {
    for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
      std::vector<int> marks{0};
      for (int i = 1; i < n; ++i)
        if (mask >> (i - 1) & 1U) marks.push_back(i);
      marks.push_back(n);
      if (!oracle::complete_ruler(marks)) continue;
      const auto w = word_from_ruler(Ruler(marks));
      CHECK(oracle::unbordered(cells_of(w)));
      CHECK(domain(w) == marks);
    }
  }
}

}  // TEST_SUITE
