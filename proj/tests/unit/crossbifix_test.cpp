#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "helpers.hpp"
#include "unbordered/constructions.hpp"
#include "unbordered/crossbifix.hpp"
#include "unbordered/error.hpp"
#include "unbordered/search.hpp"

using namespace unbordered;

namespace {

std::set<std::string> texts(const Code& code) {
  std::set<std::string> out;
  for (const auto& w : code.words) out.insert(PartialWord(w, code.alphabet).to_string());
  return out;
}

std::vector<oracle::Cells> cells_of(const Code& code) {
  std::vector<oracle::Cells> out;
  for (const auto& w : code.words) out.emplace_back(w.begin(), w.end());
  return out;
}

// Two grids overlap at shift (dx, dy) when cell (x, y) of a coincides with
// cell (x + dx, y + dy) of b.
bool cross_bifix_free_2d(int w, int h, const std::vector<oracle::Cells>& code) {
  for (const auto& a : code)
    for (const auto& b : code)
      for (int dx = -(w - 1); dx < w; ++dx)
        for (int dy = -(h - 1); dy < h; ++dy) {
          if (dx == 0 && dy == 0) continue;
          bool equal = true;
          for (int y = 0; y < h && equal; ++y)
            for (int x = 0; x < w && equal; ++x) {
              const int x2 = x + dx, y2 = y + dy;
              if (x2 < 0 || x2 >= w || y2 < 0 || y2 >= h) continue;
              equal = a[static_cast<std::size_t>(y * w + x)] == b[static_cast<std::size_t>(y2 * w + x2)];
            }
          if (equal) return false;
        }
  return true;
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InvalidParams;
}

}  // namespace

TEST_SUITE("crossbifix") {

TEST_CASE("code examples") {
  const Alphabet abc = Alphabet::parse("abc");
  CHECK(texts(code_from_word(PartialWord::parse("ab.c"), abc)) ==
        std::set<std::string>{"abac", "abbc", "abcc"});
  const Code full = code_from_word(PartialWord::parse("abc"), abc);
  CHECK(full.size() == 1);
  CHECK(is_cross_bifix_free(full));
  const auto f = fillings(PartialWord::parse(".."), Alphabet(2));
  CHECK(f.materialize().size() == 4);
  CHECK(f.count() == 4);
  std::vector<std::string> order;
  for (const auto& w : f) order.push_back(PartialWord(w, Alphabet(2)).to_string());
  CHECK(order == std::vector<std::string>{"aa", "ab", "ba", "bb"});
}

TEST_CASE("bordered codes are detected") {
  Code c{3, 1, Alphabet(2), {{0, 0, 1}, {0, 1, 1}}};
  CHECK_FALSE(is_cross_bifix_free(c));
  Code ok{3, 1, Alphabet(2), {{0, 0, 1}, {0, 1, 1}}};
  ok.words.pop_back();
  CHECK(is_cross_bifix_free(ok));
  CHECK(is_cross_bifix_free(Code{0, 1, Alphabet(2), {}}));
}

TEST_CASE("codes from every unbordered seed up to length 8 are cross-bifix-free") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= 2; ++k)
      for_each_word(n, k, [&](const PartialWord& w) {
        if (w.is_full() && n > 5) return;
        if (!oracle::unbordered(::cells_of(w))) return;
        const Code code = code_from_word(w, w.alphabet());
        CHECK(code.size() == static_cast<std::size_t>(std::pow(k, w.hole_count())));
        CHECK(oracle::cross_bifix_free(cells_of(code)));
        CHECK(is_cross_bifix_free(code));
        for (const auto& word : code.words)
          CHECK(compatible(PartialWord(word, w.alphabet()), w));
      });
}

TEST_CASE("is_cross_bifix_free matches the pairwise check on arbitrary codes") {
  // All 2- and 3-word binary codes of length 4.
  std::vector<std::vector<Symbol>> all;
  for (int m = 0; m < 16; ++m) all.push_back({m >> 3 & 1, m >> 2 & 1, m >> 1 & 1, m & 1});
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j)
      for (std::size_t l = j; l < all.size(); ++l) {
        const Code c{4, 1, Alphabet(2), {all[i], all[j], all[l]}};
        CHECK(is_cross_bifix_free(c) == oracle::cross_bifix_free(cells_of(c)));
      }
}

TEST_CASE("error codes") {
  CHECK(code_of([] { (void)fillings(PartialWord::parse("ac"), Alphabet(2)); }) == Errc::AlphabetMismatch);
  CHECK(code_of([] { (void)is_cross_bifix_free(Code{2, 1, Alphabet(2), {{0, 1}, {0}}}); }) ==
        Errc::MixedLengths);
  CHECK(code_of([] { (void)code_from_word(PartialWord::parse("a.a"), Alphabet(2)); }) ==
        Errc::BorderedSeed);
  CHECK(code_of([] { (void)code_from_word(hb4_witness(40).word(), Alphabet(4)); }) == Errc::TooLarge);
  CHECK(code_of([] { (void)fillings(PartialWord::parse("a...b"), Alphabet(2)).materialize(4); }) ==
        Errc::TooLarge);
}

TEST_CASE("large codes are sampled") {
  const auto seed = hb4_witness(20).word();
  REQUIRE(seed.hole_count() == 12);
  const auto check = check_code_from_word(seed, Alphabet(4), 1 << 10, 512);
  CHECK(check.size == (std::uint64_t{1} << 24));
  CHECK_FALSE(check.materialized);
  CHECK(check.words_checked == 512);
  CHECK(check.cross_bifix_free);
  CHECK(check.log2_size == doctest::Approx(24.0));

  const auto small = check_code_from_word(PartialWord::parse("ab.c"), Alphabet(3));
  CHECK(small.materialized);
  CHECK(small.words_checked == 3);
  CHECK(small.cross_bifix_free);

  // Counts beyond 2^64 still sample.
  const auto huge = check_code_from_word(hb4_witness(60).word(), Alphabet(4), 1 << 10, 64);
  CHECK(huge.log2_size > 64);
  CHECK(huge.cross_bifix_free);
}

TEST_CASE("binary optimal seeds give codes of size 2^floor(n - 2 sqrt(n - 1))") {
  for (int n : {5, 10, 17, 22}) {
    const auto rec = max_holes(n, 2);
    REQUIRE(rec.optimal());
    const auto& seed = std::get<PartialWord>(rec.witness);
    const auto expected = static_cast<std::size_t>(std::floor(n - 2.0 * std::sqrt(n - 1.0)));
    const auto check = check_code_from_word(seed, Alphabet(2));
    CHECK(check.holes == expected);
    CHECK(check.size == (std::uint64_t{1} << expected));
    CHECK(check.materialized);
    CHECK(check.cross_bifix_free);
  }
}

TEST_CASE("2D codes") {
  const Code single = code_from_word_2d(PartialWord2D::parse("ab\ncc\n"), Alphabet(3));
  CHECK(single.size() == 1);
  CHECK(is_cross_bifix_free(single));
  CHECK(emit_code(single) == "ab\ncc\n");
  CHECK(emit_code(Code{2, 2, Alphabet(2), {{0, 1, 1, 0}, {1, 1, 0, 0}}}) == "ab\nba\n\nbb\naa\n");

  const auto big = binary_word_2d(5, 5).word;
  const Code c2 = code_from_word_2d(big, Alphabet(2));
  CHECK(c2.size() == (std::size_t{1} << big.hole_count()));
  CHECK(is_cross_bifix_free(c2));
  CHECK(cross_bifix_free_2d(5, 5, cells_of(c2)));

  CHECK(code_of([] { (void)code_from_word_2d(PartialWord2D::parse("aa\naa\n"), Alphabet(2)); }) ==
        Errc::BorderedSeed);
}

TEST_CASE("codes from unbordered 3 x 2 and 3 x 3 ternary seeds") {
  int seeds_with_holes = 0;
  const Alphabet abc(3);
  for (const auto [w, h] : {std::pair{3, 2}, std::pair{3, 3}}) {
    const auto cells = static_cast<std::size_t>(w * h);
    std::vector<Symbol> s(cells, hole);
    while (true) {
      const oracle::Cells plain(s.begin(), s.end());
      const auto holes = static_cast<std::size_t>(std::count(s.begin(), s.end(), hole));
      if (holes <= 3 && oracle::unbordered_2d(w, h, plain)) {
        const PartialWord2D seed(w, h, s, abc);
        const Code code = code_from_word_2d(seed, abc);
        CHECK(code.size() == static_cast<std::size_t>(std::pow(3, holes)));
        CHECK(is_cross_bifix_free(code));
        CHECK(cross_bifix_free_2d(w, h, cells_of(code)));
        if (holes > 0) ++seeds_with_holes;
      }
      std::size_t p = 0;
      while (p < s.size() && ++s[p] == 3) s[p++] = hole;
      if (p == s.size()) break;
    }
  }
  CHECK(seeds_with_holes > 0);
}

TEST_CASE("2D check agrees with the shift oracle on all small binary codes") {
  std::vector<std::vector<Symbol>> all;
  for (int m = 0; m < 16; ++m) all.push_back({m >> 3 & 1, m >> 2 & 1, m >> 1 & 1, m & 1});
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j) {
      const Code c{2, 2, Alphabet(2), {all[i], all[j]}};
      CHECK(is_cross_bifix_free(c) == cross_bifix_free_2d(2, 2, cells_of(c)));
    }
}

TEST_CASE("emit_code 1D") {
  const Code c = code_from_word(PartialWord::parse("ab.c"), Alphabet(3));
  CHECK(emit_code(c) == "abac\nabbc\nabcc\n");
}

}  // TEST_SUITE
