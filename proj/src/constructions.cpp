#include "unbordered/constructions.hpp"

#include <cmath>
#include <limits>

#include "unbordered/error.hpp"
#include "unbordered/ruler.hpp"

namespace unbordered {

std::string_view to_string(WitnessSource source) noexcept {
  switch (source) {
    case WitnessSource::Wichmann: return "wichmann";
    case WitnessSource::Sqrt: return "sqrt";
    case WitnessSource::Counterexample: return "counterexample";
  }
  return "unknown";
}

WitnessWord::WitnessWord(PartialWord word, std::size_t claimed_holes, WitnessSource source)
    : word_(std::move(word)), claimed_holes_(claimed_holes), source_(source) {
  if (word_.hole_count() != claimed_holes_)
    throw std::logic_error("witness claims " + std::to_string(claimed_holes_) +
                           " holes but has " + std::to_string(word_.hole_count()));
  if (!is_unbordered(word_))
    throw std::logic_error("witness word is bordered: " + word_.to_string());
}

namespace {

// Recursive-descent expander over the grammar
//   seq  := item*
//   item := atom ('^' digits)?
//   atom := letter | '.' | '(' seq ')'
class PatternExpander {
 public:
  explicit PatternExpander(std::string_view text) : text_(text) {}

  std::vector<Symbol> run() {
    auto out = sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected ')'");
    return out;
  }

 private:
  std::vector<Symbol> sequence() {
    std::vector<Symbol> out;
    while (true) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') return out;
      std::vector<Symbol> atom_symbols = atom();
      long long times = 1;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        skip_space();
        times = number();
      }
      for (long long t = 0; t < times; ++t)
        out.insert(out.end(), atom_symbols.begin(), atom_symbols.end());
    }
  }

  std::vector<Symbol> atom() {
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = sequence();
      if (pos_ == text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    ++pos_;
    if (c == '.') return {hole};
    if (c >= 'a' && c <= 'z') return {static_cast<Symbol>(c - 'a')};
    fail(std::string("invalid character '") + c + "'");
  }

  long long number() {
    std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) fail("exponent too large");
      ++pos_;
    }
    if (start == pos_) fail("expected exponent");
    return v;
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::ParseError, "pattern offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void repeat(std::vector<Symbol>& out, Symbol s, int times) {
  out.insert(out.end(), static_cast<std::size_t>(times), s);
}

constexpr Symbol kA = 0, kB = 1, kC = 2, kD = 3;

std::vector<Symbol> wichmann_symbols(int r, int s) {
  std::vector<Symbol> w;
  w.push_back(kA);
  repeat(w, kB, r);
  repeat(w, hole, r);
  for (int t = 0; t < r; ++t) {
    w.push_back(kA);
    repeat(w, hole, 2 * r);
  }
  w.push_back(kB);
  for (int t = 0; t < s; ++t) {
    repeat(w, hole, 4 * r + 2);
    w.push_back(kC);
  }
  for (int t = 0; t < r + 1; ++t) {
    repeat(w, hole, 2 * r + 1);
    w.push_back(kD);
  }
  repeat(w, kB, r);
  return w;
}

WitnessWord make_wichmann(std::vector<Symbol> symbols, const WichmannParams& p) {
  PartialWord word(std::move(symbols), Alphabet(4));
  const Ruler ruler = extended_wichmann(p);
  if (domain(word) != std::vector<int>(ruler.marks().begin(), ruler.marks().end()))
    throw std::logic_error("Wichmann word domain differs from its ruler");
  const std::size_t holes = word.hole_count();
  return WitnessWord(std::move(word), holes, WitnessSource::Wichmann);
}

}  // namespace

PartialWord expand_pattern(std::string_view pattern, Alphabet alphabet) {
  return PartialWord(PatternExpander(pattern).run(), alphabet);
}

WitnessWord wichmann_word(int r, int s) {
  if (r < 0 || s < 0) throw Error(Errc::InvalidParams, "r and s must be nonnegative");
  return make_wichmann(wichmann_symbols(r, s), WichmannParams{r, s, 0, 0});
}

WitnessWord wichmann_word_ext(int r, int s, int i, int j) {
  if (r < 0 || s < 0 || i < 0)
    throw Error(Errc::InvalidParams, "r, s and i must be nonnegative");
  if (i == 0 && j == 0) return wichmann_word(r, s);
  if (j < 1 || j > r + 1)
    throw Error(Errc::InvalidParams, "extended Wichmann word needs 1 <= j <= r + 1");
  auto w = wichmann_symbols(r, s);
  for (int t = 0; t < i; ++t) {
    repeat(w, hole, r);
    w.push_back(kC);
  }
  repeat(w, hole, j - 1);
  w.push_back(kC);
  return make_wichmann(std::move(w), WichmannParams{r, s, i, j});
}

SqrtSplit sqrt_split(int n) {
  if (n < 4) throw Error(Errc::TooShort, "square-root word needs n >= 4");
  int q = static_cast<int>(std::sqrt(static_cast<double>(n)));
  while (q * q > n) --q;
  while ((q + 1) * (q + 1) <= n) ++q;
  const int tail = n - q - 1;
  return {q, tail / q, tail % q};
}

WitnessWord sqrt_word(int n) {
  const auto [q, t1, t2] = sqrt_split(n);
  std::vector<Symbol> w;
  repeat(w, kA, q - 1);
  w.push_back(kB);
  for (int t = 0; t < t1; ++t) {
    repeat(w, hole, q - 1);
    w.push_back(kC);
  }
  repeat(w, hole, t2);
  w.push_back(kC);
  PartialWord word(std::move(w), Alphabet(3));
  const std::size_t holes = word.hole_count();
  return WitnessWord(std::move(word), holes, WitnessSource::Sqrt);
}

WitnessWord hb4_witness(int n) {
  if (n < 4) throw Error(Errc::TooShort, "HB4 witness needs n >= 4");
  if (n >= 214) {
    const WichmannParams p = *cover_params(n - 1);
    return wichmann_word_ext(p.r, p.s, p.i, p.j);
  }
  return sqrt_word(n);
}

std::pair<WitnessWord, WitnessWord> counterexample_words() {
  const Alphabet abcd(4);
  PartialWord first =
      expand_pattern("a^4 b^3 .^58 a (.^2 c)^3 (.^6 d)^7 (.^3 b)^3", abcd);
  PartialWord second =
      expand_pattern("a b^3 .^3 (a .^6)^3 b (.^14 c)^5 (.^7 d)^4 b^3", abcd);
  return {WitnessWord(std::move(first), 115, WitnessSource::Counterexample),
          WitnessWord(std::move(second), 119, WitnessSource::Counterexample)};
}

}  // namespace unbordered
