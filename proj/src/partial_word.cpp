#include "unbordered/partial_word.hpp"

#include <algorithm>

#include "unbordered/error.hpp"
#include "unbordered/ruler.hpp"

namespace unbordered {

Alphabet::Alphabet(std::size_t size) : size_(size) {}

Alphabet Alphabet::parse(std::string_view letters) {
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] != static_cast<char>('a' + i))
      throw Error(Errc::ParseError,
                  "alphabet must be a prefix of a..z in order, got \"" +
                      std::string(letters) + "\"");
  }
  if (letters.size() > 26)
    throw Error(Errc::ParseError, "alphabet longer than 26 letters");
  return Alphabet(letters.size());
}

std::string Alphabet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < size_; ++i)
    out.push_back(render_symbol(static_cast<Symbol>(i)));
  return out;
}

char render_symbol(Symbol s) {
  if (s == hole) return '.';
  if (s < 0 || s >= 26)
    throw Error(Errc::InvalidParams,
                "letter index " + std::to_string(s) + " has no text form");
  return static_cast<char>('a' + s);
}

PartialWord::PartialWord(std::vector<Symbol> symbols, Alphabet alphabet)
    : symbols_(std::move(symbols)), alphabet_(alphabet) {
  for (Symbol s : symbols_) {
    if (s != hole && !alphabet_.contains(s))
      throw Error(Errc::InvalidParams,
                  "symbol " + std::to_string(s) + " outside alphabet of size " +
                      std::to_string(alphabet_.size()));
  }
}

namespace {

std::vector<Symbol> parse_symbols(std::string_view text) {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.') {
      out.push_back(hole);
    } else if (c >= 'a' && c <= 'z') {
      out.push_back(c - 'a');
    } else {
      throw Error(Errc::ParseError, "invalid character '" + std::string(1, c) +
                                        "' at offset " + std::to_string(i));
    }
  }
  return out;
}

}  // namespace

PartialWord PartialWord::parse(std::string_view text) {
  auto symbols = parse_symbols(text);
  Symbol top = hole;
  for (Symbol s : symbols) top = std::max(top, s);
  return PartialWord(std::move(symbols), Alphabet(static_cast<std::size_t>(top + 1)));
}

PartialWord PartialWord::parse(std::string_view text, Alphabet alphabet) {
  auto symbols = parse_symbols(text);
  for (Symbol s : symbols)
    if (s != hole && !alphabet.contains(s))
      throw Error(Errc::AlphabetMismatch,
                  std::string("letter '") + render_symbol(s) +
                      "' not in alphabet \"" + alphabet.to_string() + "\"");
  return PartialWord(std::move(symbols), alphabet);
}

std::size_t PartialWord::hole_count() const noexcept {
  return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), hole));
}

std::string PartialWord::to_string() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) out.push_back(render_symbol(s));
  return out;
}

bool compatible(std::span<const Symbol> u, std::span<const Symbol> v) noexcept {
  if (u.size() != v.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != hole && v[i] != hole && u[i] != v[i]) return false;
  return true;
}

bool compatible(const PartialWord& u, const PartialWord& v) {
  if (u.size() != v.size())
    throw Error(Errc::LengthMismatch,
                "compatibility needs equal lengths, got " +
                    std::to_string(u.size()) + " and " + std::to_string(v.size()));
  return compatible(u.symbols(), v.symbols());
}

BorderReport borders(const PartialWord& w) {
  BorderReport report;
  const auto s = w.symbols();
  const std::size_t n = s.size();
  for (std::size_t len = 1; len < n; ++len) {
    if (compatible(s.first(len), s.last(len))) report.border_lengths.push_back(len);
  }
  return report;
}

bool is_unbordered(std::span<const Symbol> w) noexcept {
  const std::size_t n = w.size();
  // shift n - len: the border of length len pairs position i with i + shift
  for (std::size_t shift = 1; shift < n; ++shift) {
    bool separated = false;
    for (std::size_t i = 0; i + shift < n; ++i) {
      Symbol a = w[i], b = w[i + shift];
      if (a != hole && b != hole && a != b) {
        separated = true;
        break;
      }
    }
    if (!separated) return false;
  }
  return true;
}

bool is_unbordered(const PartialWord& w) noexcept { return is_unbordered(w.symbols()); }

std::vector<int> domain(const PartialWord& w) {
  std::vector<int> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!w.is_hole(i)) out.push_back(static_cast<int>(i));
  return out;
}

PartialWord word_from_ruler(const Ruler& ruler) {
  if (!is_complete(ruler))
    throw Error(Errc::IncompleteRuler, "ruler " + ruler.to_string() + " is not complete");
  std::vector<Symbol> symbols(static_cast<std::size_t>(ruler.length()) + 1, hole);
  Symbol next = 0;
  for (int m : ruler.marks()) symbols[static_cast<std::size_t>(m)] = next++;
  return PartialWord(std::move(symbols), Alphabet(ruler.size()));
}

}  // namespace unbordered
