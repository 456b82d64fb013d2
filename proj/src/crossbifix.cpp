#include "unbordered/crossbifix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "unbordered/error.hpp"

namespace unbordered {

Fillings::Fillings(const PartialWord& seed, const Alphabet& alphabet)
    : width_(static_cast<int>(seed.size())), height_(1), alphabet_(alphabet) {
  init(std::vector<Symbol>(seed.symbols().begin(), seed.symbols().end()));
}

Fillings::Fillings(const PartialWord2D& seed, const Alphabet& alphabet)
    : width_(seed.width()), height_(seed.height()), alphabet_(alphabet) {
  init(seed.cells());
}

void Fillings::init(const std::vector<Symbol>& cells) {
  cells_ = cells;
  for (std::size_t p = 0; p < cells_.size(); ++p) {
    const Symbol s = cells_[p];
    if (s == hole) {
      hole_positions_.push_back(p);
    } else if (!alphabet_.contains(s)) {
      throw Error(Errc::AlphabetMismatch, "seed letter '" + std::string(1, render_symbol(s)) +
                                              "' is not in alphabet \"" +
                                              alphabet_.to_string() + "\"");
    }
  }
  if (!hole_positions_.empty() && alphabet_.size() == 0)
    throw Error(Errc::AlphabetMismatch, "holes cannot be filled from an empty alphabet");
  const std::uint64_t k = alphabet_.size();
  count_ = 1;
  for (std::size_t h = 0; h < hole_positions_.size(); ++h) {
    if (count_ > std::numeric_limits<std::uint64_t>::max() / std::max<std::uint64_t>(k, 1)) {
      count_ = std::numeric_limits<std::uint64_t>::max();
      exact_ = false;
      break;
    }
    count_ *= k;
  }
}

double Fillings::log2_count() const noexcept {
  if (hole_positions_.empty()) return 0.0;
  return static_cast<double>(hole_positions_.size()) *
         std::log2(static_cast<double>(alphabet_.size()));
}

std::vector<Symbol> Fillings::with_digits(const std::vector<Symbol>& digits) const {
  std::vector<Symbol> out = cells_;
  for (std::size_t h = 0; h < hole_positions_.size(); ++h) out[hole_positions_[h]] = digits[h];
  return out;
}

std::vector<Symbol> Fillings::at(std::uint64_t index) const {
  const std::uint64_t k = alphabet_.size();
  std::vector<Symbol> digits(hole_positions_.size(), 0);
  for (std::size_t h = hole_positions_.size(); h-- > 0;) {
    digits[h] = static_cast<Symbol>(index % k);
    index /= k;
  }
  return with_digits(digits);
}

Fillings::iterator::iterator(const Fillings* owner, bool end) : owner_(owner), done_(end) {
  if (!done_) {
    digits_.assign(owner_->holes(), 0);
    current_ = owner_->with_digits(digits_);
  }
}

Fillings::iterator& Fillings::iterator::operator++() {
  const auto k = static_cast<Symbol>(owner_->alphabet().size());
  std::size_t h = digits_.size();
  while (h > 0) {
    --h;
    if (++digits_[h] < k) {
      current_[owner_->hole_positions_[h]] = digits_[h];
      return *this;
    }
    digits_[h] = 0;
    current_[owner_->hole_positions_[h]] = 0;
  }
  done_ = true;
  return *this;
}

Code Fillings::materialize(std::uint64_t limit) const {
  if (!exact_ || count_ > limit)
    throw Error(Errc::TooLarge, "code of 2^" + std::to_string(log2_count()) +
                                    " words exceeds the enumeration limit of " +
                                    std::to_string(limit));
  Code code{width_, height_, alphabet_, {}};
  code.words.reserve(static_cast<std::size_t>(count_));
  for (const auto& w : *this) code.words.push_back(w);
  return code;
}

Fillings fillings(const PartialWord& seed, const Alphabet& alphabet) {
  return Fillings(seed, alphabet);
}

namespace {

struct Rect {
  int x0, x1, y0, y1;  // inclusive
};

std::uint64_t region_hash(const std::vector<Symbol>& w, int width, const Rect& r) {
  std::uint64_t h = 1469598103934665603ULL;
  for (int y = r.y0; y <= r.y1; ++y)
    for (int x = r.x0; x <= r.x1; ++x) {
      h ^= static_cast<std::uint64_t>(w[static_cast<std::size_t>(y * width + x)] + 2);
      h *= 1099511628211ULL;
    }
  return h;
}

bool region_equal(const std::vector<Symbol>& a, const Rect& ra, const std::vector<Symbol>& b,
                  const Rect& rb, int width) {
  for (int y = 0; y <= ra.y1 - ra.y0; ++y)
    for (int x = 0; x <= ra.x1 - ra.x0; ++x)
      if (a[static_cast<std::size_t>((ra.y0 + y) * width + ra.x0 + x)] !=
          b[static_cast<std::size_t>((rb.y0 + y) * width + rb.x0 + x)])
        return false;
  return true;
}

}  // namespace

bool is_cross_bifix_free(const Code& code) {
  const int w = code.width, h = code.height;
  const auto cells = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
  for (const auto& word : code.words)
    if (word.size() != cells)
      throw Error(Errc::MixedLengths, "code words have " + std::to_string(word.size()) +
                                          " cells, expected " + std::to_string(cells));
  if (code.words.empty()) return true;
  std::vector<std::pair<std::uint64_t, std::size_t>> keys(code.words.size());
  // Word c1 at the origin against c2 shifted by v = (dx, dy), v in the upper
  // half-plane; the opposite shifts are the same comparisons with c1, c2
  // swapped.
  for (int dy = 0; dy < h; ++dy) {
    for (int dx = -(w - 1); dx < w; ++dx) {
      if (dy == 0 && dx <= 0) continue;
      const Rect ra{std::max(0, dx), std::min(w - 1, w - 1 + dx), dy, h - 1};
      const Rect rb{std::max(0, -dx), std::min(w - 1, w - 1 - dx), 0, h - 1 - dy};
      for (std::size_t i = 0; i < code.words.size(); ++i)
        keys[i] = {region_hash(code.words[i], w, ra), i};
      std::sort(keys.begin(), keys.end());
      for (const auto& c2 : code.words) {
        const std::uint64_t hb = region_hash(c2, w, rb);
        auto it = std::lower_bound(keys.begin(), keys.end(), std::make_pair(hb, std::size_t{0}));
        for (; it != keys.end() && it->first == hb; ++it)
          if (region_equal(code.words[it->second], ra, c2, rb, w)) return false;
      }
    }
  }
  return true;
}

Code code_from_word(const PartialWord& seed, const Alphabet& alphabet, std::uint64_t limit) {
  if (seed.size() == 0 || !is_unbordered(seed))
    throw Error(Errc::BorderedSeed, "seed \"" + seed.to_string() + "\" is bordered");
  return Fillings(seed, alphabet).materialize(limit);
}

Code code_from_word_2d(const PartialWord2D& seed, const Alphabet& alphabet, std::uint64_t limit) {
  if (!is_unbordered_2d(seed))
    throw Error(Errc::BorderedSeed, "2D seed is bordered");
  return Fillings(seed, alphabet).materialize(limit);
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

CodeCheck check_code_from_word(const PartialWord& seed, const Alphabet& alphabet,
                               std::uint64_t limit, std::uint64_t samples) {
  if (seed.size() == 0 || !is_unbordered(seed))
    throw Error(Errc::BorderedSeed, "seed \"" + seed.to_string() + "\" is bordered");
  const Fillings f(seed, alphabet);
  CodeCheck out{f.holes(), f.count(), f.log2_count(), false, 0, false};
  Code code;
  if (f.count_exact() && f.count() <= limit) {
    code = f.materialize(limit);
    out.materialized = true;
  } else {
    // Evenly strided indices when the count is exact, otherwise fixed
    // pseudo-random digits; both depend only on the seed and `samples`.
    code = Code{f.width(), 1, alphabet, {}};
    const std::uint64_t k = alphabet.size();
    for (std::uint64_t t = 0; t < samples; ++t) {
      if (f.count_exact()) {
        // floor(t * count / samples) without overflow for samples < 2^32
        const std::uint64_t idx =
            t * (f.count() / samples) + t * (f.count() % samples) / samples;
        code.words.push_back(f.at(idx));
      } else {
        std::vector<Symbol> digits(f.holes());
        for (std::size_t h = 0; h < digits.size(); ++h)
          digits[h] = static_cast<Symbol>(splitmix(t * 1'000'003ULL + h) % k);
        code.words.push_back(f.with_digits(digits));
      }
    }
  }
  out.words_checked = code.size();
  out.cross_bifix_free = is_cross_bifix_free(code);
  return out;
}

std::string emit_code(const Code& code) {
  std::string out;
  for (std::size_t i = 0; i < code.words.size(); ++i) {
    const auto& word = code.words[i];
    if (code.height > 1 && i > 0) out += '\n';
    for (int y = 0; y < code.height; ++y) {
      for (int x = 0; x < code.width; ++x)
        out += render_symbol(word[static_cast<std::size_t>(y * code.width + x)]);
      out += '\n';
    }
  }
  return out;
}

}  // namespace unbordered
