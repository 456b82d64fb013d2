#include "unbordered/ruler.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "unbordered/bits.hpp"
#include "unbordered/error.hpp"

namespace unbordered {

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    if (!item.empty() && item.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (item.empty() || ec != std::errc{} || ptr != last)
      throw Error(Errc::ParseError, "bad integer \"" + std::string(item) + "\"");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string join(std::span<const int> values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  return os.str();
}

void append_repeat(std::vector<int>& out, int value, int times) {
  for (int t = 0; t < times; ++t) out.push_back(value);
}

void check_params(const WichmannParams& p) {
  if (p.r < 0 || p.s < 0 || p.i < 0 || p.j < 0)
    throw Error(Errc::InvalidParams, "Wichmann parameters must be nonnegative");
  if (p.j > p.r + 1)
    throw Error(Errc::InvalidParams, "extension step j must be <= r + 1");
  if (p.j == 0 && p.i > 0)
    throw Error(Errc::InvalidParams, "extension with i > 0 needs 1 <= j <= r + 1");
}

}  // namespace

Ruler::Ruler(std::vector<int> marks) : marks_(std::move(marks)) {
  if (marks_.empty()) throw Error(Errc::InvalidParams, "a ruler needs at least one mark");
  std::sort(marks_.begin(), marks_.end());
  if (auto it = std::adjacent_find(marks_.begin(), marks_.end()); it != marks_.end())
    throw Error(Errc::DuplicateMark, "mark " + std::to_string(*it) + " repeated");
  if (marks_.front() != 0)
    throw Error(Errc::InvalidParams, "smallest mark must be 0, got " +
                                         std::to_string(marks_.front()));
}

Ruler Ruler::parse(std::string_view text) {
  if (text.starts_with("d:")) return ruler_from_differences(DifferenceRepresentation::parse(text));
  return Ruler(parse_int_list(text));
}

bool Ruler::contains(int mark) const {
  return std::binary_search(marks_.begin(), marks_.end(), mark);
}

std::string Ruler::to_string() const { return join(marks_); }

Ruler reflect(const Ruler& ruler) {
  std::vector<int> out;
  out.reserve(ruler.size());
  for (int m : ruler.marks()) out.push_back(ruler.length() - m);
  return Ruler(std::move(out));
}

namespace {

DistanceBits measured(std::span<const int> marks) {
  const int n = marks.back();
  DistanceBits bits(static_cast<std::size_t>(n) + 1);
  for (std::size_t a = 0; a < marks.size(); ++a)
    for (std::size_t b = a; b < marks.size(); ++b)
      bits.set(static_cast<std::size_t>(marks[b] - marks[a]));
  return bits;
}

}  // namespace

bool is_complete(std::span<const int> sorted_marks) {
  if (sorted_marks.empty()) return false;
  return measured(sorted_marks).all();
}

bool is_complete(const Ruler& ruler) { return is_complete(ruler.marks()); }

std::vector<int> missing_distances(const Ruler& ruler) {
  auto bits = measured(ruler.marks());
  std::vector<int> out;
  for (std::size_t d = 0; d < bits.size(); ++d)
    if (!bits.test(d)) out.push_back(static_cast<int>(d));
  return out;
}

DifferenceRepresentation DifferenceRepresentation::parse(std::string_view text) {
  if (text.starts_with("d:")) text.remove_prefix(2);
  return DifferenceRepresentation{parse_int_list(text)};
}

std::string DifferenceRepresentation::to_string() const { return "d:" + join(diffs); }

Ruler ruler_from_differences(const DifferenceRepresentation& d) {
  std::vector<long long> sums{0};
  sums.reserve(d.diffs.size() + 1);
  for (int step : d.diffs) {
    if (step == 0) throw Error(Errc::InvalidParams, "zero step in difference representation");
    sums.push_back(sums.back() + step);
  }
  const long long low = *std::min_element(sums.begin(), sums.end());
  std::vector<int> marks;
  marks.reserve(sums.size());
  for (long long s : sums) {
    long long m = s - low;
    if (m > std::numeric_limits<int>::max())
      throw Error(Errc::InvalidParams, "ruler span overflows int");
    marks.push_back(static_cast<int>(m));
  }
  return Ruler(std::move(marks));
}

long long wichmann_length(int r, int s) {
  const long long rr = r, ss = s;
  return 4 * rr * (rr + ss + 2) + 3 * ss + 3;
}

int wichmann_marks(int r, int s) { return 4 * r + s + 3; }

long long extended_wichmann_length(const WichmannParams& p) {
  return wichmann_length(p.r, p.s) + static_cast<long long>(p.i) * (p.r + 1) + p.j;
}

int extended_wichmann_marks(const WichmannParams& p) {
  return wichmann_marks(p.r, p.s) + p.i + (p.j > 0 ? 1 : 0);
}

DifferenceRepresentation wichmann_differences(const WichmannParams& p) {
  check_params(p);
  const int r = p.r;
  std::vector<int> d;
  append_repeat(d, 1, r);
  d.push_back(r + 1);
  append_repeat(d, 2 * r + 1, r);
  append_repeat(d, 4 * r + 3, p.s);
  append_repeat(d, 2 * r + 2, r + 1);
  append_repeat(d, 1, r);
  append_repeat(d, r + 1, p.i);
  if (p.j > 0) d.push_back(p.j);
  return {std::move(d)};
}

DifferenceRepresentation wichmann_differences_symmetric(const WichmannParams& p) {
  check_params(p);
  const int r = p.r;
  std::vector<int> d;
  append_repeat(d, -1, r);
  append_repeat(d, 2 * r + 1, r + 1);
  append_repeat(d, 4 * r + 3, p.s);
  append_repeat(d, 2 * r + 2, r + 1);
  append_repeat(d, 1, r);
  append_repeat(d, r + 1, p.i);
  if (p.j > 0) d.push_back(p.j);
  return {std::move(d)};
}

Ruler extended_wichmann(const WichmannParams& p) {
  Ruler ruler = ruler_from_differences(wichmann_differences(p));
  if (ruler.length() != extended_wichmann_length(p) ||
      static_cast<int>(ruler.size()) != extended_wichmann_marks(p))
    throw std::logic_error("Wichmann ruler disagrees with its closed form");
  return ruler;
}

Ruler extended_wichmann(int r, int s, int i, int j) {
  return extended_wichmann(WichmannParams{r, s, i, j});
}

Ruler wichmann(int r, int s) { return extended_wichmann(WichmannParams{r, s, 0, 0}); }

std::optional<WichmannParams> cover_params(long long n) {
  if (n < wichmann_length(4, 6)) return std::nullopt;
  // l(r, 2r+4) = l(r+1, 2r), so the brackets [l(r,2r+e), l(r,2r+e+1)]
  // for e in [-2, 3] tile every n >= l(4, 6).
  for (int r = 4;; ++r) {
    if (wichmann_length(r, 2 * r - 2) > n) break;
    for (int e = -2; e <= 3; ++e) {
      const int s = 2 * r + e;
      const long long lo = wichmann_length(r, s);
      const long long hi = wichmann_length(r, s + 1);
      if (lo <= n && n <= hi) {
        const long long d = n - lo;
        if (d == 0) return WichmannParams{r, s, 0, 0};
        const long long i = (d + r) / (r + 1) - 1;  // ceil(d/(r+1)) - 1
        const long long j = d - i * (r + 1);
        return WichmannParams{r, s, static_cast<int>(i), static_cast<int>(j)};
      }
    }
  }
  throw std::logic_error("cover_params: no bracket found");
}

Ruler block_ruler(int n, int q) {
  if (n < 1 || q < 1) throw Error(Errc::InvalidParams, "block ruler needs n, q >= 1");
  std::vector<int> marks;
  for (int x = 0; x < q && x <= n; ++x) marks.push_back(x);
  for (int x = q; x <= n; x += q) marks.push_back(x);
  marks.push_back(n);
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
  return Ruler(std::move(marks));
}

namespace {

// Fewest-mark extended Wichmann ruler of length exactly n over all r, s.
std::optional<WichmannParams> best_wichmann_of_length(int n) {
  std::optional<WichmannParams> best;
  int best_marks = std::numeric_limits<int>::max();
  for (int r = 0; wichmann_length(r, 0) <= n; ++r) {
    for (int s = 0; wichmann_length(r, s) <= n; ++s) {
      const long long d = n - wichmann_length(r, s);
      WichmannParams p{r, s, 0, 0};
      if (d > 0) {
        p.i = static_cast<int>((d + r) / (r + 1) - 1);
        p.j = static_cast<int>(d - static_cast<long long>(p.i) * (r + 1));
      }
      if (const int m = extended_wichmann_marks(p); m < best_marks) {
        best_marks = m;
        best = p;
      }
    }
  }
  return best;
}

}  // namespace

Ruler cover_length(int n) {
  if (n < 1) throw Error(Errc::InvalidParams, "cover_length needs n >= 1");
  if (auto p = cover_params(n)) return extended_wichmann(*p);

  // Below l(4,6) = 213: the cheaper of the best block ruler and the best
  // extended Wichmann ruler of this exact length.
  Ruler best = block_ruler(n, static_cast<int>(std::sqrt(static_cast<double>(n))) + 1);
  for (int q = 1; q <= n; ++q) {
    Ruler candidate = block_ruler(n, q);
    if (candidate.size() < best.size()) best = std::move(candidate);
  }
  if (auto p = best_wichmann_of_length(n)) {
    Ruler w = extended_wichmann(*p);
    if (w.size() <= best.size()) best = std::move(w);
  }
  if (!is_complete(best)) throw std::logic_error("cover_length produced an incomplete ruler");
  return best;
}

}  // namespace unbordered
