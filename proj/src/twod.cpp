#include "unbordered/twod.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <sstream>
#include <exception>
#include <mutex>
#include <thread>
#include <tuple>

#include "unbordered/error.hpp"

namespace unbordered {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\r') continue;
    if (c == '\n') {
      lines.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) lines.push_back(std::move(current));
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

void check_rectangle(const std::vector<std::string>& lines) {
  if (lines.empty()) throw Error(Errc::ParseError, "empty grid");
  for (std::size_t y = 0; y < lines.size(); ++y)
    if (lines[y].size() != lines[0].size() || lines[y].empty())
      throw Error(Errc::ParseError, "grid line " + std::to_string(y + 1) +
                                        " has width " + std::to_string(lines[y].size()) +
                                        ", expected " + std::to_string(lines[0].size()));
}

}  // namespace

Ruler2D::Ruler2D(int width, int height, std::vector<Point> marks)
    : width_(width), height_(height), marks_(std::move(marks)) {
  if (width_ < 1 || height_ < 1)
    throw Error(Errc::InvalidParams, "2D ruler needs positive width and height");
  for (const Point& p : marks_)
    if (p.x < 0 || p.x >= width_ || p.y < 0 || p.y >= height_)
      throw Error(Errc::InvalidParams, "mark (" + std::to_string(p.x) + "," +
                                           std::to_string(p.y) + ") outside the rectangle");
  std::sort(marks_.begin(), marks_.end(),
            [](Point a, Point b) { return std::tie(a.y, a.x) < std::tie(b.y, b.x); });
  if (std::adjacent_find(marks_.begin(), marks_.end()) != marks_.end())
    throw Error(Errc::DuplicateMark, "repeated mark in 2D ruler");
}

Ruler2D Ruler2D::parse(std::string_view text) {
  auto lines = split_lines(text);
  check_rectangle(lines);
  std::vector<Point> marks;
  for (std::size_t y = 0; y < lines.size(); ++y)
    for (std::size_t x = 0; x < lines[y].size(); ++x) {
      char c = lines[y][x];
      if (c == '#')
        marks.push_back({static_cast<int>(x), static_cast<int>(y)});
      else if (c != '.')
        throw Error(Errc::ParseError, "invalid ruler cell '" + std::string(1, c) + "'");
    }
  return Ruler2D(static_cast<int>(lines[0].size()), static_cast<int>(lines.size()),
                 std::move(marks));
}

bool Ruler2D::contains(Point p) const {
  return std::binary_search(
      marks_.begin(), marks_.end(), p,
      [](Point a, Point b) { return std::tie(a.y, a.x) < std::tie(b.y, b.x); });
}

std::string Ruler2D::to_string() const {
  std::string grid(static_cast<std::size_t>(height_) * static_cast<std::size_t>(width_ + 1), '.');
  for (int y = 0; y < height_; ++y) grid[static_cast<std::size_t>(y * (width_ + 1) + width_)] = '\n';
  for (const Point& p : marks_) grid[static_cast<std::size_t>(p.y * (width_ + 1) + p.x)] = '#';
  return grid;
}

VectorCover::VectorCover(int width, int height)
    : width_(width),
      height_(height),
      bits_((static_cast<std::size_t>(2 * width - 1) * static_cast<std::size_t>(height) + 63) / 64) {}

std::size_t VectorCover::index(int dx, int dy) const noexcept {
  if (dy < 0 || (dy == 0 && dx < 0)) {
    dx = -dx;
    dy = -dy;
  }
  return static_cast<std::size_t>(dx + width_ - 1) +
         static_cast<std::size_t>(2 * width_ - 1) * static_cast<std::size_t>(dy);
}

void VectorCover::set(int dx, int dy) noexcept {
  const std::size_t i = index(dx, dy);
  bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
}

bool VectorCover::test(int dx, int dy) const noexcept {
  const std::size_t i = index(dx, dy);
  return (bits_[i >> 6] >> (i & 63)) & 1U;
}

std::size_t VectorCover::count_nonzero() const noexcept {
  std::size_t c = 0;
  for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  // Cells of the stored y = 0 row with dx < 0 are never set (they
  // normalize to dx > 0), so only (0, 0) needs subtracting.
  return c - (test(0, 0) ? 1 : 0);
}

std::size_t VectorCover::required_nonzero() const noexcept {
  const auto w = static_cast<std::size_t>(width_), h = static_cast<std::size_t>(height_);
  return 2 * w * h - w - h;
}

std::vector<Point> VectorCover::missing() const {
  std::vector<Point> out;
  for (int dx = -(width_ - 1); dx <= width_ - 1; ++dx)
    for (int dy = 0; dy < height_; ++dy) {
      if (dy == 0 && dx <= 0) continue;
      if (!test(dx, dy)) out.push_back({dx, dy});
    }
  return out;
}

namespace {

VectorCover cover_of(const Ruler2D& ruler) {
  VectorCover cover(ruler.width(), ruler.height());
  const auto& m = ruler.marks();
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a; b < m.size(); ++b) cover.set(m[b].x - m[a].x, m[b].y - m[a].y);
  return cover;
}

}  // namespace

bool is_complete_2d(const Ruler2D& ruler) {
  if (ruler.size() == 0) throw Error(Errc::EmptyRuler, "2D ruler has no marks");
  const VectorCover cover = cover_of(ruler);
  return cover.count_nonzero() == cover.required_nonzero();
}

std::vector<Point> missing_vectors_2d(const Ruler2D& ruler) {
  if (ruler.size() == 0) throw Error(Errc::EmptyRuler, "2D ruler has no marks");
  return cover_of(ruler).missing();
}

Ruler2D flip_horizontal(const Ruler2D& ruler) {
  std::vector<Point> out;
  for (Point p : ruler.marks()) out.push_back({ruler.width() - 1 - p.x, p.y});
  return Ruler2D(ruler.width(), ruler.height(), std::move(out));
}

Ruler2D flip_vertical(const Ruler2D& ruler) {
  std::vector<Point> out;
  for (Point p : ruler.marks()) out.push_back({p.x, ruler.height() - 1 - p.y});
  return Ruler2D(ruler.width(), ruler.height(), std::move(out));
}

BlockParams default_block_params(int width, int height) {
  const double root4_2 = std::pow(2.0, 0.25);
  auto pick = [&](int side) {
    int v = static_cast<int>(std::floor(std::sqrt(static_cast<double>(side)) / root4_2));
    return std::clamp(v, 1, std::max(1, side - 1));
  };
  return {pick(width), pick(height)};
}

namespace {

void check_block_params(int width, int height, int l, int k) {
  if (width < 2 || height < 2)
    throw Error(Errc::InvalidParams, "2D construction needs W, H >= 2");
  if (l < 1 || l > width - 1 || k < 1 || k > height - 1)
    throw Error(Errc::InvalidParams, "block parameters need 1 <= l <= W-1 and 1 <= k <= H-1");
}

struct Layout {
  std::vector<Point> blocks;   // R1 ∪ R2
  std::vector<Point> lattice;  // R3 ∪ R4
};

Layout layout_sets(int width, int height, int l, int k, BlockLayout layout) {
  const int far_x = width - 1, far_y = height - 1;
  Layout out;
  if (layout == BlockLayout::Literal) {
    for (int y = 1; y <= k - 1; ++y)
      for (int x = 0; x <= l; ++x) {
        out.blocks.push_back({x, y});
        out.blocks.push_back({x + far_x - l, y});
      }
  } else {
    for (int y = 0; y < k; ++y)
      for (int x = 0; x < l; ++x) {
        out.blocks.push_back({x, y});
        out.blocks.push_back({x + width - l, y});
      }
  }
  for (int y = 0; y <= far_y; y += k)
    for (int x = 0; x <= far_x; x += l) out.lattice.push_back({x, y});
  for (int y = 0; y <= far_y; y += k) out.lattice.push_back({far_x, y});
  for (int x = 0; x <= far_x; x += l) out.lattice.push_back({x, far_y});
  out.lattice.push_back({far_x, far_y});
  return out;
}

std::vector<Point> unique_sorted(std::vector<Point> points) {
  std::sort(points.begin(), points.end(),
            [](Point a, Point b) { return std::tie(a.y, a.x) < std::tie(b.y, b.x); });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

}  // namespace

Ruler2D block_layout_2d(int width, int height, int l, int k, BlockLayout layout) {
  check_block_params(width, height, l, k);
  Layout sets = layout_sets(width, height, l, k, layout);
  std::vector<Point> all = std::move(sets.blocks);
  all.insert(all.end(), sets.lattice.begin(), sets.lattice.end());
  return Ruler2D(width, height, unique_sorted(std::move(all)));
}

Ruler2D construct_2d(int width, int height, int l, int k) {
  Ruler2D ruler = block_layout_2d(width, height, l, k, BlockLayout::Corrected);
  auto missing = missing_vectors_2d(ruler);
  if (!missing.empty()) {
    std::ostringstream os;
    os << "construction (" << width << "," << height << "," << l << "," << k
       << ") misses " << missing.size() << " vectors:";
    for (std::size_t i = 0; i < missing.size() && i < 8; ++i)
      os << " (" << missing[i].x << "," << missing[i].y << ")";
    throw Error(Errc::IncompleteConstruction, os.str());
  }
  return ruler;
}

Ruler2D construct_2d(int width, int height) {
  const auto [l, k] = default_block_params(width, height);
  return construct_2d(width, height, l, k);
}

long long construct_2d_mark_bound(int width, int height, int l, int k) {
  const long long cols = (width - 1) / l, rows = (height - 1) / k;
  return 2LL * l * k + (cols + 1) * (rows + 1) + rows + cols + 3;
}

Ruler2D cartesian_2d(const Ruler& ra, const Ruler& rb) {
  if (!is_complete(ra) || !is_complete(rb))
    throw Error(Errc::IncompleteRuler, "cartesian product needs complete rulers");
  std::vector<Point> marks;
  marks.reserve(ra.size() * rb.size());
  for (int y : rb.marks())
    for (int x : ra.marks()) marks.push_back({x, y});
  return Ruler2D(ra.length() + 1, rb.length() + 1, std::move(marks));
}

PartialWord2D::PartialWord2D(int width, int height, std::vector<Symbol> cells, Alphabet alphabet)
    : width_(width), height_(height), cells_(std::move(cells)), alphabet_(alphabet) {
  if (width_ < 1 || height_ < 1)
    throw Error(Errc::InvalidParams, "2D word needs positive width and height");
  if (cells_.size() != static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_))
    throw Error(Errc::InvalidParams, "cell count does not match W x H");
  for (Symbol s : cells_)
    if (s != hole && !alphabet_.contains(s))
      throw Error(Errc::InvalidParams, "2D word symbol outside alphabet");
}

PartialWord2D PartialWord2D::parse(std::string_view text) {
  auto lines = split_lines(text);
  check_rectangle(lines);
  std::vector<Symbol> cells;
  Symbol top = hole;
  for (const auto& line : lines)
    for (char c : line) {
      if (c == '.') {
        cells.push_back(hole);
      } else if (c >= 'a' && c <= 'z') {
        cells.push_back(c - 'a');
        top = std::max<Symbol>(top, c - 'a');
      } else {
        throw Error(Errc::ParseError, "invalid word cell '" + std::string(1, c) + "'");
      }
    }
  return PartialWord2D(static_cast<int>(lines[0].size()), static_cast<int>(lines.size()),
                       std::move(cells), Alphabet(static_cast<std::size_t>(top + 1)));
}

std::size_t PartialWord2D::hole_count() const noexcept {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), hole));
}

std::string PartialWord2D::to_string() const {
  std::string out;
  for (int y = 0; y < height_; ++y) {
    for (int x = 0; x < width_; ++x) out.push_back(render_symbol(at(x, y)));
    out.push_back('\n');
  }
  return out;
}

Ruler2D domain_2d(const PartialWord2D& word) {
  std::vector<Point> marks;
  for (int y = 0; y < word.height(); ++y)
    for (int x = 0; x < word.width(); ++x)
      if (word.at(x, y) != hole) marks.push_back({x, y});
  return Ruler2D(word.width(), word.height(), std::move(marks));
}

namespace {

struct Lettered {
  Point p;
  Symbol letter;
};

std::vector<Lettered> letters_of(const PartialWord2D& word) {
  std::vector<Lettered> out;
  for (int y = 0; y < word.height(); ++y)
    for (int x = 0; x < word.width(); ++x)
      if (Symbol s = word.at(x, y); s != hole) out.push_back({{x, y}, s});
  return out;
}

VectorCover hetero_cover(int width, int height, const std::vector<Lettered>& marks) {
  VectorCover cover(width, height);
  for (std::size_t a = 0; a < marks.size(); ++a)
    for (std::size_t b = a + 1; b < marks.size(); ++b)
      if (marks[a].letter != marks[b].letter)
        cover.set(marks[b].p.x - marks[a].p.x, marks[b].p.y - marks[a].p.y);
  return cover;
}

}  // namespace

bool is_unbordered_2d(const PartialWord2D& word) {
  const auto marks = letters_of(word);
  if (marks.empty()) return false;
  const VectorCover cover = hetero_cover(word.width(), word.height(), marks);
  return cover.count_nonzero() == cover.required_nonzero();
}

BinaryWord2D binary_word_2d(int width, int height) {
  auto [l, k] = default_block_params(width, height);
  // With l = 1 (k = 1) every column (row) is a lattice line, which leaves
  // no hole to realize (W-1, 0) or (0, H-1).
  if (width >= 3) l = std::max(l, 2);
  if (height >= 3) k = std::max(k, 2);
  check_block_params(width, height, l, k);
  const Layout sets = layout_sets(width, height, l, k, BlockLayout::Corrected);

  constexpr Symbol a = 0, b = 1;
  const auto w = static_cast<std::size_t>(width);
  std::vector<Symbol> cells(w * static_cast<std::size_t>(height), hole);
  auto cell = [&](Point p) -> Symbol& {
    return cells[static_cast<std::size_t>(p.y) * w + static_cast<std::size_t>(p.x)];
  };
  for (Point p : sets.lattice) cell(p) = b;
  for (Point p : sets.blocks) cell(p) = a;  // overlaps keep the block letter

  std::vector<Lettered> marks;
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x)
      if (Symbol s = cell({x, y}); s != hole) marks.push_back({{x, y}, s});
  const std::size_t base_marks = marks.size();
  VectorCover cover = hetero_cover(width, height, marks);

  // Holes directly above the two blocks are tried first, then the rest in
  // row-major order.
  std::vector<Point> candidates;
  auto above_blocks = [&](int x, int y) { return y == k && (x < l || x >= width - l); };
  for (int x = 0; x < width; ++x)
    if (above_blocks(x, k)) candidates.push_back({x, k});
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x)
      if (!above_blocks(x, y)) candidates.push_back({x, y});

  auto inside = [&](Point p) { return p.x >= 0 && p.x < width && p.y >= 0 && p.y < height; };
  auto fixes = [&](Point p, Symbol letter, Point v) {
    for (Point q : {Point{p.x + v.x, p.y + v.y}, Point{p.x - v.x, p.y - v.y}})
      if (inside(q) && cell(q) != hole && cell(q) != letter) return true;
    return false;
  };
  auto gain = [&](Point p, Symbol letter) {
    VectorCover probe = cover;
    for (const auto& m : marks)
      if (m.letter != letter) probe.set(p.x - m.p.x, p.y - m.p.y);
    return probe.count_nonzero();
  };

  std::size_t repairs = 0;
  for (auto missing = cover.missing(); !missing.empty(); missing = cover.missing()) {
    const Point v = missing.front();
    bool repaired = false;
    for (Point p : candidates) {
      if (cell(p) != hole) continue;
      const bool fa = fixes(p, a, v), fb = fixes(p, b, v);
      if (!fa && !fb) continue;
      Symbol letter = fa ? a : b;
      if (fa && fb && gain(p, b) > gain(p, a)) letter = b;
      cell(p) = letter;
      for (const auto& m : marks)
        if (m.letter != letter) cover.set(p.x - m.p.x, p.y - m.p.y);
      marks.push_back({p, letter});
      ++repairs;
      repaired = true;
      break;
    }
    // Otherwise two holes p, p + v receive different letters.
    for (std::size_t i = 0; !repaired && i < candidates.size(); ++i) {
      const Point p = candidates[i];
      const Point q{p.x + v.x, p.y + v.y};
      if (cell(p) != hole || !inside(q) || cell(q) != hole) continue;
      const bool swap = gain(p, b) > gain(p, a);
      for (const auto& [pt, letter] : {std::pair{p, swap ? b : a}, std::pair{q, swap ? a : b}}) {
        cell(pt) = letter;
        for (const auto& m : marks)
          if (m.letter != letter) cover.set(pt.x - m.p.x, pt.y - m.p.y);
        marks.push_back({pt, letter});
        ++repairs;
      }
      repaired = true;
    }
    if (!repaired)
      throw Error(Errc::RepairFailed, "no hole realizes vector (" + std::to_string(v.x) + "," +
                                          std::to_string(v.y) + ")");
  }

  PartialWord2D word(width, height, std::move(cells), Alphabet(2));
  if (!is_unbordered_2d(word)) throw std::logic_error("binary 2D word repair left a border");
  return {std::move(word), base_marks, repairs};
}

EnvelopeFit fit_envelope(const std::vector<EnvelopeSample>& samples, double c_prime_cap) {
  const double lead = 2.0 * std::sqrt(2.0);
  double c = 0.0;
  for (const auto& s : samples) {
    const double excess = s.value - lead * std::sqrt(double(s.width) * s.height);
    const double side = std::sqrt(double(s.width)) + std::sqrt(double(s.height));
    c = std::max(c, (excess - c_prime_cap) / side);
  }
  double c_prime = 0.0;
  for (const auto& s : samples) {
    const double excess = s.value - lead * std::sqrt(double(s.width) * s.height);
    const double side = std::sqrt(double(s.width)) + std::sqrt(double(s.height));
    c_prime = std::max(c_prime, excess - c * side);
  }
  return {c, c_prime};
}

std::vector<SweepRow> sweep_2d(int min_side, int max_side, bool with_words, unsigned workers) {
  if (min_side < 2 || max_side < min_side)
    throw Error(Errc::InvalidParams, "sweep needs 2 <= min_side <= max_side");
  std::vector<std::pair<int, int>> sizes;
  for (int w = min_side; w <= max_side; ++w)
    for (int h = min_side; h <= max_side; ++h) sizes.emplace_back(w, h);
  std::vector<SweepRow> rows(sizes.size());
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  auto work = [&] {
    try {
    for (std::size_t i = next++; i < sizes.size(); i = next++) {
      const auto [w, h] = sizes[i];
      SweepRow row{w, h, 0, false, 0, 0, 0, false};
      const Ruler2D ruler = construct_2d(w, h);
      row.ruler_marks = ruler.size();
      row.ruler_complete = is_complete_2d(ruler);
      if (with_words) {
        const BinaryWord2D bw = binary_word_2d(w, h);
        row.word_holes = bw.word.hole_count();
        row.word_letters = static_cast<std::size_t>(w) * static_cast<std::size_t>(h) - row.word_holes;
        row.repair_marks = bw.repair_marks;
        row.word_unbordered = is_unbordered_2d(bw.word);
      }
      rows[i] = row;
    }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = sizes.size();
    }
  };
  workers = std::max(1U, workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace unbordered
