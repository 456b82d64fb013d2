#pragma once

// Brute-force reference implementations. None of these call into the
// library; they work on plain vectors with -1 as the hole.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Cells = std::vector<int>;

inline bool compatible(const Cells& a, std::size_t ia, const Cells& b, std::size_t ib,
                       std::size_t len) {
  for (std::size_t t = 0; t < len; ++t) {
    const int x = a[ia + t], y = b[ib + t];
    if (x != -1 && y != -1 && x != y) return false;
  }
  return true;
}

/// No proper prefix compatible with the suffix of the same length.
inline bool unbordered(const Cells& w) {
  for (std::size_t len = 1; len < w.size(); ++len)
    if (compatible(w, 0, w, w.size() - len, len)) return false;
  return true;
}

inline bool complete_ruler(const std::vector<int>& marks) {
  if (marks.empty()) return false;
  const int lo = *std::min_element(marks.begin(), marks.end());
  const int hi = *std::max_element(marks.begin(), marks.end());
  std::set<int> d;
  for (int a : marks)
    for (int b : marks)
      if (b >= a) d.insert(b - a);
  return static_cast<int>(d.size()) == hi - lo + 1;
}

/// Smallest mark count of a complete ruler of length n, by subset size.
inline int min_marks(int n) {
  if (n == 0) return 1;
  for (int m = 2; m <= n + 1; ++m) {
    std::vector<int> pick(static_cast<std::size_t>(n - 1), 0);
    std::fill(pick.end() - (m - 2), pick.end(), 1);
    do {
      std::vector<int> marks{0, n};
      for (int i = 0; i < n - 1; ++i)
        if (pick[static_cast<std::size_t>(i)]) marks.push_back(i + 1);
      if (complete_ruler(marks)) return m;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return -1;
}

/// Largest hole count of an unbordered length-n partial word over k letters
/// with at least one letter. Scans hole sets from the largest size down and,
/// for each, all letter fillings up to renaming.
inline std::optional<int> max_holes(int n, int k) {
  for (int h = n - 1; h >= 0; --h) {
    std::vector<int> is_hole(static_cast<std::size_t>(n), 0);
    std::fill(is_hole.end() - h, is_hole.end(), 1);
    do {
      Cells w(static_cast<std::size_t>(n), -1);
      std::vector<std::size_t> letters;
      for (std::size_t p = 0; p < w.size(); ++p)
        if (!is_hole[p]) letters.push_back(p);
      bool found = false;
      std::function<void(std::size_t, int)> fill = [&](std::size_t t, int used) {
        if (found) return;
        if (t == letters.size()) {
          found = unbordered(w);
          return;
        }
        for (int c = 0; c < std::min(k, used + 1); ++c) {
          w[letters[t]] = c;
          fill(t + 1, std::max(used, c + 1));
          if (found) return;
        }
        w[letters[t]] = -1;
      };
      fill(0, 0);
      if (found) return h;
    } while (std::next_permutation(is_hole.begin(), is_hole.end()));
  }
  return std::nullopt;
}

/// Every nonzero vector (dx, dy), |dx| < W, |dy| < H, is a difference of two
/// marks.
inline bool complete_2d(int w, int h, const std::vector<std::pair<int, int>>& marks) {
  std::set<std::pair<int, int>> d;
  for (const auto& a : marks)
    for (const auto& b : marks) d.insert({a.first - b.first, a.second - b.second});
  for (int dx = -(w - 1); dx < w; ++dx)
    for (int dy = -(h - 1); dy < h; ++dy)
      if ((dx != 0 || dy != 0) && !d.count({dx, dy})) return false;
  return true;
}

/// Fewest marks of a complete W x H ruler by subset size (W*H <= 20).
inline int min_marks_2d(int w, int h) {
  const int cells = w * h;
  for (int m = 1; m <= cells; ++m) {
    for (std::uint32_t mask = 0; mask < (1U << cells); ++mask) {
      if (__builtin_popcount(mask) != m) continue;
      std::vector<std::pair<int, int>> marks;
      for (int c = 0; c < cells; ++c)
        if (mask >> c & 1U) marks.push_back({c % w, c / w});
      if (complete_2d(w, h, marks)) return m;
    }
  }
  return -1;
}

/// 2D partial word unbordered: for every nonzero shift some overlapping pair
/// of letter cells disagrees.
inline bool unbordered_2d(int w, int h, const Cells& cells) {
  bool any_letter = false;
  for (int c : cells) any_letter = any_letter || c != -1;
  if (!any_letter) return false;
  for (int dx = -(w - 1); dx < w; ++dx)
    for (int dy = -(h - 1); dy < h; ++dy) {
      if (dx == 0 && dy == 0) continue;
      bool separated = false;
      for (int y = 0; y < h && !separated; ++y)
        for (int x = 0; x < w && !separated; ++x) {
          const int x2 = x + dx, y2 = y + dy;
          if (x2 < 0 || x2 >= w || y2 < 0 || y2 >= h) continue;
          const int a = cells[static_cast<std::size_t>(y * w + x)];
          const int b = cells[static_cast<std::size_t>(y2 * w + x2)];
          separated = a != -1 && b != -1 && a != b;
        }
      if (!separated) return false;
    }
  return true;
}

/// Pairwise check over all code words and proper overlap lengths.
inline bool cross_bifix_free(const std::vector<Cells>& code) {
  for (const auto& a : code)
    for (const auto& b : code)
      for (std::size_t len = 1; len < a.size(); ++len)
        if (std::equal(a.begin(), a.begin() + static_cast<long>(len), b.end() - static_cast<long>(len)))
          return false;
  return true;
}

}  // namespace oracle
