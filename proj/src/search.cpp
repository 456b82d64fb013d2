#include "unbordered/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

#include "unbordered/bits.hpp"
#include "unbordered/constructions.hpp"
#include "unbordered/error.hpp"

namespace unbordered {

std::string_view to_string(Problem p) noexcept {
  switch (p) {
    case Problem::M1: return "M1";
    case Problem::HBk: return "HBk";
    case Problem::HBinf: return "HBinf";
    case Problem::M2: return "M2";
  }
  return "unknown";
}

std::string_view to_string(SearchStatus s) noexcept {
  switch (s) {
    case SearchStatus::Optimal: return "optimal";
    case SearchStatus::BudgetExceeded: return "budget_exceeded";
    case SearchStatus::Infeasible: return "infeasible";
  }
  return "unknown";
}

Problem problem_from_string(std::string_view s) {
  for (Problem p : {Problem::M1, Problem::HBk, Problem::HBinf, Problem::M2})
    if (to_string(p) == s) return p;
  throw Error(Errc::ParseError, "unknown problem '" + std::string(s) + "'");
}

SearchStatus status_from_string(std::string_view s) {
  for (SearchStatus st :
       {SearchStatus::Optimal, SearchStatus::BudgetExceeded, SearchStatus::Infeasible})
    if (to_string(st) == s) return st;
  throw Error(Errc::ParseError, "unknown status '" + std::string(s) + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

unsigned resolve_workers(unsigned w) {
  if (w != 0) return w;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

// ---------------------------------------------------------------------------
// Letter assignment

struct Pair {
  int lo;
  int hi;
};

std::optional<std::vector<Symbol>> assign_letters(std::span<const int> marks, int k,
                                                  std::uint64_t& nodes) {
  const int m = static_cast<int>(marks.size());
  if (m == 0 || k < 1) return std::nullopt;
  const int len = marks.back() - marks.front();
  // pairs[d] lists the mark-index pairs measuring d; due[t] the distances
  // whose pairs are all assigned once mark t is.
  std::vector<std::vector<Pair>> pairs(static_cast<std::size_t>(len) + 1);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < j; ++i)
      pairs[static_cast<std::size_t>(marks[j] - marks[i])].push_back({i, j});
  std::vector<std::vector<int>> due(static_cast<std::size_t>(m));
  for (int d = 1; d <= len; ++d) {
    const auto& ps = pairs[static_cast<std::size_t>(d)];
    if (ps.empty()) return std::nullopt;
    int last = 0;
    for (const Pair& p : ps) last = std::max(last, p.hi);
    due[static_cast<std::size_t>(last)].push_back(d);
  }
  for (auto& list : due)
    std::stable_sort(list.begin(), list.end(), [&](int a, int b) {
      return pairs[static_cast<std::size_t>(a)].size() < pairs[static_cast<std::size_t>(b)].size();
    });

  std::vector<Symbol> letters(static_cast<std::size_t>(m), 0);
  auto satisfied = [&](int t) {
    for (int d : due[static_cast<std::size_t>(t)]) {
      bool ok = false;
      for (const Pair& p : pairs[static_cast<std::size_t>(d)])
        if (letters[static_cast<std::size_t>(p.lo)] != letters[static_cast<std::size_t>(p.hi)]) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
    return true;
  };

  std::function<bool(int, int)> place = [&](int t, int used) -> bool {
    if (t == m) return true;
    const int top = std::min(k - 1, used);
    for (int c = 0; c <= top; ++c) {
      ++nodes;
      letters[static_cast<std::size_t>(t)] = c;
      if (!satisfied(t)) continue;
      if (place(t + 1, std::max(used, c + 1))) return true;
    }
    return false;
  };
  ++nodes;
  letters[0] = 0;
  if (!satisfied(0) || !place(1, 1)) return std::nullopt;
  return letters;
}

// ---------------------------------------------------------------------------
// Ruler enumeration shared by min_marks and max_holes.

enum class Outcome { Found, Exhausted, Aborted };

struct BranchResult {
  Outcome outcome = Outcome::Exhausted;
  bool time_abort = false;
  std::uint64_t nodes = 0;
  std::vector<int> marks;
  std::vector<Symbol> letters;
};

// Accepts or rejects a complete ruler; may fill letters and add nodes.
using LeafFn = std::function<bool(std::span<const int>, BranchResult&)>;

struct Limits {
  std::uint64_t node_cap = 0;  // 0: unlimited
  std::optional<Clock::time_point> deadline;
  const std::atomic<std::size_t>* best_branch = nullptr;
  std::size_t branch = 0;
};

template <std::size_t Words>
class RulerDfs {
  using Bits = FixedBits<Words>;

 public:
  RulerDfs(int n, const LeafFn& leaf, const Limits& limits, BranchResult& out)
      : n_(n), leaf_(leaf), limits_(limits), out_(out) {}

  // Marks {0, 1, n} plus `first` and `rest` more interior marks above it.
  void run(int first, int rest) {
    Bits s{}, srev{}, cover{};
    marks_ = {0, 1};
    for (int a : {0, 1, n_}) {
      s.set(static_cast<std::size_t>(a));
      srev.set(static_cast<std::size_t>(n_ - a));
    }
    for (int d : {0, 1, n_ - 1, n_}) cover.set(static_cast<std::size_t>(d));
    out_.outcome = Outcome::Exhausted;
    if (first < 0) {
      if (tick()) return;
      leaf(cover);
      return;
    }
    add_mark(first, s, srev, cover);
    marks_.push_back(first);
    if (tick()) return;
    dfs(first, rest, s, srev, cover, 4);
  }

 private:
  void add_mark(int y, Bits& s, Bits& srev, Bits& cover) const {
    cover.or_shifted_right(srev, static_cast<std::size_t>(n_ - y));
    cover.or_shifted_right(s, static_cast<std::size_t>(y));
    s.set(static_cast<std::size_t>(y));
    srev.set(static_cast<std::size_t>(n_ - y));
  }

  // True when the branch must stop.
  bool tick() {
    ++out_.nodes;
    if (limits_.node_cap != 0 && out_.nodes > limits_.node_cap) {
      out_.outcome = Outcome::Aborted;
      return true;
    }
    if ((out_.nodes & 0xFFF) == 0) {
      if (limits_.deadline && Clock::now() > *limits_.deadline) {
        out_.outcome = Outcome::Aborted;
        out_.time_abort = true;
        return true;
      }
      if (limits_.best_branch && limits_.best_branch->load(std::memory_order_relaxed) < limits_.branch) {
        out_.outcome = Outcome::Aborted;
        return true;
      }
    }
    return false;
  }

  bool leaf(const Bits& cover) {
    if (cover.count() != n_ + 1) return false;
    std::vector<int> full = marks_;
    full.push_back(n_);
    if (!leaf_(full, out_)) return false;
    out_.marks = std::move(full);
    out_.outcome = Outcome::Found;
    return true;
  }

  // p counts placed marks including n; returns true to stop the branch.
  bool dfs(int last, int remaining, const Bits& s, const Bits& srev, const Bits& cover, int p) {
    if (remaining == 0) return leaf(cover);
    const int missing = n_ + 1 - cover.count();
    if (missing > remaining * p + remaining * (remaining - 1) / 2) return false;
    // Distances >= n - last can only be measured by an old mark and a new one.
    const int far = (last + 1) - cover.count_range(static_cast<std::size_t>(n_ - last),
                                                   static_cast<std::size_t>(n_));
    if (far > remaining * (p - 1)) return false;
    for (int y = last + 1; y <= n_ - remaining; ++y) {
      if (tick()) return true;
      Bits s2 = s, srev2 = srev, cover2 = cover;
      add_mark(y, s2, srev2, cover2);
      marks_.push_back(y);
      const bool stop = dfs(y, remaining - 1, s2, srev2, cover2, p + 1);
      marks_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  int n_;
  const LeafFn& leaf_;
  const Limits& limits_;
  BranchResult& out_;
  std::vector<int> marks_;
};

void run_branch(int n, int first, int rest, const LeafFn& leaf, const Limits& limits,
                BranchResult& out) {
  if (n <= 63) RulerDfs<1>(n, leaf, limits, out).run(first, rest);
  else if (n <= 127) RulerDfs<2>(n, leaf, limits, out).run(first, rest);
  else if (n <= 255) RulerDfs<4>(n, leaf, limits, out).run(first, rest);
  else if (n <= 511) RulerDfs<8>(n, leaf, limits, out).run(first, rest);
  else RulerDfs<16>(n, leaf, limits, out).run(first, rest);
}

// Runs branch(i) for i in [0, count) on a worker pool and returns the
// outcomes of the branches up to and including the first success. Branches
// past a known success are cancelled; they never influence the result.
std::vector<BranchResult> run_level(std::size_t count, unsigned workers,
                                    const std::function<void(std::size_t, const Limits&,
                                                             BranchResult&)>& branch,
                                    Limits base) {
  std::vector<BranchResult> results(count);
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count || i > best.load()) return;
        Limits lim = base;
        lim.best_branch = &best;
        lim.branch = i;
        branch(i, lim, results[i]);
        if (results[i].outcome == Outcome::Found) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      best.store(0);
    }
  };
  const unsigned n_workers = std::min<std::size_t>(resolve_workers(workers), std::max<std::size_t>(count, 1));
  if (n_workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_workers);
    for (unsigned t = 0; t < n_workers; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  const std::size_t stop = best.load();
  if (stop < count) results.resize(stop + 1);
  return results;
}

struct EnumResult {
  std::optional<BranchResult> found;
  int marks = 0;
  bool exceeded = false;
  std::uint64_t nodes = 0;
};

int pair_bound(long long distances) {
  int m = 1;
  while (static_cast<long long>(m) * (m - 1) / 2 < distances) ++m;
  return m;
}

// Lexicographically first complete ruler of length n (n >= 2) accepted by
// the leaf, over mark counts from the pair bound up to max_marks.
EnumResult enumerate_rulers(int n, int max_marks, const LeafFn& leaf,
                            const SearchOptions& options, Clock::time_point t0) {
  EnumResult res;
  Limits base;
  if (options.budget.max_seconds > 0)
    base.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(options.budget.max_seconds));
  for (int m = std::max(3, pair_bound(n)); m <= max_marks; ++m) {
    if (options.budget.max_nodes != 0) {
      if (res.nodes >= options.budget.max_nodes) {
        res.exceeded = true;
        return res;
      }
      base.node_cap = options.budget.max_nodes - res.nodes;
    }
    const int interior = m - 3;
    std::size_t count = 1;
    if (interior > 0) count = static_cast<std::size_t>(n - interior - 1);
    auto branch = [&](std::size_t i, const Limits& lim, BranchResult& out) {
      if (interior == 0) run_branch(n, -1, 0, leaf, lim, out);
      else run_branch(n, static_cast<int>(i) + 2, interior - 1, leaf, lim, out);
    };
    auto results = run_level(count, options.workers, branch, base);
    for (auto& r : results) {
      res.nodes += r.nodes;
      if (r.outcome == Outcome::Aborted) res.exceeded = true;
    }
    if (res.exceeded) return res;
    if (!results.empty() && results.back().outcome == Outcome::Found) {
      res.found = std::move(results.back());
      res.marks = m;
      return res;
    }
  }
  return res;
}

PartialWord word_with_letters(int n, std::span<const int> marks, std::span<const Symbol> letters,
                              int k) {
  std::vector<Symbol> cells(static_cast<std::size_t>(n), hole);
  for (std::size_t t = 0; t < marks.size(); ++t)
    cells[static_cast<std::size_t>(marks[t])] = letters[t];
  return PartialWord(std::move(cells), Alphabet(static_cast<std::size_t>(k)));
}

// Rulers of length <= 1 have no interior choice.
std::optional<std::vector<int>> trivial_ruler(int n) {
  if (n == 0) return std::vector<int>{0};
  if (n == 1) return std::vector<int>{0, 1};
  return std::nullopt;
}

}  // namespace

std::optional<LetterAssignment> letter_assignment(const Ruler& ruler, int k) {
  std::uint64_t nodes = 0;
  auto letters = assign_letters(ruler.marks(), k, nodes);
  if (!letters) return std::nullopt;
  return LetterAssignment{std::move(*letters)};
}

SearchRecord min_marks(int n, const SearchOptions& options) {
  if (n < 0 || n > 1023) throw Error(Errc::InvalidParams, "min_marks needs 0 <= n <= 1023");
  const auto t0 = Clock::now();
  SearchRecord rec{Problem::M1, {n}, std::nullopt, SearchStatus::Optimal, {}, 0, 0.0};
  if (auto t = trivial_ruler(n)) {
    rec.value = static_cast<long long>(t->size());
    rec.witness = Ruler(*t);
    rec.nodes_expanded = 1;
    rec.elapsed_seconds = seconds_since(t0);
    return rec;
  }
  const LeafFn accept = [](std::span<const int>, BranchResult&) { return true; };
  auto res = enumerate_rulers(n, n + 1, accept, options, t0);
  rec.nodes_expanded = res.nodes;
  if (res.found) {
    rec.value = res.marks;
    rec.witness = Ruler(res.found->marks);
  } else {
    const Ruler fallback = cover_length(n);
    rec.status = SearchStatus::BudgetExceeded;
    rec.value = static_cast<long long>(fallback.size());
    rec.witness = fallback;
  }
  rec.elapsed_seconds = seconds_since(t0);
  return rec;
}

SearchRecord max_holes(int n, int k, const SearchOptions& options) {
  if (n < 1 || k < 1) throw Error(Errc::InvalidParams, "max_holes needs n >= 1 and k >= 1");
  if (n > 1024) throw Error(Errc::InvalidParams, "max_holes needs n <= 1024");
  const auto t0 = Clock::now();
  SearchRecord rec{Problem::HBk, {n, k}, std::nullopt, SearchStatus::Optimal, {}, 0, 0.0};
  const int len = n - 1;
  const int alphabet = std::min(k, n);
  if (auto t = trivial_ruler(len)) {
    rec.nodes_expanded = 1;
    std::uint64_t nodes = 0;
    if (auto letters = assign_letters(*t, k, nodes)) {
      rec.value = n - static_cast<long long>(t->size());
      rec.witness = word_with_letters(n, *t, *letters, alphabet);
    } else {
      rec.status = SearchStatus::Infeasible;
    }
    rec.nodes_expanded += nodes;
    rec.elapsed_seconds = seconds_since(t0);
    return rec;
  }
  if (k == 1) {
    // Distance n - 1 is measured only by the two end marks.
    rec.status = SearchStatus::Infeasible;
    rec.elapsed_seconds = seconds_since(t0);
    return rec;
  }
  const LeafFn colorable = [k](std::span<const int> marks, BranchResult& out) {
    auto letters = assign_letters(marks, k, out.nodes);
    if (!letters) return false;
    out.letters = std::move(*letters);
    return true;
  };
  auto res = enumerate_rulers(len, len + 1, colorable, options, t0);
  rec.nodes_expanded = res.nodes;
  if (res.found) {
    rec.value = n - res.marks;
    rec.witness = word_with_letters(n, res.found->marks, res.found->letters, alphabet);
  } else {
    rec.status = SearchStatus::BudgetExceeded;
    if (k >= 3 && n >= 4) {
      const WitnessWord w = k >= 4 ? hb4_witness(n) : sqrt_word(n);
      rec.value = static_cast<long long>(w.holes());
      rec.witness = w.word();
    }
  }
  rec.elapsed_seconds = seconds_since(t0);
  return rec;
}

SearchRecord max_holes_inf(int n, const SearchOptions& options) {
  if (n < 1) throw Error(Errc::InvalidParams, "max_holes_inf needs n >= 1");
  const auto t0 = Clock::now();
  SearchRecord m1 = min_marks(n - 1, options);
  SearchRecord rec{Problem::HBinf, {n}, std::nullopt, m1.status, {}, m1.nodes_expanded, 0.0};
  const auto& ruler = std::get<Ruler>(m1.witness);
  rec.value = n - static_cast<long long>(ruler.size());
  rec.witness = word_from_ruler(ruler);
  rec.elapsed_seconds = seconds_since(t0);
  return rec;
}

namespace {

class GridDfs {
 public:
  GridDfs(int width, int height, std::uint64_t node_cap, std::optional<Clock::time_point> deadline)
      : w_(width), h_(height), node_cap_(node_cap), deadline_(deadline) {}

  // Lexicographically first complete set of `m` cells containing `forced`.
  bool solve(const std::vector<int>& forced, int m) {
    chosen_ = forced;
    VectorCover cover(w_, h_);
    for (std::size_t a = 0; a < forced.size(); ++a)
      for (std::size_t b = 0; b < a; ++b) measure(cover, forced[a], forced[b]);
    ++nodes;
    return dfs(-1, m - static_cast<int>(forced.size()), cover);
  }

  std::uint64_t nodes = 0;
  bool aborted = false;
  std::vector<int> chosen_;

 private:
  void measure(VectorCover& cover, int a, int b) const {
    cover.set(a % w_ - b % w_, a / w_ - b / w_);
  }

  bool dfs(int last, int remaining, const VectorCover& cover) {
    const long long missing =
        static_cast<long long>(cover.required_nonzero()) - static_cast<long long>(cover.count_nonzero());
    if (remaining == 0) return missing == 0;
    const long long p = static_cast<long long>(chosen_.size());
    if (missing > remaining * p + static_cast<long long>(remaining) * (remaining - 1) / 2) return false;
    const int cells = w_ * h_;
    for (int c = last + 1; c < cells; ++c) {
      if (std::find(chosen_.begin(), chosen_.end(), c) != chosen_.end()) continue;
      ++nodes;
      if ((node_cap_ != 0 && nodes > node_cap_) ||
          ((nodes & 0xFFF) == 0 && deadline_ && Clock::now() > *deadline_)) {
        aborted = true;
        return false;
      }
      VectorCover next = cover;
      for (int a : chosen_) measure(next, c, a);
      chosen_.push_back(c);
      if (dfs(c, remaining - 1, next)) return true;
      chosen_.pop_back();
      if (aborted) return false;
    }
    return false;
  }

  int w_;
  int h_;
  std::uint64_t node_cap_;
  std::optional<Clock::time_point> deadline_;
};

}  // namespace

SearchRecord min_marks_2d(int width, int height, const SearchOptions& options) {
  if (width < 1 || height < 1) throw Error(Errc::InvalidParams, "min_marks_2d needs W, H >= 1");
  if (width * height > 64) throw Error(Errc::TooLarge, "min_marks_2d is limited to W*H <= 64");
  const auto t0 = Clock::now();
  SearchRecord rec{Problem::M2, {width, height}, std::nullopt, SearchStatus::Optimal, {}, 0, 0.0};
  std::optional<Clock::time_point> deadline;
  if (options.budget.max_seconds > 0)
    deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                        std::chrono::duration<double>(options.budget.max_seconds));
  // (W-1, H-1) and (W-1, 1-H) are each measured by one pair of corners only.
  std::vector<int> forced = {0, width - 1, (height - 1) * width, height * width - 1};
  std::sort(forced.begin(), forced.end());
  forced.erase(std::unique(forced.begin(), forced.end()), forced.end());
  const long long required = 2LL * width * height - width - height;
  std::uint64_t nodes = 0;
  for (int m = std::max<int>(static_cast<int>(forced.size()), pair_bound(required));
       m <= width * height; ++m) {
    std::uint64_t cap = 0;
    if (options.budget.max_nodes != 0) {
      if (nodes >= options.budget.max_nodes) break;
      cap = options.budget.max_nodes - nodes;
    }
    GridDfs dfs(width, height, cap, deadline);
    const bool found = dfs.solve(forced, m);
    nodes += dfs.nodes;
    if (dfs.aborted) break;
    if (found) {
      std::vector<Point> pts;
      for (int c : dfs.chosen_) pts.push_back({c % width, c / width});
      rec.value = m;
      rec.witness = Ruler2D(width, height, std::move(pts));
      rec.nodes_expanded = nodes;
      rec.elapsed_seconds = seconds_since(t0);
      return rec;
    }
  }
  rec.status = SearchStatus::BudgetExceeded;
  rec.nodes_expanded = nodes;
  const Ruler2D fallback = cartesian_2d(width == 1 ? Ruler() : cover_length(width - 1),
                                        height == 1 ? Ruler() : cover_length(height - 1));
  rec.value = static_cast<long long>(fallback.size());
  rec.witness = fallback;
  rec.elapsed_seconds = seconds_since(t0);
  return rec;
}

bool MonotonicityReport::any_violation() const {
  return std::any_of(rows.begin(), rows.end(),
                     [](const MonotonicityRow& r) { return r.violation.value_or(false); });
}

MonotonicityReport hb3_monotonicity_experiment(int max_n, const SearchOptions& options) {
  MonotonicityReport report;
  std::optional<long long> prev;
  for (int n = 1; n <= max_n; ++n) {
    const SearchRecord rec = max_holes(n, 3, options);
    MonotonicityRow row{n, std::nullopt, std::nullopt};
    if (rec.optimal()) row.hb3 = rec.value;
    if (row.hb3 && prev) row.violation = *row.hb3 > *prev + 1;
    prev = row.hb3;
    report.rows.push_back(row);
  }
  const auto [first, second] = counterexample_words();
  report.hb4_witness_excess = static_cast<long long>(second.holes()) -
                              static_cast<long long>(first.holes()) - 3;
  return report;
}

bool verify_record(const SearchRecord& record) {
  if (record.status == SearchStatus::Infeasible)
    return !record.value && std::holds_alternative<std::monostate>(record.witness);
  if (!record.value) return std::holds_alternative<std::monostate>(record.witness) &&
                            record.status == SearchStatus::BudgetExceeded;
  const long long value = *record.value;
  switch (record.problem) {
    case Problem::M1: {
      const auto* r = std::get_if<Ruler>(&record.witness);
      return r && record.params.size() == 1 && r->length() == record.params[0] &&
             is_complete(*r) && static_cast<long long>(r->size()) == value;
    }
    case Problem::HBk:
    case Problem::HBinf: {
      const auto* w = std::get_if<PartialWord>(&record.witness);
      if (!w || record.params.empty()) return false;
      if (static_cast<long long>(w->size()) != record.params[0]) return false;
      if (record.problem == Problem::HBk &&
          (record.params.size() != 2 || static_cast<long long>(w->alphabet().size()) > record.params[1]))
        return false;
      return is_unbordered(*w) && static_cast<long long>(w->hole_count()) == value;
    }
    case Problem::M2: {
      const auto* r = std::get_if<Ruler2D>(&record.witness);
      return r && record.params.size() == 2 && r->width() == record.params[0] &&
             r->height() == record.params[1] && is_complete_2d(*r) &&
             static_cast<long long>(r->size()) == value;
    }
  }
  return false;
}

}  // namespace unbordered
