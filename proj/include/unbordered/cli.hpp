#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "unbordered/search.hpp"

namespace unbordered {

inline constexpr std::string_view tool_version = "1.0.0";

/// index -> value. Indices strictly increase and values are positive; gaps
/// are allowed so that excerpts of a sequence can be ingested.
struct OeisTable {
  long long offset = 0;
  std::map<long long, long long> entries;
};

/// "index value" lines, '#' comments and blank lines ignored. The offset is
/// the first index unless overridden, in which case indices are rebased so
/// that the first one equals the override. ParseError messages carry the
/// 1-based line number.
[[nodiscard]] OeisTable parse_bfile(std::istream& in, std::optional<long long> offset_override = {});
[[nodiscard]] OeisTable ingest_bfile(const std::filesystem::path& path,
                                     std::optional<long long> offset_override = {});

enum class Verdict { Match, Mismatch, NotComputed };
[[nodiscard]] std::string_view to_string(Verdict v) noexcept;

struct OeisRow {
  long long n;
  long long expected;
  std::optional<long long> computed;
  Verdict verdict;
};

struct OeisReport {
  std::vector<OeisRow> rows;
  [[nodiscard]] std::size_t count(Verdict v) const;
  [[nodiscard]] bool ok() const { return count(Verdict::Mismatch) == 0; }
};

/// min_marks for every table index n <= max_n; indices above max_n or runs
/// that exhaust the budget are NotComputed.
[[nodiscard]] OeisReport compare_oeis(const OeisTable& table, long long max_n,
                                      const SearchOptions& options = {});

/// Witness encodings: {"kind":"ruler","marks":[..]}, {"kind":"word",
/// "text":"ab..c","alphabet":k}, {"kind":"ruler2d","width":W,"height":H,
/// "rows":["#..#",..]}, {"kind":"none"}.
[[nodiscard]] nlohmann::ordered_json witness_to_json(const Witness& w);
[[nodiscard]] Witness witness_from_json(const nlohmann::json& j);

/// elapsed_seconds is written only when with_timing is set, so that the
/// default form depends on the inputs alone.
[[nodiscard]] nlohmann::ordered_json record_to_json(const SearchRecord& r, bool with_timing = false);
[[nodiscard]] SearchRecord record_from_json(const nlohmann::json& j);

/// Append-only JSONL store keyed by (problem, params, tool_version). Only
/// optimal records are served, and only after their witness re-verifies.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path);

  [[nodiscard]] std::optional<SearchRecord> lookup(Problem p, const std::vector<long long>& params);
  void append(const SearchRecord& record);

 private:
  void load();

  std::filesystem::path path_;
  std::mutex mutex_;
  bool loaded_ = false;
  std::map<std::pair<Problem, std::vector<long long>>, SearchRecord> records_;
};

/// Exit codes: 0 success, 1 verification failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace unbordered
