#include <charconv>
#include <fstream>
#include <istream>

#include "unbordered/cli.hpp"
#include "unbordered/error.hpp"

namespace unbordered {

namespace {

[[noreturn]] void bad_line(std::size_t line, const std::string& what) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

long long parse_int(std::string_view tok, std::size_t line) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    bad_line(line, "'" + std::string(tok) + "' is not an integer");
  return v;
}

}  // namespace

OeisTable parse_bfile(std::istream& in, std::optional<long long> offset_override) {
  OeisTable table;
  std::string raw;
  std::size_t line_no = 0;
  std::optional<long long> prev;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto split = line.find_first_of(" \t");
    if (split == std::string_view::npos) bad_line(line_no, "expected \"index value\"");
    const std::string_view a = trim(line.substr(0, split));
    const std::string_view b = trim(line.substr(split));
    if (b.find_first_of(" \t") != std::string_view::npos) bad_line(line_no, "too many fields");
    const long long index = parse_int(a, line_no);
    const long long value = parse_int(b, line_no);
    if (prev && index <= *prev) bad_line(line_no, "indices must increase");
    if (value <= 0) bad_line(line_no, "values must be positive");
    prev = index;
    table.entries.emplace(index, value);
  }
  if (table.entries.empty()) {
    table.offset = offset_override.value_or(0);
    return table;
  }
  const long long first = table.entries.begin()->first;
  if (offset_override && *offset_override != first) {
    std::map<long long, long long> rebased;
    for (const auto& [k, v] : table.entries) rebased.emplace(k - first + *offset_override, v);
    table.entries = std::move(rebased);
  }
  table.offset = offset_override.value_or(first);
  return table;
}

OeisTable ingest_bfile(const std::filesystem::path& path, std::optional<long long> offset_override) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open b-file " + path.string());
  return parse_bfile(in, offset_override);
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Match: return "match";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::NotComputed: return "not_computed";
  }
  return "unknown";
}

std::size_t OeisReport::count(Verdict v) const {
  std::size_t c = 0;
  for (const auto& r : rows) c += r.verdict == v;
  return c;
}

OeisReport compare_oeis(const OeisTable& table, long long max_n, const SearchOptions& options) {
  OeisReport report;
  for (const auto& [n, expected] : table.entries) {
    OeisRow row{n, expected, std::nullopt, Verdict::NotComputed};
    if (n >= 0 && n <= max_n && n <= 1023) {
      const SearchRecord rec = min_marks(static_cast<int>(n), options);
      if (rec.optimal()) {
        row.computed = rec.value;
        row.verdict = *rec.value == expected ? Verdict::Match : Verdict::Mismatch;
      }
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace unbordered
