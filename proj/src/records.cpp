#include <fstream>
#include <sstream>

#include "unbordered/cli.hpp"
#include "unbordered/error.hpp"

namespace unbordered {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json witness_to_json(const Witness& w) {
  ordered_json j;
  if (const auto* r = std::get_if<Ruler>(&w)) {
    j["kind"] = "ruler";
    j["marks"] = std::vector<int>(r->marks().begin(), r->marks().end());
  } else if (const auto* p = std::get_if<PartialWord>(&w)) {
    j["kind"] = "word";
    if (p->alphabet().size() <= 26)
      j["text"] = p->to_string();
    else
      j["symbols"] = std::vector<Symbol>(p->symbols().begin(), p->symbols().end());
    j["alphabet"] = p->alphabet().size();
  } else if (const auto* g = std::get_if<Ruler2D>(&w)) {
    j["kind"] = "ruler2d";
    j["width"] = g->width();
    j["height"] = g->height();
    std::vector<std::string> rows;
    std::istringstream lines(g->to_string());
    for (std::string line; std::getline(lines, line);) rows.push_back(line);
    j["rows"] = rows;
  } else {
    j["kind"] = "none";
  }
  return j;
}

Witness witness_from_json(const json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "ruler") return Ruler(j.at("marks").get<std::vector<int>>());
    if (kind == "word") {
      const Alphabet alphabet(j.at("alphabet").get<std::size_t>());
      if (j.contains("text")) return PartialWord::parse(j.at("text").get<std::string>(), alphabet);
      return PartialWord(j.at("symbols").get<std::vector<Symbol>>(), alphabet);
    }
    if (kind == "ruler2d") {
      std::string text;
      for (const auto& row : j.at("rows")) text += row.get<std::string>() + "\n";
      Ruler2D r = Ruler2D::parse(text);
      if (r.width() != j.at("width").get<int>() || r.height() != j.at("height").get<int>())
        throw Error(Errc::ParseError, "ruler2d rows disagree with width/height");
      return r;
    }
    if (kind == "none") return std::monostate{};
    throw Error(Errc::ParseError, "unknown witness kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("malformed witness: ") + e.what());
  }
}

ordered_json record_to_json(const SearchRecord& r, bool with_timing) {
  ordered_json j;
  j["problem"] = to_string(r.problem);
  j["params"] = r.params;
  j["value"] = r.value ? ordered_json(*r.value) : ordered_json(nullptr);
  j["status"] = to_string(r.status);
  j["optimal"] = r.optimal();
  j["witness"] = witness_to_json(r.witness);
  j["nodes_expanded"] = r.nodes_expanded;
  j["tool_version"] = tool_version;
  if (with_timing) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

SearchRecord record_from_json(const json& j) {
  try {
    SearchRecord r{problem_from_string(j.at("problem").get<std::string>()),
                   j.at("params").get<std::vector<long long>>(),
                   std::nullopt,
                   status_from_string(j.at("status").get<std::string>()),
                   witness_from_json(j.at("witness")),
                   j.at("nodes_expanded").get<std::uint64_t>(),
                   j.value("elapsed_seconds", 0.0)};
    if (!j.at("value").is_null()) r.value = j.at("value").get<long long>();
    return r;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("malformed record: ") + e.what());
  }
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {}

void ResultCache::load() {
  if (loaded_) return;
  loaded_ = true;
  std::ifstream in(path_);
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    const json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) continue;
    if (j.value("tool_version", std::string{}) != tool_version) continue;
    try {
      SearchRecord r = record_from_json(j);
      if (!r.optimal()) continue;
      records_.insert_or_assign({r.problem, r.params}, std::move(r));
    } catch (const Error&) {
      continue;
    }
  }
}

std::optional<SearchRecord> ResultCache::lookup(Problem p, const std::vector<long long>& params) {
  std::lock_guard lock(mutex_);
  load();
  const auto it = records_.find({p, params});
  if (it == records_.end() || !verify_record(it->second)) return std::nullopt;
  return it->second;
}

void ResultCache::append(const SearchRecord& record) {
  std::lock_guard lock(mutex_);
  load();
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error(Errc::InvalidParams, "cannot write cache " + path_.string());
  out << record_to_json(record, true).dump() << '\n';
  out.flush();
  if (record.optimal()) records_.insert_or_assign({record.problem, record.params}, record);
}

}  // namespace unbordered
