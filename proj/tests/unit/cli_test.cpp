#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "unbordered/cli.hpp"
#include "unbordered/error.hpp"

using namespace unbordered;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "unbordered");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path data(const char* name) { return std::filesystem::path(TEST_DATA_DIR) / name; }

std::filesystem::path temp_file(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / ("unbordered_test_" + name);
  std::filesystem::remove(p);
  return p;
}

OeisTable table_of(const std::string& text, std::optional<long long> offset = {}) {
  std::istringstream in(text);
  return parse_bfile(in, offset);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("b-file ingest") {
  const auto cited = ingest_bfile(data("min_marks_cited.txt"));
  CHECK(cited.offset == 135);
  CHECK(cited.entries == std::map<long long, long long>{{135, 21}, {138, 20}});
  const auto full = ingest_bfile(data("min_marks_b.txt"));
  CHECK(full.offset == 0);
  CHECK(full.entries.size() == 41);
  CHECK(full.entries.at(40) == 11);

  CHECK(table_of("").entries.empty());
  CHECK(table_of("# only a comment\n\n").entries.empty());
  const auto rebased = table_of("5 3\n6 4\n", 1);
  CHECK(rebased.offset == 1);
  CHECK(rebased.entries == std::map<long long, long long>{{1, 3}, {2, 4}});
  CHECK(table_of("  1  2  \n").entries.at(1) == 2);
}

TEST_CASE("b-file errors name the line") {
  try {
    (void)ingest_bfile(data("malformed_b.txt"));
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  for (const char* bad : {"1\n", "1 2 3\n", "1 x\n", "2 1\n1 1\n", "1 0\n", "1 1\n1 2\n"})
    CHECK_THROWS_AS((void)table_of(bad), Error);
  CHECK_THROWS_AS((void)ingest_bfile(data("does_not_exist.txt")), Error);
}

TEST_CASE("compare_oeis") {
  const auto table = ingest_bfile(data("min_marks_b.txt"));
  const auto rep = compare_oeis(table, 20);
  CHECK(rep.count(Verdict::Match) == 21);
  CHECK(rep.count(Verdict::NotComputed) == 20);
  CHECK(rep.ok());

  auto corrupted = table;
  corrupted.entries[7] = 6;
  const auto bad = compare_oeis(corrupted, 10);
  CHECK_FALSE(bad.ok());
  CHECK(bad.count(Verdict::Mismatch) == 1);

  const auto cited = compare_oeis(ingest_bfile(data("min_marks_cited.txt")), 40);
  CHECK(cited.count(Verdict::NotComputed) == 2);

  SearchOptions tiny;
  tiny.budget.max_nodes = 1;
  const auto limited = compare_oeis(table, 30, tiny);
  CHECK(limited.rows.back().verdict == Verdict::NotComputed);
  CHECK(limited.ok());
}

TEST_CASE("record JSON round trip") {
  for (const SearchRecord& rec : {min_marks(12), max_holes(9, 3), max_holes_inf(10), min_marks_2d(3, 2),
                                  max_holes(6, 1)}) {
    const auto j = record_to_json(rec);
    CHECK_FALSE(j.contains("elapsed_seconds"));
    CHECK(j.at("tool_version") == std::string(tool_version));
    const SearchRecord back = record_from_json(json::parse(j.dump()));
    CHECK(record_to_json(back).dump() == j.dump());
    CHECK(verify_record(back));
  }
  CHECK(record_to_json(min_marks(5), true).contains("elapsed_seconds"));
  CHECK_THROWS_AS((void)record_from_json(json::parse(R"({"problem":"M1"})")), Error);
  CHECK_THROWS_AS((void)witness_from_json(json::parse(R"({"kind":"spiral"})")), Error);
}

TEST_CASE("result cache") {
  const auto path = temp_file("cache.jsonl");
  const SearchRecord fresh = min_marks(18);
  {
    ResultCache cache(path);
    CHECK_FALSE(cache.lookup(Problem::M1, {18}).has_value());
    cache.append(fresh);
    cache.append(max_holes(5, 1));  // infeasible records are stored but not served
  }
  ResultCache reopened(path);
  const auto hit = reopened.lookup(Problem::M1, {18});
  REQUIRE(hit.has_value());
  CHECK(record_to_json(*hit).dump() == record_to_json(fresh).dump());
  CHECK_FALSE(reopened.lookup(Problem::HBk, {5, 1}).has_value());

  // A record from another version or with a broken witness is ignored.
  auto stale = record_to_json(min_marks(11));
  stale["tool_version"] = "0.0.1";
  auto tampered = record_to_json(min_marks(13));
  tampered["witness"]["marks"] = json::array({0, 1, 13});
  {
    std::ofstream f(path, std::ios::app);
    f << stale.dump() << '\n' << tampered.dump() << '\n' << "not json\n";
  }
  ResultCache third(path);
  CHECK_FALSE(third.lookup(Problem::M1, {11}).has_value());
  CHECK_FALSE(third.lookup(Problem::M1, {13}).has_value());
  CHECK(third.lookup(Problem::M1, {18}).has_value());
  std::filesystem::remove(path);
}

TEST_CASE("CLI verify commands") {
  const auto ok = cli({"verify-ruler", "0,1,4,6"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("complete") != std::string::npos);
  const auto miss = cli({"--json", "verify-ruler", "0,1,4"});
  CHECK(miss.code == 1);
  const auto j = json::parse(miss.out);
  CHECK(j.at("complete") == false);
  CHECK(j.at("missing") == json::array({2}));

  CHECK(cli({"verify-word", "ab..c.d"}).code == 0);
  const auto bordered = cli({"--json", "verify-word", "a.a"});
  CHECK(bordered.code == 1);
  CHECK(json::parse(bordered.out).at("borders") == json::array({1, 2}));
}

TEST_CASE("CLI searches and constructions") {
  const auto m1 = cli({"--json", "search", "m1", "--n", "6"});
  CHECK(m1.code == 0);
  const auto j = json::parse(m1.out);
  CHECK(j.at("value") == 4);
  CHECK(j.at("status") == "optimal");
  CHECK(j.at("witness").at("marks") == json::array({0, 1, 4, 6}));

  const auto hb = cli({"--json", "search", "hb", "--n", "7", "--k", "7"});
  CHECK(json::parse(hb.out).at("value") == 3);
  CHECK(json::parse(cli({"--json", "search", "hb", "--n", "7"}).out).at("problem") == "HBinf");
  CHECK(json::parse(cli({"--json", "search", "m2", "--width", "2", "--height", "2"}).out).at("value") == 4);

  const auto budget = cli({"--json", "--budget-nodes", "10", "search", "m1", "--n", "30"});
  CHECK(budget.code == 0);
  CHECK(json::parse(budget.out).at("status") == "budget_exceeded");

  CHECK(cli({"construct", "wichmann", "--r", "1", "--s", "1"}).code == 0);
  CHECK(cli({"construct", "counterexamples"}).code == 0);
  CHECK(cli({"construct", "2d", "--width", "9", "--height", "7", "--word"}).code == 0);
  CHECK(cli({"bounds", "--n", "138", "--k", "4"}).code == 0);
  CHECK(cli({"bounds", "--width", "6", "--height", "5"}).code == 0);
  CHECK(cli({"--json", "bounds", "--n", "6", "--m", "5"}).out ==
        cli({"--json", "bounds", "--width", "6", "--height", "5"}).out);
  CHECK(cli({"--json", "construct", "2d", "--w", "6", "--h", "5"}).out ==
        cli({"--json", "construct", "2d", "--width", "6", "--height", "5"}).out);
  const auto sq = json::parse(cli({"--json", "construct", "sqrt-word", "--n", "9"}).out);
  CHECK(sq.at("word") == "aab..c..c");
  CHECK(sq.at("alphabet_size") == 3);
  CHECK(sq.at("source") == "sqrt");
  CHECK(sq.at("unbordered") == true);
  CHECK(cli({"experiment", "hb3-monotone", "--max-n", "8"}).code == 0);
}

TEST_CASE("CLI compare-oeis and crossbifix") {
  const std::string bfile = data("min_marks_b.txt").string();
  const auto cmp = cli({"--json", "compare-oeis", "--bfile", bfile, "--max-n", "15"});
  CHECK(cmp.code == 0);
  CHECK(json::parse(cmp.out).at("match") == 16);

  const auto cb = cli({"--json", "crossbifix", "--seed", "ab.c", "--alphabet", "abc"});
  CHECK(cb.code == 0);
  CHECK(json::parse(cb.out).at("size") == 3);
  const auto path = temp_file("code.txt");
  CHECK(cli({"crossbifix", "--seed", "ab.c", "--alphabet", "abc", "--emit", path.string()}).code == 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == "abac\nabbc\nabcc\n");
  std::filesystem::remove(path);
  CHECK(cli({"crossbifix", "--seed-grid", "ab/cc", "--alphabet", "abc"}).code == 0);
}

TEST_CASE("CLI exit codes and diagnostics") {
  const auto bordered = cli({"crossbifix", "--seed", "a.a", "--alphabet", "ab"});
  CHECK(bordered.code == 1);
  CHECK(json::parse(bordered.err).at("error") == "BorderedSeed");

  const auto usage = cli({"search", "m1"});
  CHECK(usage.code == 2);
  CHECK(json::parse(usage.err).at("error") == "usage");
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);

  const auto parse = cli({"verify-ruler", "0,q"});
  CHECK(parse.code == 2);
  CHECK(json::parse(parse.err).at("error") == "ParseError");

  const auto missing = cli({"compare-oeis", "--bfile", data("malformed_b.txt").string()});
  CHECK(missing.code == 2);
  CHECK(json::parse(missing.err).at("message").get<std::string>().find("line 3") != std::string::npos);

  const auto version = cli({"--version"});
  CHECK(version.code == 0);
  CHECK(version.out.find(std::string(tool_version)) != std::string::npos);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("CLI cache serves repeated searches") {
  const auto path = temp_file("cli_cache.jsonl");
  const auto first = cli({"--json", "--cache", path.string(), "search", "m1", "--n", "14"});
  const auto second = cli({"--json", "--cache", path.string(), "search", "m1", "--n", "14"});
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  std::ifstream f(path);
  std::string line;
  int lines = 0;
  while (std::getline(f, line)) ++lines;
  CHECK(lines == 1);
  std::filesystem::remove(path);
}

}  // TEST_SUITE
