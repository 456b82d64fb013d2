#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "unbordered/bounds.hpp"
#include "unbordered/cli.hpp"
#include "unbordered/constructions.hpp"
#include "unbordered/crossbifix.hpp"
#include "unbordered/error.hpp"
#include "unbordered/twod.hpp"

namespace unbordered {

using nlohmann::ordered_json;

namespace {

struct Globals {
  bool json = false;
  std::string cache;
  std::uint64_t budget_nodes = 0;
  double budget_secs = 0.0;
  bool seed_less = false;
  unsigned workers = 1;

  [[nodiscard]] SearchOptions options() const { return {{budget_nodes, budget_secs}, workers}; }
};

// Two or more columns, each padded to its widest cell.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_)
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (width.size() <= c) width.push_back(0);
        width[c] = std::max(width[c], r[c].size());
      }
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t c = 0; c < r.size(); ++c) {
        line += r[c];
        if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
      }
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string fmt(double v, int digits = 6) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

template <class T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

void emit_json(std::ostream& out, const ordered_json& j) { out << j.dump() << '\n'; }

ordered_json word_json(const PartialWord& w) {
  return {{"word", w.to_string()},
          {"length", w.size()},
          {"holes", w.hole_count()},
          {"alphabet_size", w.alphabet().size()},
          {"unbordered", is_unbordered(w)}};
}

ordered_json witness_word_json(const WitnessWord& w) {
  ordered_json j = word_json(w.word());
  j["source"] = to_string(w.source());
  return j;
}

void print_word(std::ostream& out, const PartialWord& w) {
  Table t({"field", "value"});
  t.row({"word", w.to_string()});
  t.row({"length", std::to_string(w.size())});
  t.row({"holes", std::to_string(w.hole_count())});
  t.row({"alphabet", std::to_string(w.alphabet().size())});
  t.row({"unbordered", yes_no(is_unbordered(w))});
  t.print(out);
}

std::string witness_text(const Witness& w) {
  if (const auto* r = std::get_if<Ruler>(&w)) return r->to_string();
  if (const auto* p = std::get_if<PartialWord>(&w)) return p->to_string();
  if (const auto* g = std::get_if<Ruler2D>(&w)) {
    std::string s = g->to_string();
    for (auto& c : s)
      if (c == '\n') c = '/';
    if (!s.empty()) s.pop_back();
    return s;
  }
  return "-";
}

void print_record(std::ostream& out, const SearchRecord& r) {
  Table t({"field", "value"});
  t.row({"problem", std::string(to_string(r.problem))});
  t.row({"params", join(r.params)});
  t.row({"value", r.value ? std::to_string(*r.value) : "-"});
  t.row({"status", std::string(to_string(r.status))});
  t.row({"witness", witness_text(r.witness)});
  t.row({"nodes", std::to_string(r.nodes_expanded)});
  t.row({"elapsed_s", fmt(r.elapsed_seconds, 3)});
  t.print(out);
}

int exit_for(Errc code) {
  switch (code) {
    case Errc::BorderedSeed:
    case Errc::IncompleteRuler:
    case Errc::IncompleteConstruction:
    case Errc::RepairFailed:
      return 1;
    default:
      return 2;
  }
}

void diagnostic(std::ostream& err, std::string_view kind, std::string_view message) {
  err << ordered_json{{"error", kind}, {"message", message}}.dump() << '\n';
}

SearchRecord cached_search(const Globals& g, Problem p, std::vector<long long> params,
                           const std::function<SearchRecord()>& compute) {
  if (g.cache.empty()) return compute();
  ResultCache cache(g.cache);
  if (auto hit = cache.lookup(p, params)) return *hit;
  SearchRecord rec = compute();
  cache.append(rec);
  return rec;
}

int report_record(const Globals& g, std::ostream& out, const SearchRecord& rec) {
  if (g.json) emit_json(out, record_to_json(rec));
  else print_record(out, rec);
  return verify_record(rec) ? 0 : 1;
}

PartialWord2D parse_grid_arg(const std::string& text) {
  std::string grid = text;
  for (auto& c : grid)
    if (c == '/') c = '\n';
  return PartialWord2D::parse(grid);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unbordered partial words, sparse rulers and cross-bifix-free codes.\n"
               "Formats: ruler \"0,1,4,6\" or \"d:1,3,2\"; word \"ab..c\" ('.' is a hole);\n"
               "2D grids as rows joined by '/', e.g. \"ab/.b\"; b-file lines \"n value\".",
               "unbordered"};
  app.set_version_flag("--version", std::string(tool_version));
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output (one JSON document)");
  app.add_option("--cache", g.cache, "JSONL result cache for searches");
  app.add_option("--budget-nodes", g.budget_nodes, "Search node limit (0 = none)");
  app.add_option("--budget-secs", g.budget_secs, "Search time limit in seconds (0 = none)");
  app.add_flag("--seed-less", g.seed_less, "Accepted for scripts; every run is deterministic");
  app.add_option("--workers", g.workers, "Worker threads for searches and sweeps (0 = all cores)");

  std::function<int()> action;

  // verify-ruler
  std::string ruler_text;
  auto* vr = app.add_subcommand("verify-ruler", "Check that a ruler measures every distance");
  vr->add_option("ruler", ruler_text, "Marks \"0,1,4,6\" or differences \"d:1,3,2\"")->required();
  vr->callback([&] {
    action = [&] {
      const Ruler r = Ruler::parse(ruler_text);
      const auto missing = missing_distances(r);
      const bool complete = missing.empty();
      if (g.json) {
        emit_json(out, {{"ruler", r.to_string()},
                        {"length", r.length()},
                        {"marks", r.size()},
                        {"complete", complete},
                        {"missing", missing}});
      } else {
        Table t({"field", "value"});
        t.row({"ruler", r.to_string()});
        t.row({"length", std::to_string(r.length())});
        t.row({"marks", std::to_string(r.size())});
        t.row({"complete", yes_no(complete)});
        t.row({"missing", missing.empty() ? "-" : join(missing)});
        t.print(out);
      }
      return complete ? 0 : 1;
    };
  });

  // verify-word
  std::string word_text, word_alphabet;
  auto* vw = app.add_subcommand("verify-word", "Check that a partial word is unbordered");
  vw->add_option("word", word_text, "Letters a-z and '.' for holes")->required();
  vw->add_option("--alphabet", word_alphabet, "Alphabet prefix such as \"abcd\"");
  vw->callback([&] {
    action = [&] {
      const PartialWord w = word_alphabet.empty()
                                ? PartialWord::parse(word_text)
                                : PartialWord::parse(word_text, Alphabet::parse(word_alphabet));
      const auto b = borders(w);
      const auto dom = domain(w);
      const bool dom_complete = !dom.empty() && dom.front() == 0 &&
                                is_complete(Ruler(std::vector<int>(dom.begin(), dom.end())));
      std::vector<std::size_t> lengths = b.border_lengths;
      if (g.json) {
        ordered_json j = word_json(w);
        j["borders"] = lengths;
        j["domain"] = dom;
        j["domain_complete"] = dom_complete;
        emit_json(out, j);
      } else {
        print_word(out, w);
        Table t({"field", "value"});
        t.row({"borders", lengths.empty() ? "-" : join(lengths)});
        t.row({"domain", join(dom)});
        t.row({"domain_complete", yes_no(dom_complete)});
        t.print(out);
      }
      return b.is_unbordered() ? 0 : 1;
    };
  });

  // construct
  auto* cons = app.add_subcommand("construct", "Build rulers and witness words");
  cons->require_subcommand(1);
  int p_r = 0, p_s = 0, p_i = 0, p_j = 0, p_n = 0, p_w = 0, p_h = 0, p_l = 0, p_k = 0;
  bool with_word = false;

  auto* cw = cons->add_subcommand("wichmann", "Extended Wichmann ruler");
  cw->add_option("--r", p_r)->required();
  cw->add_option("--s", p_s)->required();
  cw->add_option("--i", p_i);
  cw->add_option("--j", p_j);
  cw->callback([&] {
    action = [&] {
      const Ruler r = extended_wichmann(p_r, p_s, p_i, p_j);
      const bool complete = is_complete(r);
      if (g.json) {
        emit_json(out, {{"construction", "wichmann"},
                        {"params", {{"r", p_r}, {"s", p_s}, {"i", p_i}, {"j", p_j}}},
                        {"ruler", r.to_string()},
                        {"length", r.length()},
                        {"marks", r.size()},
                        {"complete", complete}});
      } else {
        Table t({"field", "value"});
        t.row({"ruler", r.to_string()});
        t.row({"length", std::to_string(r.length())});
        t.row({"marks", std::to_string(r.size())});
        t.row({"complete", yes_no(complete)});
        t.print(out);
      }
      return complete ? 0 : 1;
    };
  });

  auto word_action = [&](const std::string& name, std::function<WitnessWord()> make) {
    return [&, name, make] {
      const WitnessWord w = make();
      if (g.json) {
        ordered_json j{{"construction", name}};
        j.update(witness_word_json(w));
        emit_json(out, j);
      } else {
        print_word(out, w.word());
      }
      return is_unbordered(w.word()) ? 0 : 1;
    };
  };

  auto* cww = cons->add_subcommand("wichmann-word", "Four-letter word over an extended Wichmann ruler");
  cww->add_option("--r", p_r)->required();
  cww->add_option("--s", p_s)->required();
  cww->add_option("--i", p_i);
  cww->add_option("--j", p_j);
  cww->callback([&] {
    action = word_action("wichmann-word", [&] { return wichmann_word_ext(p_r, p_s, p_i, p_j); });
  });

  auto* csq = cons->add_subcommand("sqrt-word", "Three-letter square-root word");
  csq->add_option("--n", p_n)->required();
  csq->callback([&] { action = word_action("sqrt-word", [&] { return sqrt_word(p_n); }); });

  auto* chb = cons->add_subcommand("hb4-witness", "Four-letter unbordered word with many holes");
  chb->add_option("--n", p_n)->required();
  chb->callback([&] { action = word_action("hb4-witness", [&] { return hb4_witness(p_n); }); });

  auto* cce = cons->add_subcommand("counterexamples", "The two four-letter words of lengths 136 and 139");
  cce->callback([&] {
    action = [&] {
      const auto [a, b] = counterexample_words();
      const long long excess = static_cast<long long>(b.holes()) - static_cast<long long>(a.holes()) - 3;
      const bool ok = is_unbordered(a.word()) && is_unbordered(b.word());
      if (g.json) {
        ordered_json arr = ordered_json::array();
        for (const WitnessWord* w : {&a, &b}) arr.push_back(witness_word_json(*w));
        emit_json(out, arr);
      } else {
        Table t({"length", "holes", "alphabet", "unbordered"});
        for (const WitnessWord* w : {&a, &b})
          t.row({std::to_string(w->word().size()), std::to_string(w->holes()),
                 std::to_string(w->word().alphabet().size()), yes_no(is_unbordered(w->word()))});
        t.print(out);
        out << "holes(139) - holes(136) - 3 = " << excess << '\n';
      }
      return ok ? 0 : 1;
    };
  });

  auto* c2d = cons->add_subcommand("2d", "Block/lattice 2D ruler and binary 2D word");
  c2d->set_help_flag("--help", "Print this help message and exit");
  c2d->add_option("--width,--w", p_w)->required();
  c2d->add_option("--height,--h", p_h)->required();
  c2d->add_option("--l", p_l, "Block width (default from the size)");
  c2d->add_option("--k", p_k, "Block height (default from the size)");
  c2d->add_flag("--word", with_word, "Also build the binary unbordered word");
  c2d->callback([&] {
    action = [&] {
      const BlockParams bp = (p_l > 0 && p_k > 0) ? BlockParams{p_l, p_k} : default_block_params(p_w, p_h);
      const Ruler2D r = construct_2d(p_w, p_h, bp.l, bp.k);
      const auto b = m2_bounds(p_w, p_h);
      ordered_json j{{"construction", "2d"},
                     {"width", p_w},
                     {"height", p_h},
                     {"l", bp.l},
                     {"k", bp.k},
                     {"marks", r.size()},
                     {"mark_bound", construct_2d_mark_bound(p_w, p_h, bp.l, bp.k)},
                     {"lower_bound", usable_lower(b.lower)},
                     {"complete", is_complete_2d(r)},
                     {"ruler", witness_to_json(r)["rows"]}};
      bool ok = is_complete_2d(r);
      std::optional<BinaryWord2D> bw;
      if (with_word) {
        bw = binary_word_2d(p_w, p_h);
        const bool unb = is_unbordered_2d(bw->word);
        ok = ok && unb;
        std::vector<std::string> rows;
        std::istringstream lines(bw->word.to_string());
        for (std::string line; std::getline(lines, line);) rows.push_back(line);
        j["word"] = {{"rows", rows},
                     {"holes", bw->word.hole_count()},
                     {"repair_marks", bw->repair_marks},
                     {"unbordered", unb}};
      }
      if (g.json) {
        emit_json(out, j);
      } else {
        Table t({"field", "value"});
        t.row({"size", std::to_string(p_w) + "x" + std::to_string(p_h)});
        t.row({"l,k", std::to_string(bp.l) + "," + std::to_string(bp.k)});
        t.row({"marks", std::to_string(r.size())});
        t.row({"lower_bound", std::to_string(usable_lower(b.lower))});
        t.row({"complete", yes_no(is_complete_2d(r))});
        if (bw) {
          t.row({"word_holes", std::to_string(bw->word.hole_count())});
          t.row({"repair_marks", std::to_string(bw->repair_marks)});
          t.row({"word_unbordered", yes_no(is_unbordered_2d(bw->word))});
        }
        t.print(out);
        out << (bw ? bw->word.to_string() : r.to_string());
      }
      return ok ? 0 : 1;
    };
  });

  // search
  auto* se = app.add_subcommand("search", "Exact searches with budgets");
  se->require_subcommand(1);
  std::optional<int> opt_k;
  auto* sm1 = se->add_subcommand("m1", "Fewest marks of a complete ruler of length n");
  sm1->add_option("--n", p_n)->required();
  sm1->callback([&] {
    action = [&] {
      const auto rec = cached_search(g, Problem::M1, {p_n}, [&] { return min_marks(p_n, g.options()); });
      return report_record(g, out, rec);
    };
  });
  auto* shb = se->add_subcommand("hb", "Most holes of an unbordered word of length n over k letters");
  shb->add_option("--n", p_n)->required();
  shb->add_option("--k", opt_k, "Alphabet size; omitted means unrestricted");
  shb->callback([&] {
    action = [&] {
      const auto rec =
          opt_k ? cached_search(g, Problem::HBk, {p_n, *opt_k},
                                [&] { return max_holes(p_n, *opt_k, g.options()); })
                : cached_search(g, Problem::HBinf, {p_n}, [&] { return max_holes_inf(p_n, g.options()); });
      return report_record(g, out, rec);
    };
  });
  auto* sm2 = se->add_subcommand("m2", "Fewest marks of a complete 2D ruler");
  sm2->add_option("--width", p_w)->required();
  sm2->add_option("--height", p_h)->required();
  sm2->callback([&] {
    action = [&] {
      const auto rec = cached_search(g, Problem::M2, {p_w, p_h},
                                     [&] { return min_marks_2d(p_w, p_h, g.options()); });
      return report_record(g, out, rec);
    };
  });

  // bounds
  std::optional<long long> b_n, b_k;
  std::optional<int> b_w, b_h;
  auto* bo = app.add_subcommand("bounds", "Analytic bounds for a length n or a W x H rectangle");
  std::optional<int> b_m;
  bo->add_option("--n", b_n, "Ruler length, or the rectangle width together with --m");
  bo->add_option("--m", b_m, "Rectangle height, with --n as the width");
  bo->add_option("--width", b_w);
  bo->add_option("--height", b_h);
  bo->add_option("--k", b_k);
  bo->callback([&] {
    action = [&]() -> int {
      if (b_n && b_m) {
        b_w = static_cast<int>(*b_n);
        b_h = *b_m;
        b_n.reset();
      }
      if (b_n) {
        const Bounds1D b = bounds_1d(*b_n, b_k);
        ordered_json j{{"n", b.n},
                       {"m1_lower", b.m1_lower},
                       {"m1_lower_int", usable_lower(b.m1_lower)},
                       {"m1_upper", b.m1_upper},
                       {"m1_upper_int", usable_upper(b.m1_upper)},
                       {"m1_realized", b.m1_realized},
                       {"hb_upper_243", b.hb_upper_243},
                       {"hb3_lower", b.hb3_lower},
                       {"hb4_lower", b.hb4_lower}};
        if (b.k) j["k"] = *b.k;
        if (b.hb_upper_turan) j["hb_upper_turan"] = *b.hb_upper_turan;
        if (g.json) {
          emit_json(out, j);
        } else {
          Table t({"bound", "value"});
          for (const auto& [key, v] : j.items()) t.row({key, v.dump()});
          t.print(out);
        }
        return 0;
      }
      if (b_w && b_h) {
        const Bounds2D b = m2_bounds(*b_w, *b_h, b_k);
        ordered_json j{{"width", b.width},
                       {"height", b.height},
                       {"lower", b.lower},
                       {"lower_int", usable_lower(b.lower)},
                       {"needed_pairs", b.needed_pairs}};
        if (b.realized_upper) j["realized_upper"] = *b.realized_upper;
        if (b.cartesian_marks) j["cartesian_marks"] = *b.cartesian_marks;
        if (b.hb2d_upper) j["hb2d_upper"] = *b.hb2d_upper;
        if (g.json) {
          emit_json(out, j);
        } else {
          Table t({"bound", "value"});
          for (const auto& [key, v] : j.items()) t.row({key, v.dump()});
          t.print(out);
        }
        return 0;
      }
      throw CLI::ValidationError("bounds", "give --n, --n with --m, or --width and --height");
    };
  });

  // compare-oeis
  std::string bfile;
  long long max_n = 40;
  std::optional<long long> offset;
  auto* co = app.add_subcommand("compare-oeis", "Check exact M1 values against a b-file");
  co->add_option("--bfile", bfile, "File of \"n value\" lines")->required();
  co->add_option("--max-n", max_n, "Largest n to compute");
  co->add_option("--offset", offset, "Rebase the first index to this value");
  co->callback([&] {
    action = [&] {
      const OeisTable table = ingest_bfile(bfile, offset);
      const OeisReport rep = compare_oeis(table, max_n, g.options());
      if (g.json) {
        ordered_json rows = ordered_json::array();
        for (const auto& r : rep.rows)
          rows.push_back({{"n", r.n},
                          {"expected", r.expected},
                          {"computed", r.computed ? ordered_json(*r.computed) : ordered_json(nullptr)},
                          {"verdict", to_string(r.verdict)}});
        emit_json(out, {{"offset", table.offset},
                        {"rows", rows},
                        {"match", rep.count(Verdict::Match)},
                        {"mismatch", rep.count(Verdict::Mismatch)},
                        {"not_computed", rep.count(Verdict::NotComputed)}});
      } else {
        Table t({"n", "expected", "computed", "verdict"});
        for (const auto& r : rep.rows)
          t.row({std::to_string(r.n), std::to_string(r.expected),
                 r.computed ? std::to_string(*r.computed) : "-", std::string(to_string(r.verdict))});
        t.print(out);
      }
      return rep.ok() ? 0 : 1;
    };
  });

  // crossbifix
  std::string seed, seed_grid, cb_alphabet, emit_path;
  std::uint64_t limit = default_code_limit, samples = 4096;
  auto* cb = app.add_subcommand("crossbifix", "Cross-bifix-free code from an unbordered seed");
  auto* seed_opt = cb->add_option("--seed", seed, "1D seed word");
  cb->add_option("--seed-grid", seed_grid, "2D seed, rows joined by '/'")->excludes(seed_opt);
  cb->add_option("--alphabet", cb_alphabet, "Alphabet prefix such as \"ab\"")->required();
  cb->add_option("--emit", emit_path, "Write the code to this file");
  cb->add_option("--limit", limit, "Largest code to materialize");
  cb->add_option("--samples", samples, "Fillings checked when the code is larger than --limit");
  cb->callback([&] {
    action = [&]() -> int {
      const Alphabet alphabet = Alphabet::parse(cb_alphabet);
      ordered_json j;
      bool ok = false;
      std::optional<Code> code;
      if (!seed_grid.empty()) {
        const PartialWord2D w = parse_grid_arg(seed_grid);
        code = code_from_word_2d(w, alphabet, limit);
        ok = is_cross_bifix_free(*code);
        j = {{"seed", seed_grid},
             {"width", w.width()},
             {"height", w.height()},
             {"holes", w.hole_count()},
             {"size", code->size()},
             {"materialized", true},
             {"words_checked", code->size()},
             {"cross_bifix_free", ok}};
      } else if (!seed.empty()) {
        const PartialWord w = PartialWord::parse(seed, alphabet);
        const CodeCheck c = check_code_from_word(w, alphabet, limit, samples);
        ok = c.cross_bifix_free;
        j = {{"seed", seed},
             {"length", w.size()},
             {"holes", c.holes},
             {"size", c.size},
             {"log2_size", c.log2_size},
             {"materialized", c.materialized},
             {"words_checked", c.words_checked},
             {"cross_bifix_free", ok}};
        if (!emit_path.empty()) code = code_from_word(w, alphabet, limit);
      } else {
        throw CLI::ValidationError("crossbifix", "give --seed or --seed-grid");
      }
      if (!emit_path.empty()) {
        std::ofstream f(emit_path);
        if (!f) throw Error(Errc::InvalidParams, "cannot write " + emit_path);
        f << emit_code(*code);
        j["emitted"] = emit_path;
      }
      if (g.json) {
        emit_json(out, j);
      } else {
        Table t({"field", "value"});
        for (const auto& [key, v] : j.items()) t.row({key, v.is_string() ? v.get<std::string>() : v.dump()});
        t.print(out);
      }
      return ok ? 0 : 1;
    };
  });

  // experiment
  auto* ex = app.add_subcommand("experiment", "Conjecture and scaling experiments");
  ex->require_subcommand(1);
  int exp_max_n = 12;
  auto* emono = ex->add_subcommand("hb3-monotone", "HB3(n+1) <= HB3(n) + 1 for small n");
  emono->add_option("--max-n", exp_max_n);
  emono->callback([&] {
    action = [&] {
      const MonotonicityReport rep = hb3_monotonicity_experiment(exp_max_n, g.options());
      if (g.json) {
        ordered_json rows = ordered_json::array();
        for (const auto& r : rep.rows)
          rows.push_back({{"n", r.n},
                          {"hb3", r.hb3 ? ordered_json(*r.hb3) : ordered_json(nullptr)},
                          {"violation", r.violation ? ordered_json(*r.violation) : ordered_json(nullptr)}});
        emit_json(out, {{"rows", rows},
                        {"any_violation", rep.any_violation()},
                        {"hb4_witness_excess", rep.hb4_witness_excess}});
      } else {
        Table t({"n", "HB3", "violation"});
        for (const auto& r : rep.rows)
          t.row({std::to_string(r.n), r.hb3 ? std::to_string(*r.hb3) : "unknown",
                 r.violation ? yes_no(*r.violation) : "unknown"});
        t.print(out);
        out << "four-letter witnesses: holes(139) - holes(136) - 3 = " << rep.hb4_witness_excess << '\n';
      }
      return 0;
    };
  });
  int env_min = 5, env_max = 40;
  double cap = 10.0;
  auto* eenv = ex->add_subcommand("twod-envelope", "Fit c, c' for the 2D ruler and word sizes");
  eenv->add_option("--min", env_min);
  eenv->add_option("--max", env_max);
  eenv->add_option("--c-prime-cap", cap);
  eenv->callback([&] {
    action = [&] {
      const auto rows = sweep_2d(env_min, env_max, true, g.workers);
      std::vector<EnvelopeSample> marks, letters;
      bool ok = true;
      for (const auto& r : rows) {
        marks.push_back({r.width, r.height, static_cast<double>(r.ruler_marks)});
        letters.push_back({r.width, r.height, static_cast<double>(r.word_letters)});
        ok = ok && r.ruler_complete && r.word_unbordered;
      }
      const EnvelopeFit fm = fit_envelope(marks, cap), fl = fit_envelope(letters, cap);
      if (g.json) {
        emit_json(out, {{"sizes", rows.size()},
                        {"all_valid", ok},
                        {"ruler_fit", {{"c", fm.c}, {"c_prime", fm.c_prime}}},
                        {"word_fit", {{"c", fl.c}, {"c_prime", fl.c_prime}}}});
      } else {
        Table t({"fit", "c", "c_prime"});
        t.row({"ruler marks", fmt(fm.c), fmt(fm.c_prime)});
        t.row({"word letters", fmt(fl.c), fmt(fl.c_prime)});
        t.print(out);
        out << rows.size() << " sizes, all valid: " << yes_no(ok) << '\n';
      }
      return ok ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    diagnostic(err, "usage", e.what());
    return 2;
  }
  try {
    return action ? action() : 2;
  } catch (const CLI::ParseError& e) {
    diagnostic(err, "usage", e.what());
    return 2;
  } catch (const Error& e) {
    diagnostic(err, to_string(e.code()), e.what());
    return exit_for(e.code());
  } catch (const std::exception& e) {
    diagnostic(err, "internal", e.what());
    return 2;
  }
}

}  // namespace unbordered
