// wti -- weighted tree ideals.
//
// Decides which vertex covers of an increasing weighted tree give associated
// primes of each power of its weighted edge ideal, and cross-checks the
// combinatorial answer against a brute-force monomial-ideal engine.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wti/assoc.hpp"
#include "wti/graph_io.hpp"
#include "wti/oracle.hpp"
#include "wti/random_tree.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;   // parse/flag/budget errors
constexpr int kExitPrecond = 2; // not a tree / not increasing / trivial tree
constexpr int kExitMismatch = 3;

int exit_code_for(wti::errc c) {
  switch (c) {
    case wti::errc::not_a_tree:
    case wti::errc::not_increasing_tree:
    case wti::errc::trivial_tree:
      return kExitPrecond;
    default:
      return kExitInput;
  }
}

ordered_json set_json(const wti::WeightedGraph& g, const wti::VertexSet& s) {
  ordered_json arr = ordered_json::array();
  for (wti::VertexId v : s) arr.push_back(g.label(v));
  return arr;
}

std::string set_table(const wti::WeightedGraph& g, const wti::VertexSet& s) {
  std::string out;
  for (wti::VertexId v : s) {
    if (!out.empty()) out += ' ';
    out += g.label(v);
  }
  return out.empty() ? "-" : out;
}

struct Options {
  std::string format = "json";
  std::uint64_t budget = 1'000'000'000ULL;
  bool json() const { return format == "json"; }
};

void emit(const std::string& text) { std::cout << text << std::flush; }

int cmd_validate(const std::string& file, const Options& opt) {
  wti::WeightedGraph g = wti::load_graph(file);
  bool tree = g.is_tree();
  bool increasing = tree && wti::is_increasing_tree(g);
  wti::VertexSet roots;
  if (tree) roots = wti::valid_roots(g);
  if (opt.json()) {
    ordered_json doc;
    doc["vertices"] = g.vertex_count();
    doc["edges"] = g.edge_count();
    doc["tree"] = tree;
    doc["increasing"] = increasing;
    doc["roots"] = set_json(g, roots);
    emit(doc.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "vertices:   " << g.vertex_count() << "\n"
        << "edges:      " << g.edge_count() << "\n"
        << "tree:       " << (tree ? "yes" : "no") << "\n"
        << "increasing: " << (increasing ? "yes" : "no") << "\n"
        << "roots:      " << set_table(g, roots) << "\n";
    emit(out.str());
  }
  return tree ? kExitOk : kExitPrecond;
}

int cmd_roots(const std::string& file, const Options& opt) {
  wti::WeightedGraph g = wti::load_graph(file);
  wti::VertexSet roots = wti::valid_roots(g); // throws not_a_tree -> exit 2
  if (opt.json())
    emit(set_json(g, roots).dump() + "\n");
  else
    emit(set_table(g, roots) + "\n");
  return kExitOk;
}

int cmd_covers(const std::string& file, const std::string& which, const Options& opt) {
  wti::WeightedGraph g = wti::load_graph(file);
  std::vector<wti::VertexSet> covers;
  if (which == "strong") {
    if (!wti::is_increasing_tree(g))
      wti::fail(wti::errc::not_increasing_tree,
                "strong covers are defined for increasing weighted trees");
    for (const wti::VertexSet& c : wti::enumerate_vertex_covers(g, false))
      if (wti::analyze_cover(g, c).strong) covers.push_back(c);
  } else {
    covers = wti::enumerate_vertex_covers(g, which == "minimal");
  }
  if (opt.json()) {
    ordered_json arr = ordered_json::array();
    for (const wti::VertexSet& c : covers) arr.push_back(set_json(g, c));
    emit(arr.dump(2) + "\n");
  } else {
    std::ostringstream out;
    for (const wti::VertexSet& c : covers) out << set_table(g, c) << "\n";
    emit(out.str());
  }
  return kExitOk;
}

std::vector<wti::VertexSet> oracle_primes(const wti::WeightedGraph& g,
                                          std::uint64_t t, const Options& opt) {
  if (g.edge_count() == 0) return {}; // zero ideal has no covers to report
  wti::MonomialIdeal it = wti::ideal_power(wti::edge_ideal(g), t);
  std::vector<wti::VertexSet> out;
  for (const wti::PrimeSupport& p : wti::associated_primes(it, {opt.budget, 0}))
    out.push_back(p.variables);
  return out;
}

int cmd_ass(const std::string& file, std::uint64_t t, bool oracle, const Options& opt) {
  wti::WeightedGraph g = wti::load_graph(file);
  std::vector<wti::VertexSet> primes =
      oracle ? oracle_primes(g, t, opt) : wti::ass_power(g, t).primes;
  if (opt.json()) {
    ordered_json doc;
    doc["t"] = t;
    doc["oracle"] = oracle;
    doc["primes"] = ordered_json::array();
    for (const wti::VertexSet& p : primes) doc["primes"].push_back(set_json(g, p));
    emit(doc.dump(2) + "\n");
  } else {
    std::ostringstream out;
    for (const wti::VertexSet& p : primes) out << set_table(g, p) << "\n";
    emit(out.str());
  }
  return kExitOk;
}

int cmd_astab(const std::string& file, const Options& opt) {
  wti::WeightedGraph g = wti::load_graph(file);
  wti::StabilityReport report = wti::astab(g);
  if (opt.json()) {
    ordered_json doc;
    doc["astab"] = report.astab;
    doc["ass_infinity"] = ordered_json::array();
    for (const wti::VertexSet& c : report.ass_infinity)
      doc["ass_infinity"].push_back(set_json(g, c));
    doc["per_cover"] = ordered_json::array();
    for (const auto& [cover, power] : report.per_cover) {
      ordered_json row;
      row["cover"] = set_json(g, cover);
      row["first_power"] = power;
      doc["per_cover"].push_back(std::move(row));
    }
    emit(doc.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "astab " << report.astab << "\n";
    for (const auto& [cover, power] : report.per_cover)
      out << set_table(g, cover) << " -> " << power << "\n";
    emit(out.str());
  }
  return kExitOk;
}

int cmd_verify(const std::string& file, std::uint64_t tmax, const Options& opt) {
  wti::WeightedGraph g = wti::load_graph(file);
  if (!wti::is_increasing_tree(g))
    wti::fail(wti::errc::not_increasing_tree, "verify needs an increasing weighted tree");
  ordered_json checks = ordered_json::array();
  ordered_json mismatches = ordered_json::array();
  std::ostringstream table;
  bool all_ok = true;
  for (std::uint64_t t = 1; t <= tmax; ++t) {
    std::vector<wti::VertexSet> formula = wti::ass_power(g, t).primes;
    std::vector<wti::VertexSet> oracle = oracle_primes(g, t, opt);
    std::vector<wti::VertexSet> formula_only, oracle_only;
    for (const auto& c : formula)
      if (std::find(oracle.begin(), oracle.end(), c) == oracle.end())
        formula_only.push_back(c);
    for (const auto& c : oracle)
      if (std::find(formula.begin(), formula.end(), c) == formula.end())
        oracle_only.push_back(c);
    bool match = formula_only.empty() && oracle_only.empty();
    all_ok = all_ok && match;
    ordered_json row;
    row["t"] = t;
    row["primes"] = formula.size();
    row["match"] = match;
    checks.push_back(std::move(row));
    table << "t=" << t << " " << (match ? "ok" : "MISMATCH") << " (" << formula.size()
          << " primes)\n";
    if (!match) {
      ordered_json mm;
      mm["t"] = t;
      mm["formula_only"] = ordered_json::array();
      for (const auto& c : formula_only) mm["formula_only"].push_back(set_json(g, c));
      mm["oracle_only"] = ordered_json::array();
      for (const auto& c : oracle_only) mm["oracle_only"].push_back(set_json(g, c));
      mismatches.push_back(std::move(mm));
      table << "  formula only:";
      for (const auto& c : formula_only) table << " {" << set_table(g, c) << "}";
      table << "\n  oracle only:";
      for (const auto& c : oracle_only) table << " {" << set_table(g, c) << "}";
      table << "\n";
    }
  }
  if (opt.json()) {
    ordered_json doc;
    doc["file"] = file;
    doc["tmax"] = tmax;
    doc["agreement"] = all_ok;
    doc["checks"] = std::move(checks);
    doc["mismatches"] = std::move(mismatches);
    emit(doc.dump(2) + "\n");
  } else {
    emit(table.str());
  }
  return all_ok ? kExitOk : kExitMismatch;
}

int cmd_random(std::uint32_t n, std::uint64_t wmax, std::uint64_t seed,
               bool increasing, const Options& opt) {
  wti::RandomTreeResult r = wti::random_weighted_tree(n, wmax, seed, increasing);
  if (opt.json()) {
    ordered_json doc = ordered_json::parse(wti::to_json(r.tree));
    doc["meta"] = {{"seed", seed}, {"resamples", r.resamples}};
    emit(doc.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "# seed=" << seed << " resamples=" << r.resamples << "\n"
        << wti::to_text(r.tree);
    emit(out.str());
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"associated primes of powers of weighted edge ideals on increasing trees"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  std::string file;
  std::uint64_t t = 1, tmax = 1, seed = 0, wmax = 1;
  std::uint32_t n = 2;
  bool oracle = false, increasing = false;
  std::string which = "all";

  auto* validate = app.add_subcommand("validate", "parse a tree file and report its status");
  validate->add_option("file", file)->required();

  auto* roots = app.add_subcommand("roots", "all valid roots of an increasing weighted tree");
  roots->add_option("file", file)->required();

  auto* covers = app.add_subcommand("covers", "enumerate vertex covers");
  covers->add_option("file", file)->required();
  bool f_strong = false, f_minimal = false, f_all = false;
  auto* o_strong = covers->add_flag("--strong", f_strong, "only strong covers");
  auto* o_minimal = covers->add_flag("--minimal", f_minimal, "only inclusion-minimal covers");
  covers->add_flag("--all", f_all, "all covers (default)");
  o_strong->excludes(o_minimal);

  auto* ass = app.add_subcommand("ass", "associated primes of the t-th power");
  ass->add_option("file", file)->required();
  ass->add_option("--t", t, "power")->required()->check(CLI::PositiveNumber);
  ass->add_flag("--oracle", oracle, "use the monomial-ideal engine instead of the formula");
  ass->add_option("--budget", opt.budget, "witness-space cap")->capture_default_str();

  auto* oracle_ass = app.add_subcommand("oracle-ass", "alias for ass --oracle");
  oracle_ass->add_option("file", file)->required();
  oracle_ass->add_option("--t", t, "power")->required()->check(CLI::PositiveNumber);
  oracle_ass->add_option("--budget", opt.budget, "witness-space cap")->capture_default_str();

  auto* astab_cmd = app.add_subcommand("astab", "index of stability and the stable prime set");
  astab_cmd->add_option("file", file)->required();

  auto* verify = app.add_subcommand("verify", "formula vs oracle for t = 1..tmax");
  verify->add_option("file", file)->required();
  verify->add_option("--tmax", tmax, "largest power to check")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_option("--budget", opt.budget, "witness-space cap")->capture_default_str();

  auto* random = app.add_subcommand("random", "emit a uniformly random weighted labeled tree");
  random->add_option("--n", n, "vertex count")->required()->check(CLI::Range(2u, 1000000u));
  random->add_option("--wmax", wmax, "weights drawn from [1, wmax]")
      ->required()
      ->check(CLI::PositiveNumber);
  random->add_option("--seed", seed, "RNG seed")->required();
  random->add_flag("--increasing", increasing, "resample until the tree is increasing");

  for (CLI::App* sc : app.get_subcommands([](CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(file, opt);
    if (app.got_subcommand(roots)) return cmd_roots(file, opt);
    if (app.got_subcommand(covers))
      return cmd_covers(file, f_strong ? "strong" : (f_minimal ? "minimal" : "all"), opt);
    if (app.got_subcommand(ass)) return cmd_ass(file, t, oracle, opt);
    if (app.got_subcommand(oracle_ass)) return cmd_ass(file, t, true, opt);
    if (app.got_subcommand(astab_cmd)) return cmd_astab(file, opt);
    if (app.got_subcommand(verify)) return cmd_verify(file, tmax, opt);
    if (app.got_subcommand(random)) return cmd_random(n, wmax, seed, increasing, opt);
  } catch (const wti::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
