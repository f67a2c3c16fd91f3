// coverdepth command-line tool.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "coverdepth/decomposition.hpp"
#include "coverdepth/errors.hpp"
#include "coverdepth/graph_ideals.hpp"
#include "coverdepth/graph_io.hpp"
#include "coverdepth/harness.hpp"
#include "coverdepth/serialize.hpp"

using namespace coverdepth;

namespace {

Graph load_graph(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
  }
  return parse_graph(arg);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  out << text;
}

void write_json(const std::string& path, const json& j) {
  if (!path.empty()) write_file(path, j.dump(2) + "\n");
}

ModuleKind parse_kind(const std::string& s) {
  return s == "quotient" ? ModuleKind::Quotient : ModuleKind::Ideal;
}

MonomialIdeal graph_ideal(const Graph& g, const std::string& which, int k, bool symbolic) {
  if (which == "edge") {
    if (symbolic) throw InputError("--symbolic applies to the cover ideal only");
    return power(edge_ideal(g), k);
  }
  if (symbolic) return symbolic_power_cover(g, k);
  return power(cover_ideal_checked(g), k);
}

void print_kv(const json& j) {
  for (const auto& [key, value] : j.items())
    std::cout << std::left << std::setw(28) << key << (value.is_string() ? value.get<std::string>() : value.dump())
              << '\n';
}

void print_report(const VerificationReport& r, bool verbose) {
  std::cout << std::left << std::setw(12) << r.suite << " records=" << r.records.size()
            << " pass=" << r.count(RecordStatus::Pass) << " fail=" << r.count(RecordStatus::Fail)
            << " indeterminate=" << r.count(RecordStatus::Indeterminate)
            << " flagged=" << r.count(RecordStatus::Flagged) << " budget_flags=" << r.budget_flags() << '\n';
  for (const auto& rec : r.records) {
    if (!verbose && rec.status == RecordStatus::Pass) continue;
    std::cout << "  " << to_string(rec.status) << "  " << rec.graph;
    if (rec.k) std::cout << "  k=" << *rec.k;
    std::cout << "  " << rec.values.dump();
    for (const auto& n : rec.notes) std::cout << "\n      " << n;
    std::cout << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cover ideals of graphs: ordered matchings, Betti numbers, Stanley depth"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::string graph_spec, json_path, csv_path, which = "cover", module = "ideal";
  int k = 1;
  bool symbolic = false, verify = false, strict = false;
  std::uint64_t budget = kDefaultSearchBudget;
  std::uint64_t betti_box = 20000;

  auto* inv = app.add_subcommand("invariants", "Graph and ideal invariants of one graph");
  inv->add_option("--graph", graph_spec, "Graph file or inline text")->required();
  inv->add_option("--betti-box", betti_box, "Cap on lcm-box size for Betti computations");
  inv->add_option("--json", json_path, "Write the result as JSON");

  auto* ideal = app.add_subcommand("ideal", "Print the edge or cover ideal, or one of its powers");
  ideal->add_option("--graph", graph_spec, "Graph file or inline text")->required();
  ideal->add_option("--which", which, "edge or cover")->check(CLI::IsMember({"edge", "cover"}));
  ideal->add_option("--power", k, "Power k >= 1")->check(CLI::PositiveNumber);
  ideal->add_flag("--symbolic", symbolic, "Symbolic power of the cover ideal");
  ideal->add_option("--json", json_path, "Write the ideal as JSON");

  auto* dec = app.add_subcommand("decompose", "Constructive Stanley decomposition of J(G)^k or S/J(G)^k");
  dec->add_option("--graph", graph_spec, "Graph file or inline text")->required();
  dec->add_option("--module", module, "ideal or quotient")->check(CLI::IsMember({"ideal", "quotient"}));
  dec->add_option("--power", k, "Power k >= 1")->check(CLI::PositiveNumber);
  dec->add_flag("--verify", verify, "Check the decomposition exactly");
  dec->add_option("--json", json_path, "Write the decomposition as JSON");

  std::string ideal_text;
  std::size_t vars = 0;
  auto* sd = app.add_subcommand("sdepth", "Exact Stanley depth by interval-partition search");
  auto* sd_graph = sd->add_option("--graph", graph_spec, "Graph file or inline text");
  auto* sd_ideal = sd->add_option("--ideal", ideal_text, "Monomial ideal text, e.g. 'x1*x2,x3^2'");
  sd_graph->excludes(sd_ideal);
  sd->add_option("--vars", vars, "Number of variables for --ideal");
  sd->add_option("--which", which, "edge or cover")->check(CLI::IsMember({"edge", "cover"}));
  sd->add_option("--module", module, "ideal or quotient")->check(CLI::IsMember({"ideal", "quotient"}));
  sd->add_option("--power", k, "Power k >= 1")->check(CLI::PositiveNumber);
  sd->add_option("--budget", budget, "Search nodes per decision")->check(CLI::PositiveNumber);
  sd->add_flag("--strict", strict, "Exit 3 when the search budget runs out");
  sd->add_option("--json", json_path, "Write the result and witness as JSON");

  std::string suite;
  SuiteScope scope;
  bool verbose = false;
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> choices = suite_ids();
  choices.push_back("all");
  ver->add_option("--suite", suite, "Suite id or 'all'")->required()->check(CLI::IsMember(choices));
  ver->add_option("--nmax", scope.n_max, "Largest vertex count in sweeps")->check(CLI::Range(1, kDefaultMaxEnumeration));
  ver->add_option("--kmax", scope.k_max, "Largest power")->check(CLI::PositiveNumber);
  ver->add_option("--budget", scope.budget, "Search nodes per sdepth decision")->check(CLI::PositiveNumber);
  ver->add_option("--seed", scope.seed, "Seed for cache spot checks");
  ver->add_option("--betti-box", scope.betti_box, "Cap on lcm-box size for Betti computations");
  ver->add_option("--exact-nmax", scope.exact_sdepth_n_max, "Run the exact sdepth search up to this many vertices");
  ver->add_option("--graph", graph_spec, "Restrict the suite to one graph");
  ver->add_flag("--bipartite-only", scope.bipartite_only, "Only bipartite graphs");
  ver->add_flag("--strict", strict, "Exit 3 when indeterminate results are present");
  ver->add_flag("-v,--verbose", verbose, "Print passing records too");
  ver->add_option("--json", json_path, "Write the report as JSON");
  ver->add_option("--csv", csv_path, "Write the record table as CSV");

  int n_enum = 0;
  EnumerationFilter filter;
  std::string format = "compact";
  auto* en = app.add_subcommand("enumerate", "List labeled graphs on n vertices");
  en->add_option("--n", n_enum, "Vertex count")->required()->check(CLI::Range(0, kDefaultMaxEnumeration));
  en->add_flag("--bipartite", filter.bipartite_only, "Bipartite graphs only");
  en->add_flag("--connected", filter.connected_only, "Connected graphs only");
  en->add_option("--min-edges", filter.min_edges, "Minimum number of edges");
  en->add_option("--format", format, "compact or graph6")->check(CLI::IsMember({"compact", "graph6"}));
  en->add_option("--csv", csv_path, "Write graphs with basic invariants as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*inv) {
      const json out = graph_invariants(load_graph(graph_spec), betti_box);
      print_kv(out);
      write_json(json_path, out);
      return kExitOk;
    }

    if (*ideal) {
      const Graph g = load_graph(graph_spec);
      const MonomialIdeal a = graph_ideal(g, which, k, symbolic);
      std::cout << to_string(a) << '\n';
      write_json(json_path, to_json(a));
      return kExitOk;
    }

    if (*dec) {
      const Graph g = load_graph(graph_spec);
      const ModuleKind kind = parse_kind(module);
      const StanleyDecomposition d = k == 1 ? construct_cover(g, kind) : construct_cover_power(g, k, kind);
      const auto sdepth = d.sdepth();
      std::cout << "module " << to_string(kind) << " of " << to_string(d.ideal()) << '\n'
                << "spaces " << d.spaces().size() << ", min dimension "
                << (sdepth ? std::to_string(*sdepth) : "inf") << '\n';
      for (std::size_t i = 0; i < d.spaces().size(); ++i) {
        const auto& s = d.spaces()[i];
        std::cout << "  " << to_string(s.origin) << " K[";
        bool first = true;
        for (int v : set_members(s.free)) {
          std::cout << (first ? "" : ",") << 'x' << v + 1;
          first = false;
        }
        std::cout << "]   " << d.provenance()[i] << '\n';
      }
      json out = to_json(d);
      int rc = kExitOk;
      if (verify) {
        const DecompositionCheck c = verify_decomposition(d);
        std::cout << "verify: " << (c.ok ? "ok" : "VIOLATION " + c.message) << '\n';
        out["verified"] = c.ok;
        if (!c.ok) {
          out["violation"] = c.message;
          rc = kExitViolation;
        }
      }
      write_json(json_path, out);
      return rc;
    }

    if (*sd) {
      MonomialIdeal a;
      if (!ideal_text.empty()) {
        if (vars == 0) throw InputError("--ideal needs --vars");
        a = parse_ideal(ideal_text, vars);
      } else if (!graph_spec.empty()) {
        a = graph_ideal(load_graph(graph_spec), which, k, false);
      } else {
        throw InputError("sdepth needs --graph or --ideal");
      }
      const ModuleKind kind = parse_kind(module);
      const CharacteristicPoset poset(a, kind);
      const SdepthResult r = sdepth_exact(a, kind, budget);
      std::cout << "ideal      " << to_string(a) << '\n'
                << "module     " << to_string(kind) << '\n'
                << "poset      " << poset.size() << " elements\n";
      if (r.exact())
        std::cout << "sdepth     " << r.lower << '\n';
      else
        std::cout << "sdepth     in [" << r.lower << ", " << r.upper << "] (budget exhausted)\n";
      std::cout << "nodes      " << r.nodes << '\n';
      write_json(json_path, to_json(r, poset));
      return strict && !r.exact() ? kExitIndeterminate : kExitOk;
    }

    if (*ver) {
      if (!graph_spec.empty()) scope.graph = load_graph(graph_spec);
      auto cache = ResultCache::from_environment(scope.seed);
      ResultCache* cache_ptr = cache ? &*cache : nullptr;
      const std::vector<std::string> ids = suite == "all" ? suite_ids() : std::vector<std::string>{suite};
      std::vector<VerificationReport> reports;
      int rc = kExitOk;
      for (const auto& id : ids) {
        reports.push_back(run_suite(id, scope, cache_ptr));
        print_report(reports.back(), verbose);
        rc = std::max(rc, reports.back().exit_code(strict));
      }
      if (cache)
        std::cerr << "cache " << cache->file().string() << ": " << cache->hits() << " hits, " << cache->misses()
                  << " misses, " << cache->spot_checks() << " spot checks\n";
      if (!json_path.empty()) {
        if (reports.size() == 1) {
          write_json(json_path, reports.front().to_json());
        } else {
          json all = json::array();
          for (const auto& r : reports) all.push_back(r.to_json());
          write_json(json_path, {{"reports", all}});
        }
      }
      if (!csv_path.empty()) {
        std::string text;
        for (std::size_t i = 0; i < reports.size(); ++i) {
          std::string part = reports[i].to_csv();
          if (i > 0) part = part.substr(part.find('\n') + 1);
          text += part;
        }
        write_file(csv_path, text);
      }
      // A violation outranks an indeterminate result.
      if (rc == kExitIndeterminate) {
        for (const auto& r : reports)
          if (r.exit_code(false) == kExitViolation) rc = kExitViolation;
      }
      return rc;
    }

    if (*en) {
      std::ostringstream csv;
      csv << "graph,graph6,n,edges,bipartite,connected,nu_o\n";
      const auto count = enumerate_graphs(n_enum, filter, [&](const Graph& g) {
        std::cout << (format == "graph6" ? to_graph6(g) : g.canonical_string()) << '\n';
        if (!csv_path.empty())
          csv << g.canonical_string() << ',' << to_graph6(g) << ',' << g.num_vertices() << ',' << g.num_edges()
              << ',' << is_bipartite(g) << ',' << is_connected(g) << ',' << ordered_matching_number(g) << '\n';
      });
      std::cerr << count << " graphs\n";
      if (!csv_path.empty()) write_file(csv_path, csv.str());
      return kExitOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "not applicable: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitIndeterminate;
  } catch (const CacheMismatch& e) {
    std::cerr << "cache mismatch: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitUsage;
}
