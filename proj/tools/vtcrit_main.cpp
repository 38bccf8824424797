// Command-line front end: generate graph families, query single-graph
// properties, run the theorem suites, and re-render reports.

#include <iostream>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "vtcrit/connectivity.hpp"
#include "vtcrit/group.hpp"
#include "vtcrit/harness.hpp"
#include "vtcrit/io.hpp"
#include "vtcrit/lemma_checks.hpp"
#include "vtcrit/matching.hpp"
#include "vtcrit/symmetry.hpp"

namespace {

using namespace vtcrit;

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

// Graph specs: named:petersen | circulant:10:1,2 | g6:Dhc |
// cayley:path.txt:1,5 | edges:path.txt | g6file:path:index
Graph parse_graph_spec(const std::string& spec) {
  auto fail = [&]() -> Graph {
    throw std::invalid_argument("bad graph spec: " + spec);
  };
  auto colon = spec.find(':');
  if (colon == std::string::npos) return fail();
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (kind == "named") return Graph::named(rest);
  if (kind == "g6") return from_graph6(rest);
  if (kind == "edges") return read_edge_list_file(rest);
  if (kind == "circulant") {
    auto c2 = rest.find(':');
    if (c2 == std::string::npos) return fail();
    return Graph::circulant(std::stoi(rest.substr(0, c2)),
                            parse_int_list(rest.substr(c2 + 1)));
  }
  if (kind == "cayley") {
    auto c2 = rest.rfind(':');
    if (c2 == std::string::npos) return fail();
    GroupTable group = GroupTable::load_file(rest.substr(0, c2));
    return Graph::cayley(group, parse_int_list(rest.substr(c2 + 1)));
  }
  if (kind == "g6file") {
    auto c2 = rest.rfind(':');
    if (c2 == std::string::npos) return fail();
    auto graphs = read_graph6_file(rest.substr(0, c2));
    return graphs.at(std::stoul(rest.substr(c2 + 1)));
  }
  return fail();
}

std::string opt_str(std::optional<int> v) {
  return v ? std::to_string(*v) : "infinite";
}

int run_check(const Graph& g, const std::string& property, int jobs,
              std::uint64_t budget, int cap_n) {
  SymmetryOptions sym{cap_n, 1'000'000};
  auto out = [&](auto&& v) {
    std::cout << v << '\n';
    return 0;
  };
  if (property == "n") return out(g.n());
  if (property == "m") return out(g.edge_count());
  if (property == "g6") return out(to_graph6(g));
  if (property == "degree") {
    auto k = g.regular_degree();
    return out(k ? std::to_string(*k) : std::string("irregular"));
  }
  if (property == "connected") return out(g.is_connected() ? "true" : "false");
  if (property == "components") return out(g.components().size());
  if (property == "girth") return out(opt_str(g.girth()));
  if (property == "odd-girth") return out(opt_str(g.odd_girth()));
  if (property == "bipartite") return out(g.is_bipartite() ? "true" : "false");
  if (property == "lambda") return out(edge_connectivity(g));
  if (property == "kappa") return out(vertex_connectivity(g));
  if (property == "tau") return out(tau(g));
  if (property == "alpha") return out(independence_number(g, cap_n));
  if (property == "matching") return out(matching_number(g));
  if (property == "deficiency") return out(deficiency(g));
  if (property == "perfect-matching")
    return out(has_perfect_matching(g) ? "true" : "false");
  if (property == "berge-witness") {
    auto w = berge_witness(g);
    std::ostringstream os;
    os << '{';
    bool first = true;
    for_each_vertex(w, [&](int v) {
      os << (first ? "" : ",") << v;
      first = false;
    });
    os << '}';
    return out(os.str());
  }
  if (property == "factor-critical")
    return out(is_factor_critical(g) ? "true" : "false");
  if (property == "bicritical") return out(is_bicritical(g) ? "true" : "false");
  if (property == "elementary") return out(is_elementary(g) ? "true" : "false");
  if (property == "aut-order") return out(automorphism_group(g, sym).order_string());
  if (property == "vertex-transitive")
    return out(is_vertex_transitive(g, sym) ? "true" : "false");
  if (property == "orbits") return out(orbits(g, sym).size());
  if (property.rfind("pfc:", 0) == 0) {
    int p = std::stoi(property.substr(4));
    auto res = is_p_factor_critical(g, p, {jobs, budget});
    if (res.status == kernels::SweepStatus::budget_exceeded)
      return out("budget-exceeded");
    return out(res.critical() ? "true" : "false");
  }
  if (property.rfind("qext:", 0) == 0) {
    int q = std::stoi(property.substr(5));
    auto res = is_q_extendable(g, q, budget);
    if (res.status == kernels::SweepStatus::budget_exceeded)
      return out("budget-exceeded");
    return out(res.extendable() ? "true" : "false");
  }
  if (property.rfind("lambda_s:", 0) == 0) {
    int s = std::stoi(property.substr(9));
    auto cut = restricted_edge_connectivity(g, s);
    if (!cut) return out("none");
    std::ostringstream os;
    os << cut->lambda << " (atoms: " << cut->atoms.size() << " of size "
       << popcount(cut->atoms[0].members) << ")";
    return out(os.str());
  }
  if (property == "no4fc-witness") {
    auto w = find_no4fc_witness(g, {jobs, budget});
    if (!w) return out("none (graph is 4-factor-critical)");
    std::ostringstream os;
    os << "X(size " << popcount(w->x) << ") with " << w->components.size()
       << " factor-critical components";
    return out(os.str());
  }
  std::cerr << "unknown property: " << property << '\n';
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matching-criticality and graph-symmetry verification toolkit"};
  app.require_subcommand(1);

  int jobs = 1;
  int cap_n = 32;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  std::string format = "json";
  app.add_option("--jobs", jobs, "worker threads (0 = hardware)");
  app.add_option("--cap-n", cap_n, "automorphism-search size cap");
  app.add_option("--budget", budget, "subset budget per brute-force test");
  app.add_option("--seed", seed, "seed for randomized oracle suites");
  app.add_option("--format", format, "report format: json|csv");

  // generate
  auto* gen = app.add_subcommand("generate", "emit a graph family as graph6 lines");
  std::string gen_family = "circulant";
  int gen_nmin = 6, gen_nmax = 10, gen_degmin = 1, gen_degmax = 64;
  std::string gen_path, gen_names, gen_out;
  bool gen_ids = false;
  gen->add_option("--family", gen_family, "circulant|named|cayley|g6|default");
  gen->add_option("--n-min", gen_nmin);
  gen->add_option("--n-max", gen_nmax);
  gen->add_option("--degree-min", gen_degmin);
  gen->add_option("--degree-max", gen_degmax);
  gen->add_option("--path", gen_path, "group table / graph6 file / groups dir");
  gen->add_option("--names", gen_names, "comma-separated catalog names");
  gen->add_option("-o,--output", gen_out, "output file (default stdout)");
  gen->add_flag("--ids", gen_ids, "prefix each line with the family id");

  // check
  auto* chk = app.add_subcommand("check", "compute one property of one graph");
  std::string chk_graph, chk_property;
  chk->add_option("--graph", chk_graph, "graph spec, e.g. circulant:10:1,2")->required();
  chk->add_option("--property", chk_property, "property name (see README)")->required();

  // suite
  auto* sui = app.add_subcommand("suite", "run a theorem suite over a family");
  std::string sui_name = "all";
  std::string sui_family = "default", sui_path, sui_names, sui_out;
  int sui_nmin = 6, sui_nmax = 14, sui_degmin = 1, sui_degmax = 64;
  sui->add_option("--suite", sui_name, "main|classification|connectivity|lemmas|all");
  sui->add_option("--family", sui_family, "circulant|named|cayley|g6|default");
  sui->add_option("--path", sui_path, "group table / graph6 file / groups dir");
  sui->add_option("--names", sui_names, "comma-separated catalog names");
  sui->add_option("--n-min", sui_nmin);
  sui->add_option("--n-max", sui_nmax);
  sui->add_option("--degree-min", sui_degmin);
  sui->add_option("--degree-max", sui_degmax);
  sui->add_option("-o,--output", sui_out, "report file (default stdout)");

  // report
  auto* rep = app.add_subcommand("report", "re-render a JSON report");
  std::string rep_in, rep_out;
  bool rep_summary = false;
  rep->add_option("-i,--input", rep_in, "report JSON")->required();
  rep->add_option("-o,--output", rep_out, "output file (default stdout)");
  rep->add_flag("--summary", rep_summary, "print the summary block only");

  CLI11_PARSE(app, argc, argv);

  try {
    auto build_specs = [&](const std::string& family, const std::string& path,
                           const std::string& names, int nmin, int nmax,
                           int degmin, int degmax) {
      std::vector<vtcrit::FamilySpec> specs;
      if (family == "default") {
        specs = vtcrit::default_family(path.empty() ? "data/groups" : path);
      } else {
        vtcrit::FamilySpec s;
        if (family == "circulant") {
          s.kind = vtcrit::FamilyKind::circulant_sweep;
          s.n_min = nmin;
          s.n_max = nmax;
        } else if (family == "named") {
          s.kind = vtcrit::FamilyKind::named_list;
          std::stringstream ss(names);
          std::string item;
          while (std::getline(ss, item, ','))
            if (!item.empty()) s.names.push_back(item);
        } else if (family == "cayley") {
          s.kind = vtcrit::FamilyKind::cayley_file;
          s.path = path;
        } else if (family == "g6") {
          s.kind = vtcrit::FamilyKind::graph6_file;
          s.path = path;
        } else {
          throw std::invalid_argument("unknown family kind: " + family);
        }
        s.degree_min = degmin;
        s.degree_max = degmax;
        specs.push_back(s);
      }
      return specs;
    };

    if (*gen) {
      auto entries = vtcrit::enumerate_families(build_specs(
          gen_family, gen_path, gen_names, gen_nmin, gen_nmax, gen_degmin, gen_degmax));
      std::ofstream file;
      std::ostream* os = &std::cout;
      if (!gen_out.empty()) {
        file.open(gen_out);
        os = &file;
      }
      for (const auto& e : entries) {
        if (gen_ids) *os << e.id << '\t';
        *os << vtcrit::to_graph6(e.graph) << '\n';
      }
      return 0;
    }

    if (*chk) {
      Graph g = parse_graph_spec(chk_graph);
      return run_check(g, chk_property, jobs, budget, cap_n);
    }

    if (*sui) {
      auto entries = vtcrit::enumerate_families(build_specs(
          sui_family, sui_path, sui_names, sui_nmin, sui_nmax, sui_degmin, sui_degmax));
      vtcrit::RunConfig cfg;
      cfg.jobs = jobs;
      cfg.cap_n = cap_n;
      cfg.budget = budget;
      if (sui_name != "all") cfg.suites = {sui_name};
      auto run = vtcrit::run_suites(entries, cfg, sui_family);
      if (sui_out.empty()) {
        if (format == "json")
          std::cout << vtcrit::report_json(run).dump(1) << '\n';
        else
          std::cout << vtcrit::report_csv(run);
      } else {
        vtcrit::write_report(run, format, sui_out);
      }
      std::cerr << run.results.size() << " graphs, " << run.violations
                << " violations, " << run.budget_skips << " budget skips\n";
      return run.violations > 0 ? 1 : 0;
    }

    if (*rep) {
      std::ifstream in(rep_in);
      if (!in) throw std::runtime_error("cannot open report: " + rep_in);
      auto doc = nlohmann::ordered_json::parse(in);
      std::ofstream file;
      std::ostream* os = &std::cout;
      if (!rep_out.empty()) {
        file.open(rep_out);
        os = &file;
      }
      if (rep_summary) {
        *os << doc["summary"].dump(1) << '\n';
      } else if (format == "csv") {
        *os << "graph_id,graph6,check,verdict\n";
        for (const auto& r : doc["results"])
          for (const auto& [name, v] : r["verdicts"].items())
            *os << '"' << r["id"].get<std::string>() << "\","
                << r["graph6"].get<std::string>() << ',' << name << ','
                << v.get<std::string>() << '\n';
      } else {
        *os << doc.dump(1) << '\n';
      }
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  }
  return 2;
}
