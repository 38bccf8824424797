#include "vtcrit/harness.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "vtcrit/connectivity.hpp"
#include "vtcrit/group.hpp"
#include "vtcrit/io.hpp"
#include "vtcrit/lemma_checks.hpp"
#include "vtcrit/symmetry.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace vtcrit {

namespace {

std::string set_string(VertexSet s) {
  std::ostringstream os;
  bool first = true;
  os << '{';
  for_each_vertex(s, [&](int v) {
    if (!first) os << ',';
    os << v;
    first = false;
  });
  os << '}';
  return os.str();
}

nlohmann::ordered_json set_json(VertexSet s) {
  auto arr = nlohmann::ordered_json::array();
  for_each_vertex(s, [&](int v) { arr.push_back(v); });
  return arr;
}

}  // namespace

std::vector<FamilyEntry> enumerate_family(const FamilySpec& spec) {
  std::vector<FamilyEntry> out;
  switch (spec.kind) {
    case FamilyKind::circulant_sweep: {
      if (spec.n_min > spec.n_max || spec.n_min < 2)
        throw std::invalid_argument("bad circulant order range");
      if (spec.degree_min > spec.degree_max)
        throw std::invalid_argument("bad degree filter");
      for (int n = spec.n_min; n <= spec.n_max; ++n) {
        int half = n / 2;
        for (std::uint32_t mask = 1; mask < (1u << half); ++mask) {
          std::vector<int> conn;
          for (int i = 0; i < half; ++i)
            if (mask & (1u << i)) conn.push_back(i + 1);
          Graph g = Graph::circulant(n, conn);
          int deg = g.degree(0);
          if (deg < spec.degree_min || deg > spec.degree_max) continue;
          std::ostringstream id;
          id << "circulant:n=" << n << ":S=";
          id << '{';
          for (size_t i = 0; i < conn.size(); ++i)
            id << (i ? "," : "") << conn[i];
          id << '}';
          out.push_back({std::move(g), id.str(), "circulant"});
        }
      }
      break;
    }
    case FamilyKind::cayley_file: {
      GroupTable group = GroupTable::load_file(spec.path);
      auto classes = group.inverse_classes();
      if (classes.size() > 30)
        throw std::invalid_argument("too many inverse classes");
      std::string label = spec.label.empty()
                              ? std::filesystem::path(spec.path).stem().string()
                              : spec.label;
      for (std::uint32_t mask = 1; mask < (1u << classes.size()); ++mask) {
        std::vector<int> conn;
        for (size_t i = 0; i < classes.size(); ++i)
          if (mask & (1u << i))
            conn.insert(conn.end(), classes[i].begin(), classes[i].end());
        if (static_cast<int>(conn.size()) < spec.degree_min ||
            static_cast<int>(conn.size()) > spec.degree_max)
          continue;
        std::sort(conn.begin(), conn.end());
        Graph g = Graph::cayley(group, conn);
        std::ostringstream id;
        id << "cayley:" << label << ":S=" << set_string(vertices_to_set(conn));
        out.push_back({std::move(g), id.str(), "cayley"});
      }
      break;
    }
    case FamilyKind::named_list: {
      for (const auto& name : spec.names)
        out.push_back({Graph::named(name), "named:" + name, "named"});
      break;
    }
    case FamilyKind::graph6_file: {
      auto graphs = read_graph6_file(spec.path);
      for (size_t i = 0; i < graphs.size(); ++i)
        out.push_back({graphs[i],
                       "g6:" + spec.path + ":" + std::to_string(i), "g6"});
      break;
    }
  }
  return out;
}

std::vector<FamilyEntry> enumerate_families(const std::vector<FamilySpec>& specs) {
  std::vector<FamilyEntry> out;
  for (const auto& spec : specs) {
    auto part = enumerate_family(spec);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<FamilySpec> default_family(const std::string& groups_dir) {
  std::vector<FamilySpec> specs;
  FamilySpec circ;
  circ.kind = FamilyKind::circulant_sweep;
  circ.n_min = 6;
  circ.n_max = 14;
  specs.push_back(circ);
  FamilySpec named;
  named.kind = FamilyKind::named_list;
  named.names = {"petersen", "K4", "K5", "K6", "K7", "K8",
                 "K3,3", "K4,4", "K5,5", "C5", "C6", "C7"};
  specs.push_back(named);
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(groups_dir))
    if (entry.path().extension() == ".txt") files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    FamilySpec cay;
    cay.kind = FamilyKind::cayley_file;
    cay.path = f;
    specs.push_back(cay);
  }
  return specs;
}

namespace {

constexpr const char* kPass = "pass";
constexpr const char* kFail = "fail";
constexpr const char* kVacuous = "vacuous";
constexpr const char* kBudget = "skipped-budget";

struct Analysis {
  bool connected = false;
  bool bipartite = false;
  bool has_triangle = false;
  bool even = false;
  std::optional<int> k;
  std::optional<int> girth, odd_girth;
  bool aut_known = false;
  bool vt = false;
  std::string aut_order;
  int orbit_count = 0;
  std::optional<int> lambda, kappa;
  std::optional<AutGroup> aut;
  // lambda_s cuts computed by the connectivity suite, reused by lemmas.
  std::vector<std::pair<int, CutReport>> cuts;
};

const char* sweep_verdict(kernels::SweepStatus st, bool expect_all_pass) {
  switch (st) {
    case kernels::SweepStatus::budget_exceeded:
      return kBudget;
    case kernels::SweepStatus::all_pass:
      return expect_all_pass ? kPass : kFail;
    case kernels::SweepStatus::found:
      return expect_all_pass ? kFail : kPass;
  }
  return kFail;
}

void run_main_suite(const FamilyEntry& e, const RunConfig& cfg, Analysis& a,
                    SuiteResult& r) {
  const Graph& g = e.graph;
  bool applicable = a.connected && a.vt && !a.bipartite && a.even && g.n() >= 6;
  if (!applicable) {
    r.verdicts["theorem2_4fc"] = kVacuous;
    r.verdicts["theorem4_connectivity_necessary"] = kVacuous;
  } else {
    int k = *a.k;
    auto pfc = is_p_factor_critical(g, 4, {1, cfg.budget});
    if (pfc.status == kernels::SweepStatus::budget_exceeded) {
      r.verdicts["theorem2_4fc"] = kBudget;
      r.verdicts["theorem4_connectivity_necessary"] = kBudget;
    } else {
      bool is4fc = pfc.critical();
      r.properties["pfc4"] = is4fc;
      r.verdicts["theorem2_4fc"] = (is4fc == (k >= 5)) ? kPass : kFail;
      if (!is4fc) {
        r.witnesses["theorem2_4fc"] = {
            {"failing_set", set_json(*pfc.failing_set)},
            {"witness_x", set_json(pfc.witness->x)},
            {"odd_components", pfc.witness->odd_components}};
      }
      if (is4fc) {
        if (!a.kappa) a.kappa = vertex_connectivity(g);
        if (!a.lambda) a.lambda = edge_connectivity(g);
        r.verdicts["theorem4_connectivity_necessary"] =
            (*a.kappa >= 4 && *a.lambda >= 5) ? kPass : kFail;
      } else {
        r.verdicts["theorem4_connectivity_necessary"] = kVacuous;
      }
    }
  }

  // Cayley corollary: degree >= 5 forces 2-extendability.
  bool cayley_kind = e.kind == "circulant" || e.kind == "cayley";
  bool cor_applicable = cayley_kind && a.connected && !a.bipartite && a.even &&
                        a.k && *a.k >= 5;
  if (!cor_applicable) {
    r.verdicts["corollary_2extendable"] = kVacuous;
    r.verdicts["favaron_q2"] = kVacuous;
    return;
  }
  auto qe = is_q_extendable(g, 2, cfg.budget);
  r.verdicts["corollary_2extendable"] = sweep_verdict(qe.status, true);
  if (qe.status == kernels::SweepStatus::found) {
    auto arr = nlohmann::ordered_json::array();
    for (auto [u, v] : qe.blocking) arr.push_back({u, v});
    r.witnesses["corollary_2extendable"] = {{"blocking_matching", arr}};
  }
  if (qe.status == kernels::SweepStatus::all_pass) {
    r.properties["qext2"] = true;
    // Even-q extendability in a connected non-bipartite graph forces
    // q-factor-criticality; q = 2 means bicritical.
    r.verdicts["favaron_q2"] = is_bicritical(g) ? kPass : kFail;
  } else {
    if (qe.status == kernels::SweepStatus::found) r.properties["qext2"] = false;
    r.verdicts["favaron_q2"] = kVacuous;
  }
}

void run_classification_suite(const FamilyEntry& e, const RunConfig& cfg,
                              Analysis& a, SuiteResult& r) {
  (void)cfg;
  const Graph& g = e.graph;
  if (!(a.connected && a.vt)) {
    r.verdicts["theorem1_classification"] = kVacuous;
    return;
  }
  if (!a.even) {
    bool fc = is_factor_critical(g);
    r.properties["factor_critical"] = fc;
    r.properties["classification_branch"] = "factor-critical";
    r.verdicts["theorem1_classification"] = fc ? kPass : kFail;
    return;
  }
  if (a.bipartite) {
    bool elem = is_elementary(g);
    r.properties["elementary"] = elem;
    r.properties["classification_branch"] = "elementary-bipartite";
    r.verdicts["theorem1_classification"] = elem ? kPass : kFail;
  } else {
    bool bic = is_bicritical(g);
    r.properties["bicritical"] = bic;
    r.properties["classification_branch"] = "bicritical";
    r.verdicts["theorem1_classification"] = bic ? kPass : kFail;
  }
}

void run_connectivity_suite(const FamilyEntry& e, const RunConfig& cfg,
                            Analysis& a, SuiteResult& r) {
  (void)cfg;
  const Graph& g = e.graph;
  if (!(a.connected && a.vt)) {
    for (const char* name : {"theorem6_lambda", "theorem7_kappa", "lemma4_kappa",
                             "lemma3_kappa_tau", "lemma13_atoms"})
      r.verdicts[name] = kVacuous;
    return;
  }
  int k = *a.k;
  if (!a.lambda) a.lambda = edge_connectivity(g);
  if (!a.kappa) a.kappa = vertex_connectivity(g);
  r.verdicts["theorem6_lambda"] = (*a.lambda == k) ? kPass : kFail;
  r.verdicts["theorem7_kappa"] = (3 * *a.kappa > 2 * k) ? kPass : kFail;
  r.verdicts["lemma4_kappa"] =
      (k == 4 || k == 6) ? ((*a.kappa == k) ? kPass : kFail) : kVacuous;
  if (*a.kappa < k) {
    int t = tau(g);
    bool holds = t > 0 && *a.kappa % t == 0 && *a.kappa / t >= 2;
    r.properties["tau"] = t;
    r.verdicts["lemma3_kappa_tau"] = holds ? kPass : kFail;
  } else {
    r.verdicts["lemma3_kappa_tau"] = kVacuous;
  }

  // Atom properties fire on triangle-free members of degree >= 5 with
  // lambda_s defined and <= 3k, for each s in 4..8.
  if (a.has_triangle || k < 5 || g.n() > 24) {
    r.verdicts["lemma13_atoms"] = kVacuous;
    return;
  }
  bool any = false, all_ok = true;
  for (int s = 4; s <= 8 && 2 * s <= g.n(); ++s) {
    auto cut = restricted_edge_connectivity(g, s);
    if (!cut || cut->lambda > 3 * k) continue;
    a.cuts.emplace_back(s, *cut);
    auto rep = verify_atom_properties(g, s, *cut, 1);
    any = true;
    if (!rep.ok()) {
      all_ok = false;
      r.witnesses["lemma13_atoms"] = {{"s", s}, {"violations", rep.violations}};
    }
  }
  r.verdicts["lemma13_atoms"] = !any ? kVacuous : (all_ok ? kPass : kFail);
}

void lemma_verdict(SuiteResult& r, const char* name,
                   const std::vector<LemmaReport>& reports) {
  bool any_met = false, ok = true;
  for (const auto& rep : reports) {
    if (!rep.hypotheses_met) continue;
    any_met = true;
    if (!*rep.conclusion_holds) {
      ok = false;
      r.witnesses[name] = {{"counterexample", rep.counterexample.value_or("")},
                           {"note", rep.note}};
    }
  }
  r.verdicts[name] = !any_met ? kVacuous : (ok ? kPass : kFail);
}

void run_lemma_suite(const FamilyEntry& e, const RunConfig& cfg, Analysis& a,
                     SuiteResult& r) {
  const Graph& g = e.graph;
  GraphFacts facts;
  facts.connected = a.connected;
  facts.bipartite = a.bipartite;
  facts.has_triangle = a.has_triangle;
  facts.vertex_transitive = a.vt;
  facts.regular_degree = a.k;
  facts.girth = a.girth;
  facts.odd_girth = a.odd_girth;

  lemma_verdict(r, "lemma1_mantel", {check_mantel(g, facts)});
  lemma_verdict(r, "lemma2_order_girth", {check_order_girth(g, facts)});
  if (facts.vertex_transitive && !facts.bipartite && facts.regular_degree &&
      g.n() <= cfg.cap_n) {
    auto rep = check_independence_bound(g, facts);
    r.properties["alpha"] = independence_number(g, cfg.cap_n);
    lemma_verdict(r, "lemma6_independence", {rep});
  } else {
    r.verdicts["lemma6_independence"] = kVacuous;
  }

  // Candidate subsets for the two per-subset lemmas: a deterministic
  // battery built from the closed/open neighborhood of vertex 0 and a
  // maximum independent set.
  std::vector<VertexSet> battery{bit(0), g.neighbors(0), g.neighbors(0) | bit(0)};
  VertexSet non_nbr = g.vertices() & ~(g.neighbors(0) | bit(0));
  if (non_nbr) battery.push_back(g.neighbors(0) | bit(lowest_vertex(non_nbr)));
  if (g.n() <= cfg.cap_n) battery.push_back(maximum_independent_set(g, cfg.cap_n));
  std::sort(battery.begin(), battery.end());
  battery.erase(std::unique(battery.begin(), battery.end()), battery.end());

  std::vector<LemmaReport> girthx, trivial;
  for (VertexSet x : battery) {
    if (x == 0 || x == g.vertices()) continue;
    girthx.push_back(check_girthX_bound(g, x, facts));
    trivial.push_back(check_trivial_components_bound(g, x, facts));
  }
  lemma_verdict(r, "lemma7_girth_x", girthx);
  lemma_verdict(r, "lemma8_trivial_components", trivial);
  lemma_verdict(r, "lemma9_k36", {check_k36_condition(g, facts)});

  // Corollary 2k-2 bound.
  bool cor2_applicable = a.connected && a.vt && a.k && g.n() <= 24 &&
                         ((!a.girth || *a.girth > 3) || g.n() < 2 * *a.k);
  if (cor2_applicable) {
    auto rep = corollary_2subset_check(g);
    r.properties["min_boundary_2subset"] = rep.min_boundary;
    r.verdicts["corollary2_boundary"] = rep.holds ? kPass : kFail;
    if (!rep.holds)
      r.witnesses["corollary2_boundary"] = {{"argmin", set_json(rep.argmin)},
                                            {"min_boundary", rep.min_boundary}};
  } else {
    r.verdicts["corollary2_boundary"] = kVacuous;
  }

  // Minimum-boundary selection rules (imprimitive blocks / degree shape).
  if (a.connected && a.vt && a.k && g.n() <= 24) {
    auto rep = atom_imprimitivity_check(g, SymmetryOptions{cfg.cap_n, 1'000'000}, 1);
    r.verdicts["theorem8_blocks"] =
        !(rep.rule_a_evaluable && rep.rule_a_hypothesis)
            ? kVacuous
            : (rep.rule_a_failures.empty() ? kPass : kFail);
    r.verdicts["corollary1_degree"] =
        !(rep.rule_b_evaluable && rep.rule_b_hypothesis)
            ? kVacuous
            : (rep.rule_b_failures.empty() ? kPass : kFail);
    if (!rep.rule_a_failures.empty())
      r.witnesses["theorem8_blocks"] = {{"not_a_block", set_json(rep.rule_a_failures[0])}};
    if (!rep.rule_b_failures.empty())
      r.witnesses["corollary1_degree"] = {{"violator", set_json(rep.rule_b_failures[0])}};

    // Induced transitivity on every block this run has certified,
    // together with lambda_s-atoms that happen to be blocks.
    std::vector<VertexSet> blocks = rep.verified_blocks;
    for (const auto& [s, cut] : a.cuts)
      for (const auto& atom : cut.atoms) {
        if (atom.members == 0 || atom.members == g.vertices()) continue;
        if (a.aut && is_imprimitive_block(*a.aut, atom.members).is_block)
          blocks.push_back(atom.members);
      }
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    if (blocks.empty()) {
      r.verdicts["lemma5_block_induced"] = kVacuous;
    } else {
      bool ok = true;
      for (VertexSet b : blocks)
        if (!is_vertex_transitive(g.induced(b))) {
          ok = false;
          r.witnesses["lemma5_block_induced"] = {{"block", set_json(b)}};
        }
      r.verdicts["lemma5_block_induced"] = ok ? kPass : kFail;
    }
  } else {
    r.verdicts["theorem8_blocks"] = kVacuous;
    r.verdicts["corollary1_degree"] = kVacuous;
    r.verdicts["lemma5_block_induced"] = kVacuous;
  }
}

SuiteResult analyze_entry(const FamilyEntry& e, const RunConfig& cfg) {
  const Graph& g = e.graph;
  SuiteResult r;
  r.id = e.id;
  r.kind = e.kind;
  r.graph6 = to_graph6(g);

  Analysis a;
  a.connected = g.is_connected();
  a.bipartite = g.is_bipartite();
  a.has_triangle = g.has_triangle();
  a.even = g.n() % 2 == 0;
  a.k = g.regular_degree();
  a.girth = g.girth();
  a.odd_girth = g.odd_girth();

  r.properties["n"] = g.n();
  r.properties["m"] = g.edge_count();
  r.properties["connected"] = a.connected;
  r.properties["k"] = a.k ? nlohmann::ordered_json(*a.k) : nlohmann::ordered_json();
  r.properties["girth"] = a.girth ? nlohmann::ordered_json(*a.girth)
                                  : nlohmann::ordered_json();
  r.properties["odd_girth"] = a.odd_girth ? nlohmann::ordered_json(*a.odd_girth)
                                          : nlohmann::ordered_json();
  r.properties["bipartite"] = a.bipartite;

  if (g.n() <= cfg.cap_n) {
    a.aut = automorphism_group(g, SymmetryOptions{cfg.cap_n, 1'000'000});
    a.aut_known = true;
    a.vt = a.aut->transitive();
    a.aut_order = a.aut->order_string();
    a.orbit_count = static_cast<int>(a.aut->vertex_orbits().size());
    r.properties["aut_order"] = a.aut_order;
    r.properties["vertex_transitive"] = a.vt;
    r.properties["orbits"] = a.orbit_count;
  } else {
    r.properties["aut_order"] = nullptr;
    r.properties["vertex_transitive"] = nullptr;
    r.properties["orbits"] = nullptr;
  }

  auto wants = [&](const char* s) {
    return std::find(cfg.suites.begin(), cfg.suites.end(), s) != cfg.suites.end();
  };
  // Connectivity runs before the lemma suite so computed cuts are reused.
  if (wants(kSuiteMain)) run_main_suite(e, cfg, a, r);
  if (wants(kSuiteClassification)) run_classification_suite(e, cfg, a, r);
  if (wants(kSuiteConnectivity)) run_connectivity_suite(e, cfg, a, r);
  if (wants(kSuiteLemmas)) run_lemma_suite(e, cfg, a, r);

  if (a.lambda) r.properties["lambda"] = *a.lambda;
  if (a.kappa) r.properties["kappa"] = *a.kappa;
  return r;
}

}  // namespace

SuiteRun run_suites(const std::vector<FamilyEntry>& entries, const RunConfig& cfg,
                    const std::string& family_label) {
  SuiteRun run;
  run.family_label = family_label;
  run.suites = cfg.suites;
  run.budget = cfg.budget;
  run.results.resize(entries.size());
  const int jobs = cfg.jobs;
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) \
    num_threads(jobs > 0 ? jobs : omp_get_max_threads())
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(entries.size()); ++i)
    run.results[i] = analyze_entry(entries[i], cfg);
  for (const auto& r : run.results)
    for (const auto& [name, verdict] : r.verdicts.items()) {
      if (verdict == kFail) ++run.violations;
      if (verdict == kBudget) ++run.budget_skips;
    }
  return run;
}

namespace {

SuiteRun run_one(const std::vector<FamilyEntry>& entries, RunConfig cfg,
                 const char* suite) {
  cfg.suites = {suite};
  return run_suites(entries, cfg, suite);
}

}  // namespace

SuiteRun run_main_theorem_suite(const std::vector<FamilyEntry>& e, RunConfig cfg) {
  return run_one(e, cfg, kSuiteMain);
}
SuiteRun run_classification_suite(const std::vector<FamilyEntry>& e, RunConfig cfg) {
  return run_one(e, cfg, kSuiteClassification);
}
SuiteRun run_connectivity_suite(const std::vector<FamilyEntry>& e, RunConfig cfg) {
  return run_one(e, cfg, kSuiteConnectivity);
}
SuiteRun run_lemma_suite(const std::vector<FamilyEntry>& e, RunConfig cfg) {
  return run_one(e, cfg, kSuiteLemmas);
}

nlohmann::ordered_json report_json(const SuiteRun& run, bool with_timestamp) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["generator"] = "vtcrit";
  if (with_timestamp) {
    auto now = std::chrono::system_clock::now();
    auto t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    doc["timestamp"] = buf;
  }
  doc["family"] = run.family_label;
  doc["suites"] = run.suites;
  doc["budget"] = run.budget;
  auto results = nlohmann::ordered_json::array();
  std::map<std::string, int> verdict_counts;
  for (const auto& r : run.results) {
    nlohmann::ordered_json rec;
    rec["id"] = r.id;
    rec["kind"] = r.kind;
    rec["graph6"] = r.graph6;
    rec["properties"] = r.properties;
    rec["verdicts"] = r.verdicts;
    if (!r.witnesses.empty()) rec["witnesses"] = r.witnesses;
    results.push_back(std::move(rec));
    for (const auto& [name, v] : r.verdicts.items())
      ++verdict_counts[v.get<std::string>()];
  }
  doc["results"] = std::move(results);
  doc["summary"] = {{"graphs", run.results.size()},
                    {"violations", run.violations},
                    {"budget_skips", run.budget_skips},
                    {"verdict_counts", verdict_counts}};
  return doc;
}

std::string report_csv(const SuiteRun& run) {
  std::ostringstream os;
  os << "graph_id,graph6,check,verdict\n";
  for (const auto& r : run.results)
    for (const auto& [name, v] : r.verdicts.items())
      os << '"' << r.id << "\"," << r.graph6 << ',' << name << ','
         << v.get<std::string>() << '\n';
  return os.str();
}

void write_report(const SuiteRun& run, const std::string& format,
                  const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report: " + path);
  if (format == "json")
    out << report_json(run).dump(1) << '\n';
  else if (format == "csv")
    out << report_csv(run);
  else
    throw std::invalid_argument("unknown report format: " + format);
}

}  // namespace vtcrit
