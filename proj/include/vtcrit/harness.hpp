#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "vtcrit/graph.hpp"
#include "vtcrit/matching.hpp"

namespace vtcrit {

enum class FamilyKind { circulant_sweep, cayley_file, named_list, graph6_file };

struct FamilySpec {
  FamilyKind kind = FamilyKind::named_list;
  int n_min = 6, n_max = 14;      // circulant sweep order range
  int degree_min = 1;             // connection-set degree filters
  int degree_max = kMaxVertices;
  std::vector<std::string> names;  // named_list
  std::string path;                // cayley_file / graph6_file
  std::string label;               // short tag used in graph ids
};

struct FamilyEntry {
  Graph graph;
  std::string id;
  std::string kind;  // "circulant" | "cayley" | "named" | "g6"
};

// Deterministic order: connection sets ascend lexicographically, files
// in line order. Isomorphic duplicates are kept.
std::vector<FamilyEntry> enumerate_family(const FamilySpec& spec);
std::vector<FamilyEntry> enumerate_families(const std::vector<FamilySpec>& specs);

// Circulants of order 6..14 over every connection set, the named
// fixtures, and every bundled group table (all groups of order <= 16).
std::vector<FamilySpec> default_family(const std::string& groups_dir);

inline constexpr const char* kSuiteMain = "main";
inline constexpr const char* kSuiteClassification = "classification";
inline constexpr const char* kSuiteConnectivity = "connectivity";
inline constexpr const char* kSuiteLemmas = "lemmas";

struct RunConfig {
  int jobs = 1;                        // graph-level parallelism
  int cap_n = 32;                      // automorphism search cap
  std::uint64_t budget = kDefaultBudget;  // per-test subset budget
  std::vector<std::string> suites{kSuiteMain, kSuiteClassification,
                                  kSuiteConnectivity, kSuiteLemmas};
};

struct SuiteResult {
  std::string id;
  std::string kind;
  std::string graph6;
  nlohmann::ordered_json properties;
  nlohmann::ordered_json verdicts;   // check -> pass|fail|vacuous|skipped-budget
  nlohmann::ordered_json witnesses;  // check -> counterexample payload
};

struct SuiteRun {
  std::string family_label;
  std::vector<std::string> suites;
  std::uint64_t budget = 0;
  std::vector<SuiteResult> results;
  int violations = 0;
  int budget_skips = 0;
};

SuiteRun run_suites(const std::vector<FamilyEntry>& entries, const RunConfig& cfg,
                    const std::string& family_label = "family");

// Single-suite wrappers over run_suites.
SuiteRun run_main_theorem_suite(const std::vector<FamilyEntry>&, RunConfig cfg = {});
SuiteRun run_classification_suite(const std::vector<FamilyEntry>&, RunConfig cfg = {});
SuiteRun run_connectivity_suite(const std::vector<FamilyEntry>&, RunConfig cfg = {});
SuiteRun run_lemma_suite(const std::vector<FamilyEntry>&, RunConfig cfg = {});

nlohmann::ordered_json report_json(const SuiteRun& run, bool with_timestamp = true);
std::string report_csv(const SuiteRun& run);
void write_report(const SuiteRun& run, const std::string& format,
                  const std::string& path);

}  // namespace vtcrit
