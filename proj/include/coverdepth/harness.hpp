#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "coverdepth/graph.hpp"
#include "coverdepth/sdepth.hpp"

namespace coverdepth {

using nlohmann::json;

inline constexpr const char* kToolVersion = COVERDEPTH_VERSION;
inline constexpr const char* kCacheEnvVar = "COVERDEPTH_CACHE_DIR";

/// Exit statuses shared by the CLI and the suites.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitUsage = 2,
  kExitIndeterminate = 3,
};

struct SuiteScope {
  int n_max = 4;
  int k_max = 3;
  std::uint64_t budget = kDefaultSearchBudget;
  std::uint64_t seed = 0;
  bool bipartite_only = false;
  /// Restricts a suite to one instance instead of its sweep or family.
  std::optional<Graph> graph;
  std::uint64_t betti_box = 20000;
  /// Exact Stanley depth is attempted on instances with at most this many vertices.
  int exact_sdepth_n_max = 4;

  json to_json() const;
};

enum class RecordStatus { Pass, Fail, Indeterminate, Flagged };

const char* to_string(RecordStatus s);

struct InstanceRecord {
  std::string graph;
  std::string graph6;
  int n = 0;
  std::optional<int> k;
  json values = json::object();
  RecordStatus status = RecordStatus::Pass;
  /// Some exact computation ran out of budget (reported, not a failure).
  bool budget_flag = false;
  std::vector<std::string> notes;

  json to_json() const;
};

struct VerificationReport {
  std::string suite;
  SuiteScope scope;
  std::vector<InstanceRecord> records;

  std::size_t count(RecordStatus s) const;
  std::size_t budget_flags() const;
  json to_json() const;
  std::string to_csv() const;
  /// 0 when everything passed, 1 on any failure, 3 under `strict` when some
  /// record is indeterminate or budget-flagged.
  int exit_code(bool strict) const;
};

class CacheMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON-lines store of computed values keyed by graph, computation id,
/// parameters and tool version. A seeded sample of hits is recomputed and
/// compared; any difference throws CacheMismatch.
class ResultCache {
 public:
  ResultCache(std::filesystem::path dir, std::uint64_t seed);

  /// Uses $COVERDEPTH_CACHE_DIR when set.
  static std::optional<ResultCache> from_environment(std::uint64_t seed);

  json get_or_compute(const std::string& graph, const std::string& computation, const json& params,
                      const std::function<json()>& compute);

  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }
  std::size_t spot_checks() const { return spot_checks_; }
  const std::filesystem::path& file() const { return file_; }

 private:
  std::filesystem::path file_;
  std::unordered_map<std::string, json> entries_;
  std::mt19937_64 rng_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
  std::size_t spot_checks_ = 0;
};

const std::vector<std::string>& suite_ids();

/// Throws InputError for an unknown suite id.
VerificationReport run_suite(const std::string& suite, const SuiteScope& scope,
                             ResultCache* cache = nullptr);

/// The bipartite family used by the high-power suites: K2, P3, P4, C4,
/// K_{2,2}, K_{2,3}.
std::vector<std::pair<std::string, Graph>> high_power_family();

/// Summary of the invariants of one graph, as printed by `invariants`.
json graph_invariants(const Graph& g, std::uint64_t betti_box = 20000);

}  // namespace coverdepth
