#include <doctest.h>

#include <fstream>

#include "coverdepth/errors.hpp"
#include "coverdepth/graph_io.hpp"
#include "coverdepth/harness.hpp"

using namespace coverdepth;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("coverdepth-test-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("every suite runs clean on a small scope") {
  SuiteScope scope;
  scope.n_max = 4;
  scope.k_max = 2;
  for (const auto& id : suite_ids()) {
    const VerificationReport r = run_suite(id, scope);
    CHECK_MESSAGE(r.count(RecordStatus::Fail) == 0, id);
    CHECK_MESSAGE(!r.records.empty(), id);
    CHECK(r.exit_code(true) == kExitOk);
  }
  CHECK_THROWS_AS(run_suite("lemma9.9", scope), InputError);
  scope.k_max = 0;
  CHECK_THROWS_AS(run_suite("thm3.3", scope), InputError);
}

TEST_CASE("reports are deterministic and serialize") {
  SuiteScope scope;
  scope.n_max = 4;
  scope.seed = 9;
  const auto a = run_suite("thm2.4", scope);
  const auto b = run_suite("thm2.4", scope);
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.to_csv() == b.to_csv());

  const json j = a.to_json();
  CHECK(j["suite"] == "thm2.4");
  CHECK(j["seed"] == 9);
  CHECK(j["summary"]["total"] == a.records.size());
  CHECK(j["summary"]["pass"] == a.count(RecordStatus::Pass));
  CHECK(j["records"][0]["graph"] == "n=2;edges=0-1");

  const std::string csv = a.to_csv();
  CHECK(csv.rfind("suite,graph,graph6,n,k,status,budget_flag,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(a.records.size() + 1));
}

TEST_CASE("a single graph scope and bipartite filtering") {
  SuiteScope scope;
  scope.graph = cycle_graph(4);
  const auto r = run_suite("examples2.7", scope);
  CHECK(r.records.size() == 2);
  const auto c = run_suite("cor2.5", scope);
  REQUIRE(c.records.size() == 1);
  CHECK(c.records[0].values["nu_o"] == 1);

  scope.graph = complete_graph(3);
  CHECK(run_suite("thm3.3", scope).records.empty());
  CHECK(run_suite("thm2.4", scope).records.size() == 1);
}

TEST_CASE("budget exhaustion is indeterminate, not a failure") {
  SuiteScope scope;
  scope.graph = cycle_graph(4);
  scope.budget = 1;
  scope.k_max = 2;
  const auto r = run_suite("cor3.4", scope);
  CHECK(r.count(RecordStatus::Fail) == 0);
  CHECK(r.budget_flags() > 0);
  CHECK(r.exit_code(false) == kExitOk);
  CHECK(r.exit_code(true) == kExitIndeterminate);
}

TEST_CASE("failed records set the violation exit code") {
  VerificationReport r;
  r.records.resize(2);
  r.records[1].status = RecordStatus::Indeterminate;
  CHECK(r.exit_code(true) == kExitIndeterminate);
  r.records[0].status = RecordStatus::Fail;
  CHECK(r.exit_code(true) == kExitViolation);
  CHECK(r.exit_code(false) == kExitViolation);
}

TEST_CASE("limit depth suite on the curated family") {
  SuiteScope scope;
  scope.n_max = 5;
  scope.k_max = 3;
  const auto r = run_suite("limit-depth", scope);
  CHECK(r.records.size() == high_power_family().size());
  CHECK(r.count(RecordStatus::Pass) == r.records.size());
}

TEST_CASE("result cache stores, reloads and spot-checks") {
  const auto dir = fresh_dir("cache");
  int calls = 0;
  auto compute = [&] {
    ++calls;
    return json{{"value", 42}};
  };
  {
    ResultCache cache(dir, 1);
    CHECK(cache.get_or_compute("g", "c", {{"k", 1}}, compute)["value"] == 42);
    CHECK(cache.misses() == 1);
    CHECK(calls == 1);
  }
  {
    ResultCache cache(dir, 1);
    CHECK(cache.get_or_compute("g", "c", {{"k", 1}}, compute)["value"] == 42);
    CHECK(cache.hits() == 1);
    CHECK(cache.spot_checks() == 1);  // the first hit is always re-derived
    CHECK(calls == 2);
    cache.get_or_compute("g", "c", {{"k", 2}}, compute);
    CHECK(cache.misses() == 1);
  }
  {
    ResultCache cache(dir, 1);
    auto wrong = [] { return json{{"value", 41}}; };
    CHECK_THROWS_AS(cache.get_or_compute("g", "c", {{"k", 1}}, wrong), CacheMismatch);
  }
  // Unreadable lines are skipped rather than trusted.
  {
    std::ofstream out(dir / "coverdepth-cache.jsonl", std::ios::app);
    out << "{not json\n";
  }
  ResultCache reloaded(dir, 1);
  CHECK(reloaded.get_or_compute("g", "c", {{"k", 1}}, compute)["value"] == 42);
  std::filesystem::remove_all(dir);
}

TEST_CASE("suites give identical reports with and without the cache") {
  const auto dir = fresh_dir("suite-cache");
  SuiteScope scope;
  scope.n_max = 4;
  scope.k_max = 2;
  const auto plain = run_suite("burch", scope);
  ResultCache first(dir, 3);
  const auto cold = run_suite("burch", scope, &first);
  ResultCache second(dir, 3);
  const auto warm = run_suite("burch", scope, &second);
  CHECK(second.hits() > 0);
  CHECK(second.misses() == 0);
  CHECK(plain.to_json() == cold.to_json());
  CHECK(plain.to_json() == warm.to_json());
  std::filesystem::remove_all(dir);
}

TEST_CASE("graph invariants summary") {
  const json c4 = graph_invariants(cycle_graph(4));
  CHECK(c4["nu_o"] == 1);
  CHECK(c4["min_maximal_matching"] == 2);
  CHECK(c4["reg_edge_quotient"] == 1);
  CHECK(c4["reg_edge_quotient_hochster"] == 1);
  CHECK(c4["ell"] == 2);
  CHECK(c4["graph6"] == "Cl");
  const json e = graph_invariants(Graph(2));
  CHECK(e["nu_o"] == 0);
  CHECK(e["ell"].is_null());
  CHECK_FALSE(e.contains("reg_edge_quotient"));
}
