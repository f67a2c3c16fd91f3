#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coverdepth/decomposition.hpp"
#include "coverdepth/monomial.hpp"

namespace coverdepth {

inline constexpr std::uint64_t kDefaultSearchBudget = 5'000'000;

/// Exponent vectors a <= g (g = lcm of the minimal generators) with x^a in
/// the ideal (ideal mode) or outside it (quotient mode), listed in graded
/// lexicographic order. rho(a) counts coordinates with a_i = g_i.
class CharacteristicPoset {
 public:
  /// Throws DomainError for the zero or unit ideal, ResourceError when the
  /// box exceeds `max_box` points.
  CharacteristicPoset(const MonomialIdeal& ideal, ModuleKind kind,
                      std::uint64_t max_box = 1ULL << 22);

  ModuleKind kind() const { return kind_; }
  const MonomialIdeal& ideal() const { return ideal_; }
  const Monomial& bound() const { return bound_; }
  std::size_t num_vars() const { return bound_.num_vars(); }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Monomial>& elements() const { return elements_; }
  int rho(std::size_t idx) const { return rho_[idx]; }
  int rho(const Monomial& a) const;

  /// Position of `a` in the element list, if a lies in the poset.
  std::optional<std::size_t> index_of(const Monomial& a) const;

 private:
  std::uint64_t box_index(const Monomial& a) const;

  MonomialIdeal ideal_;
  ModuleKind kind_;
  Monomial bound_;
  std::vector<Monomial> elements_;
  std::vector<int> rho_;
  std::vector<std::int32_t> lookup_;  // box index -> element index or -1
};

struct Interval {
  Monomial bottom;
  Monomial top;

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalPartition {
  std::vector<Interval> intervals;
};

struct PartitionCheck {
  bool ok = true;
  std::string message;

  explicit operator bool() const { return ok; }
};

/// Independent check that `p` partitions the poset into intervals whose tops
/// all satisfy rho >= k.
PartitionCheck check_partition(const CharacteristicPoset& poset, const IntervalPartition& p, int k);

/// Stanley decomposition of the module induced by an interval partition.
StanleyDecomposition decomposition_from_partition(const CharacteristicPoset& poset,
                                                  const IntervalPartition& p);

enum class Decision { Yes, No, BudgetExceeded };

const char* to_string(Decision d);

struct DecisionResult {
  Decision answer = Decision::No;
  std::optional<IntervalPartition> witness;
  std::uint64_t nodes = 0;
};

/// Is there a partition with every top of rho >= k? Budget counts search
/// nodes; exhausting it yields BudgetExceeded, never a wrong answer.
DecisionResult sdepth_decision(const CharacteristicPoset& poset, int k,
                               std::uint64_t budget = kDefaultSearchBudget);
DecisionResult sdepth_decision(const MonomialIdeal& ideal, ModuleKind kind, int k,
                               std::uint64_t budget = kDefaultSearchBudget);

struct SdepthResult {
  int lower = 0;
  int upper = 0;
  /// Partition certifying `lower`, when the search produced it.
  std::optional<IntervalPartition> witness;
  std::uint64_t nodes = 0;
  bool budget_exceeded = false;

  bool exact() const { return lower == upper; }
};

/// Exact Stanley depth, or certified bounds when the budget runs out.
/// `known_lower` must be a value already certified by other means (for
/// example a verified constructed decomposition); the scan starts above it.
SdepthResult sdepth_exact(const MonomialIdeal& ideal, ModuleKind kind,
                          std::uint64_t budget = kDefaultSearchBudget, int known_lower = 0);

}  // namespace coverdepth
