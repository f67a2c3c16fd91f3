#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coverdepth/graph.hpp"
#include "coverdepth/monomial.hpp"

namespace coverdepth {

/// Which module a decomposition (or a characteristic poset) describes:
/// the ideal I itself or the quotient S/I.
enum class ModuleKind { Ideal, Quotient };

const char* to_string(ModuleKind kind);

/// The space u K[Z].
struct StanleySpace {
  Monomial origin;
  VertexSet free = 0;

  int dimension() const { return set_size(free); }

  friend bool operator==(const StanleySpace&, const StanleySpace&) = default;
  friend auto operator<=>(const StanleySpace& a, const StanleySpace& b) {
    if (auto c = a.origin <=> b.origin; c != 0) return c;
    return a.free <=> b.free;
  }
};

/// A list of Stanley spaces claimed to decompose I (or S/I) as a vector
/// space, where S is the polynomial ring on the variables in `ring`.
/// Each space carries a provenance tag naming the construction step that
/// emitted it.
class StanleyDecomposition {
 public:
  StanleyDecomposition() = default;
  StanleyDecomposition(MonomialIdeal ideal, ModuleKind kind, VertexSet ring);

  const MonomialIdeal& ideal() const { return ideal_; }
  ModuleKind kind() const { return kind_; }
  VertexSet ring() const { return ring_; }
  std::size_t num_vars() const { return ideal_.num_vars(); }

  const std::vector<StanleySpace>& spaces() const { return spaces_; }
  const std::vector<std::string>& provenance() const { return provenance_; }

  void add(StanleySpace space, std::string rule);
  /// Appends the spaces of `other`; module descriptors are left unchanged.
  void append(const StanleyDecomposition& other);
  void set_module(MonomialIdeal ideal, ModuleKind kind, VertexSet ring);

  /// Minimum space dimension; empty for the zero module (plus infinity).
  std::optional<int> sdepth() const;

  /// Spaces in canonical order (provenance dropped).
  std::vector<StanleySpace> sorted_spaces() const;

 private:
  MonomialIdeal ideal_;
  ModuleKind kind_ = ModuleKind::Ideal;
  VertexSet ring_ = 0;
  std::vector<StanleySpace> spaces_;
  std::vector<std::string> provenance_;
};

/// Each u K[Z] becomes u K[Z ∪ F] over the ring extended by F.
/// Throws InputError if F meets the current ring.
StanleyDecomposition extend_free_variables(const StanleyDecomposition& d, VertexSet extra);

/// Decomposition of m I from one of I (ideal mode only).
StanleyDecomposition multiply_ideal_decomposition(const StanleyDecomposition& d, const Monomial& m);

/// Decomposition of S/(m I) from one of S/I: the complement of (m) followed
/// by the shifted spaces.
StanleyDecomposition multiply_quotient_decomposition(const StanleyDecomposition& d,
                                                     const Monomial& m);

/// Partition of the monomials outside (u) by the first coordinate where
/// the exponent of u is not reached. All spaces have dimension |ring| - 1.
StanleyDecomposition principal_complement_decomposition(const Monomial& u, VertexSet ring);

/// Decomposition of (I : x_v) or S/(I : x_v) obtained space by space.
StanleyDecomposition colon_transform(const StanleyDecomposition& d, int v);

/// Cover ideal (or its quotient) by recursion on the number of edges,
/// splitting on the lowest non-isolated vertex. Throws DomainError for
/// edgeless graphs.
StanleyDecomposition construct_cover(const Graph& g, ModuleKind kind);

/// k-th power of the cover ideal of a bipartite graph (or its quotient) by
/// the colon chain through the first bipartition part. Throws DomainError for
/// non-bipartite or edgeless graphs and InputError for k < 1.
StanleyDecomposition construct_cover_power(const Graph& g, int k, ModuleKind kind);

struct DecompositionCheck {
  bool ok = true;
  std::string message;

  explicit operator bool() const { return ok; }
};

/// Exact certificate check: containment of every space, pairwise
/// disjointness, and coverage of every module monomial in a box where all
/// membership predicates are already decided. Throws ResourceError when the
/// box exceeds `max_box` points.
DecompositionCheck verify_decomposition(const StanleyDecomposition& d,
                                        std::uint64_t max_box = 50'000'000);

}  // namespace coverdepth
