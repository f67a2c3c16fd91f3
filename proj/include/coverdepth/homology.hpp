#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "coverdepth/graph.hpp"
#include "coverdepth/monomial.hpp"

namespace coverdepth {

enum class Field { Rational, Prime };

inline constexpr std::int64_t kDefaultPrime = 32003;

/// Finite simplicial complex on ground set {0..n-1}, stored as its full face
/// list. The void complex has no faces; the empty complex is {∅}.
class SimplicialComplex {
 public:
  explicit SimplicialComplex(int ground_size = 0) : ground_(ground_size) {}

  /// Closes `facets` under taking subsets.
  static SimplicialComplex from_facets(int ground_size, const std::vector<VertexSet>& facets);
  /// `faces` must already be subset-closed; throws InputError otherwise.
  static SimplicialComplex from_faces(int ground_size, std::vector<VertexSet> faces);

  int ground_size() const { return ground_; }
  bool is_void() const { return faces_.empty(); }
  bool contains(VertexSet face) const;
  /// Faces sorted by size, then by mask value.
  const std::vector<VertexSet>& faces() const { return faces_; }
  std::vector<VertexSet> facets() const;
  /// -1 for the empty complex; -2 for the void complex.
  int dimension() const;

 private:
  int ground_;
  std::vector<VertexSet> faces_;
};

/// Upper Koszul complex of `ideal` at multidegree `a`: subsets W of supp(a)
/// with x^a / x^W in the ideal.
SimplicialComplex upper_koszul_complex(const Monomial& a, const MonomialIdeal& ideal);

/// Independent sets of `g` contained in `within`.
SimplicialComplex independence_complex(const Graph& g, VertexSet within);

struct HomologyRanks {
  /// ranks[d + 1] = rank of reduced homology in degree d, d >= -1.
  std::vector<long long> ranks;
  /// Some boundary map has a Smith invariant other than 1 (rational mode only).
  bool torsion = false;

  long long at(int d) const {
    const int idx = d + 1;
    return idx >= 0 && idx < static_cast<int>(ranks.size()) ? ranks[idx] : 0;
  }
};

HomologyRanks reduced_homology(const SimplicialComplex& c, Field field = Field::Rational,
                               std::int64_t prime = kDefaultPrime);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Nonzero diagonal entries of the Smith normal form, in order.
/// Throws ArithmeticError if an intermediate entry overflows 64 bits.
std::vector<std::int64_t> smith_invariants(IntMatrix m);
long long rank_mod_prime(const IntMatrix& m, std::int64_t prime);

struct BettiOptions {
  Field field = Field::Rational;
  std::int64_t prime = kDefaultPrime;
  /// Cap on the number of multidegrees in the lcm box.
  std::uint64_t max_box = 20000;
};

/// Multigraded Betti numbers of a monomial ideal (not of the quotient):
/// entry (i, a) is beta_{i,a}(I) = beta_{i+1,a}(S/I).
class BettiTable {
 public:
  using Key = std::pair<int, std::vector<Exponent>>;

  BettiTable() = default;
  BettiTable(std::size_t n, Field field, std::map<Key, long long> entries, bool torsion)
      : n_(n), field_(field), entries_(std::move(entries)), torsion_(torsion) {}

  std::size_t num_vars() const { return n_; }
  Field field() const { return field_; }
  const std::map<Key, long long>& entries() const { return entries_; }
  bool torsion_seen() const { return torsion_; }

  long long rank(int i, const Monomial& a) const;
  long long quotient_rank(int i, const Monomial& a) const;
  /// Total Betti numbers beta_0, beta_1, ... of the ideal.
  std::vector<long long> totals() const;
  /// Graded Betti numbers beta_{i,j} keyed by (i, total degree j).
  std::map<std::pair<int, int>, long long> graded() const;

  int projective_dimension() const;
  int regularity() const;

  /// Same nonzero entries, regardless of field.
  bool same_ranks(const BettiTable& other) const { return entries_ == other.entries_; }

 private:
  std::size_t n_ = 0;
  Field field_ = Field::Rational;
  std::map<Key, long long> entries_;
  bool torsion_ = false;
};

/// Throws DomainError for the zero or unit ideal and ResourceError when the
/// lcm box exceeds `options.max_box`.
BettiTable betti_table(const MonomialIdeal& ideal, const BettiOptions& options = {});

struct HomologicalInvariants {
  int pd_ideal = 0;
  int pd_quotient = 0;
  int depth_quotient = 0;
  int depth_ideal = 0;
  int reg_ideal = 0;
  int reg_quotient = 0;
};

HomologicalInvariants invariants_from_table(const BettiTable& t);
HomologicalInvariants homological_invariants(const MonomialIdeal& ideal,
                                             const BettiOptions& options = {});

/// reg(S/I(G)) from reduced homology of induced independence complexes.
/// Throws DomainError for edgeless graphs.
int hochster_reg_edge_ideal(const Graph& g, Field field = Field::Rational);

/// depth(S/J(G)^k) for k = 1..k_max; an entry is empty when its lcm box
/// exceeds the cap. Throws DomainError unless `g` is bipartite with an edge.
std::vector<std::optional<int>> depth_power_profile(const Graph& g, int k_max,
                                                    const BettiOptions& options = {});

}  // namespace coverdepth
