#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coverdepth/graph.hpp"

namespace coverdepth {

using Exponent = std::uint16_t;

/// Largest representable exponent; products that exceed it throw ArithmeticError.
inline constexpr std::uint32_t kMaxExponent = 0xFFFF;

/// Exponent vector over a fixed number of variables x1..xn.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial one(std::size_t n) { return Monomial(n); }
  static Monomial variable(std::size_t n, int i);
  /// Squarefree product of the variables indexed by `s`.
  static Monomial from_set(std::size_t n, VertexSet s);
  /// Builds from wider integers, checking each entry against kMaxExponent.
  static Monomial from_exponents(std::span<const long long> exps);

  std::size_t num_vars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, std::uint32_t e);
  std::span<const Exponent> exponents() const { return exps_; }

  std::uint32_t degree() const;
  VertexSet support() const;
  bool is_one() const;
  bool is_squarefree() const;

  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; throws DomainError when b does not divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  Monomial pow(std::uint32_t k) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// Monomial ideal stored by its minimal generators in ascending lexicographic
/// order of exponent vectors. The unit ideal is (1); the zero ideal has no
/// generators.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Zero ideal in `n` variables.
  explicit MonomialIdeal(std::size_t n) : n_(n) {}

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
  static MonomialIdeal unit(std::size_t n);
  /// Ideal generated by the variables indexed by `s`.
  static MonomialIdeal prime(std::size_t n, VertexSet s);
  static MonomialIdeal principal(const Monomial& m);

  std::size_t num_vars() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_squarefree() const;

  bool contains(const Monomial& m) const;
  /// Ideal containment: every generator of `other` lies in *this.
  bool contains(const MonomialIdeal& other) const;

  /// Componentwise maximum over the minimal generators.
  Monomial lcm_of_generators() const;
  /// Union of generator supports.
  VertexSet support() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  friend MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens);

  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

/// Divisibility-minimal, deduplicated, sorted generating set.
/// Throws InputError when a monomial does not have `n` variables.
MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal multiply(const MonomialIdeal& a, const Monomial& m);
/// k-th power; k = 0 gives the unit ideal.
MonomialIdeal power(const MonomialIdeal& a, int k);
bool membership(const Monomial& m, const MonomialIdeal& a);
/// Canonical-form equality; throws InputError on ambient mismatch.
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);
/// Intersection of the primes generated by each generator's support.
/// Throws DomainError when `a` is not squarefree.
MonomialIdeal alexander_dual(const MonomialIdeal& a);

/// Re-embeds an ideal on a subgraph's variables into the parent ambient.
MonomialIdeal embed(const MonomialIdeal& a, std::size_t parent_n,
                    const std::vector<int>& to_parent);

// Text forms: monomials as `x1^2*x3` (1-based, `*` optional, `1` for the
// unit), ideals as `(x1*x3, x2*x4)`, `(1)` or `(0)`. Input may omit the
// outer parentheses.
std::string to_string(const Monomial& m);
std::string to_string(const MonomialIdeal& a);
Monomial parse_monomial(std::string_view text, std::size_t n);
MonomialIdeal parse_ideal(std::string_view text, std::size_t n);

}  // namespace coverdepth
