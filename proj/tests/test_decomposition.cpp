#include <doctest.h>

#include "coverdepth/decomposition.hpp"
#include "coverdepth/errors.hpp"
#include "coverdepth/graph_ideals.hpp"
#include "coverdepth/graph_io.hpp"
#include "coverdepth/sdepth.hpp"
#include "oracles.hpp"

using namespace coverdepth;

namespace {

Monomial m2(const char* text) { return parse_monomial(text, 2); }

constexpr VertexSet kXY = 0b11;
constexpr VertexSet kX = 0b01;
constexpr VertexSet kY = 0b10;

/// Counts, for every module monomial in [0, bound]^n, how many spaces
/// contain it, and checks non-module monomials are in none.
bool brute_force_valid(const StanleyDecomposition& d, int bound) {
  bool ok = true;
  oracle::for_box(d.num_vars(), bound, [&](const Monomial& m) {
    if ((m.support() & ~d.ring()) != 0) return;
    const bool in_ideal = oracle::member(m, d.ideal());
    const bool in_module = d.kind() == ModuleKind::Ideal ? in_ideal : !in_ideal;
    int hits = 0;
    for (const auto& s : d.spaces()) {
      bool inside = true;
      for (std::size_t i = 0; i < m.num_vars(); ++i) {
        const bool free = (s.free >> i) & 1U;
        if (free ? m[i] < s.origin[i] : m[i] != s.origin[i]) inside = false;
      }
      hits += inside;
    }
    if (hits != (in_module ? 1 : 0)) ok = false;
  });
  return ok;
}

}  // namespace

TEST_CASE("verify_decomposition on small examples") {
  const MonomialIdeal m = parse_ideal("(x1, x2)", 2);
  StanleyDecomposition good(m, ModuleKind::Ideal, kXY);
  good.add({m2("x1"), kXY}, "");
  good.add({m2("x2"), kY}, "");
  CHECK(verify_decomposition(good).ok);
  CHECK(good.sdepth() == 1);

  StanleyDecomposition twice(m, ModuleKind::Ideal, kXY);
  twice.add({m2("x1"), kXY}, "");
  twice.add({m2("x2"), kXY}, "");
  const auto c = verify_decomposition(twice);
  CHECK_FALSE(c.ok);
  CHECK(c.message.find("x1*x2") != std::string::npos);

  StanleyDecomposition outside(parse_ideal("x1", 2), ModuleKind::Quotient, kXY);
  outside.add({Monomial::one(2), kXY}, "");
  CHECK_FALSE(verify_decomposition(outside).ok);

  StanleyDecomposition missing(m, ModuleKind::Ideal, kXY);
  missing.add({m2("x1"), kXY}, "");
  CHECK_FALSE(verify_decomposition(missing).ok);

  CHECK(StanleyDecomposition(MonomialIdeal::unit(2), ModuleKind::Quotient, kXY).sdepth() == std::nullopt);
}

TEST_CASE("verify_decomposition matches a brute-force count") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> exp(0, 2);
  std::uniform_int_distribution<int> mask(0, 3);
  int agreed = 0;
  for (int t = 0; t < 300; ++t) {
    const MonomialIdeal a = oracle::random_ideal(rng, 2, 2, 2);
    const ModuleKind kind = t % 2 ? ModuleKind::Ideal : ModuleKind::Quotient;
    StanleyDecomposition d(a, kind, kXY);
    const int spaces = 1 + t % 4;
    for (int s = 0; s < spaces; ++s) {
      std::vector<long long> e = {exp(rng), exp(rng)};
      d.add({Monomial::from_exponents(e), static_cast<VertexSet>(mask(rng))}, "");
    }
    // Exponents stay below 3 and every threshold is at most 2, so the box
    // [0, 4]^2 decides every predicate.
    CHECK(verify_decomposition(d).ok == brute_force_valid(d, 4));
    ++agreed;
  }
  CHECK(agreed == 300);
}

TEST_CASE("decomposition transformations") {
  SUBCASE("extend free variables") {
    StanleyDecomposition d(parse_ideal("x1", 2), ModuleKind::Ideal, kX);
    d.add({m2("x1"), kX}, "base");
    const auto e = extend_free_variables(d, kY);
    CHECK(e.ring() == kXY);
    CHECK(e.spaces().front().free == kXY);
    CHECK(verify_decomposition(e).ok);
    CHECK_THROWS_AS(extend_free_variables(d, kX), InputError);
  }
  SUBCASE("principal complement") {
    const auto d = principal_complement_decomposition(m2("x1^2 x2"), kXY);
    CHECK(d.kind() == ModuleKind::Quotient);
    CHECK(verify_decomposition(d).ok);
    CHECK(d.sdepth() == 1);
    const auto single = principal_complement_decomposition(m2("x1"), kXY);
    REQUIRE(single.spaces().size() == 1);
    CHECK(single.spaces().front() == StanleySpace{Monomial::one(2), kY});
    CHECK(principal_complement_decomposition(Monomial::one(2), kXY).spaces().empty());
  }
  SUBCASE("colon transform") {
    StanleyDecomposition d(parse_ideal("(x1, x2)", 2), ModuleKind::Ideal, kXY);
    d.add({m2("x1"), kXY}, "");
    d.add({m2("x2"), kY}, "");
    const auto c = colon_transform(d, 0);
    CHECK(c.ideal().is_unit());
    REQUIRE(c.spaces().size() == 1);
    CHECK(c.spaces().front() == StanleySpace{Monomial::one(2), kXY});
    CHECK(verify_decomposition(c).ok);

    StanleyDecomposition q(parse_ideal("(x1, x2)", 2), ModuleKind::Quotient, kXY);
    q.add({Monomial::one(2), 0}, "");
    CHECK(colon_transform(q, 0).spaces().empty());
  }
  SUBCASE("multiplication") {
    StanleyDecomposition d(parse_ideal("(x1, x2)", 2), ModuleKind::Ideal, kXY);
    d.add({m2("x1"), kXY}, "");
    d.add({m2("x2"), kY}, "");
    CHECK(verify_decomposition(multiply_ideal_decomposition(d, m2("x2^2"))).ok);
    StanleyDecomposition q(parse_ideal("(x1, x2)", 2), ModuleKind::Quotient, kXY);
    q.add({Monomial::one(2), 0}, "");
    const auto mq = multiply_quotient_decomposition(q, m2("x1 x2"));
    CHECK(equals(mq.ideal(), parse_ideal("(x1^2 x2, x1 x2^2)", 2)));
    CHECK(verify_decomposition(mq).ok);
  }
}

TEST_CASE("constructed cover decompositions") {
  const auto k2 = construct_cover(complete_graph(2), ModuleKind::Ideal);
  CHECK(k2.sorted_spaces() == std::vector<StanleySpace>{{m2("x2"), kY}, {m2("x1"), kXY}});
  CHECK(k2.sdepth() == 1);
  CHECK_THROWS_AS(construct_cover(Graph(3), ModuleKind::Ideal), DomainError);

  const auto c4 = construct_cover(cycle_graph(4), ModuleKind::Ideal);
  CHECK(verify_decomposition(c4).ok);
  CHECK(c4.sdepth().value() >= 3);
  CHECK(c4.sdepth().value() <= sdepth_exact(cover_ideal(cycle_graph(4)), ModuleKind::Ideal).upper);
  const auto c4q = construct_cover(cycle_graph(4), ModuleKind::Quotient);
  CHECK(verify_decomposition(c4q).ok);
  CHECK(c4q.sdepth().value() >= 2);
  for (const auto& tag : c4.provenance()) CHECK_FALSE(tag.empty());

  for (int n = 2; n <= 5; ++n) {
    EnumerationFilter f;
    f.min_edges = 1;
    enumerate_graphs(n, f, [n](const Graph& g) {
      const int nu = ordered_matching_number(g);
      const auto di = construct_cover(g, ModuleKind::Ideal);
      const auto dq = construct_cover(g, ModuleKind::Quotient);
      CHECK(verify_decomposition(di).ok);
      CHECK(verify_decomposition(dq).ok);
      CHECK(di.sdepth().value() >= n - nu);
      CHECK(dq.sdepth().value() >= n - nu - 1);
    });
  }
}

TEST_CASE("constructed decompositions of cover powers") {
  const auto k2 = construct_cover_power(complete_graph(2), 2, ModuleKind::Ideal);
  // {y^2 K[y], x^2 K[x,y], xy K[y]}
  CHECK(k2.sorted_spaces() ==
        std::vector<StanleySpace>{{m2("x2^2"), kY}, {m2("x1 x2"), kY}, {m2("x1^2"), kXY}});
  CHECK(verify_decomposition(k2).ok);

  CHECK_THROWS_AS(construct_cover_power(complete_graph(3), 2, ModuleKind::Ideal), DomainError);
  CHECK_THROWS_AS(construct_cover_power(complete_graph(2), 0, ModuleKind::Ideal), InputError);

  EnumerationFilter bip;
  bip.bipartite_only = true;
  bip.min_edges = 1;
  for (int n = 2; n <= 4; ++n) {
    enumerate_graphs(n, bip, [n](const Graph& g) {
      const int nu = ordered_matching_number(g);
      const GraphIdealContext ctx(g);
      for (int k = 1; k <= 3; ++k) {
        const auto di = construct_cover_power(g, k, ModuleKind::Ideal);
        const auto dq = construct_cover_power(g, k, ModuleKind::Quotient);
        CHECK(equals(di.ideal(), power(cover_ideal(g), k)));
        CHECK(verify_decomposition(di).ok);
        CHECK(verify_decomposition(dq).ok);
        CHECK(di.sdepth().value() >= n - nu);
        CHECK(dq.sdepth().value() >= n - nu - 1);
        if (k >= 2) {
          // Colon by the first part carries J^k onto J^(k-1).
          StanleyDecomposition c = di;
          for (int v : set_members(ctx.parts->first)) c = colon_transform(c, v);
          CHECK(equals(c.ideal(), power(cover_ideal(g), k - 1)));
          CHECK(verify_decomposition(c).ok);
          CHECK(c.sdepth().value() >= di.sdepth().value());
        }
      }
    });
  }
}
