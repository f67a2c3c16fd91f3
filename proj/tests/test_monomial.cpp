#include <doctest.h>

#include "coverdepth/errors.hpp"
#include "coverdepth/monomial.hpp"
#include "oracles.hpp"

using namespace coverdepth;

namespace {

Monomial mono(std::initializer_list<long long> e) {
  std::vector<long long> v(e);
  return Monomial::from_exponents(v);
}

}  // namespace

TEST_CASE("monomial arithmetic") {
  const Monomial a = mono({2, 0, 1});
  const Monomial b = mono({1, 3, 0});
  CHECK(a * b == mono({3, 3, 1}));
  CHECK(lcm(a, b) == mono({2, 3, 1}));
  CHECK(gcd(a, b) == mono({1, 0, 0}));
  CHECK(a.degree() == 3);
  CHECK(a.support() == (vertex_bit(0) | vertex_bit(2)));
  CHECK(mono({1, 0, 0}).divides(a));
  CHECK_FALSE(b.divides(a));
  CHECK(a / mono({1, 0, 1}) == mono({1, 0, 0}));
  CHECK_THROWS_AS(a / b, DomainError);
  CHECK(a.pow(3) == mono({6, 0, 3}));
  CHECK(to_string(a) == "x1^2*x3");
  CHECK(to_string(Monomial::one(3)) == "1");
  CHECK_THROWS_AS(mono({1}) * mono({1, 2}), InputError);
}

TEST_CASE("exponent overflow is reported") {
  const Monomial big = mono({60000});
  CHECK_THROWS_AS(big * big, ArithmeticError);
  CHECK_THROWS_AS(big.pow(2), ArithmeticError);
  CHECK_THROWS_AS(mono({70000}), ArithmeticError);
  CHECK_THROWS_AS(mono({-1}), InputError);
}

TEST_CASE("ideals are kept minimal and sorted") {
  const MonomialIdeal i = minimalize(2, {mono({1, 1}), mono({1, 0}), mono({2, 0}), mono({0, 3})});
  CHECK(i.generators() == std::vector<Monomial>{mono({0, 3}), mono({1, 0})});
  CHECK(to_string(i) == "(x2^3, x1)");
  CHECK(to_string(MonomialIdeal::zero(2)) == "(0)");
  CHECK(to_string(MonomialIdeal::unit(2)) == "(1)");
  CHECK(MonomialIdeal::unit(2).contains(Monomial::one(2)));
  CHECK_FALSE(MonomialIdeal::zero(2).contains(Monomial::one(2)));
}

TEST_CASE("ideal operations on worked examples") {
  const auto x = MonomialIdeal::prime(2, vertex_bit(0));
  const auto y = MonomialIdeal::prime(2, vertex_bit(1));
  CHECK(equals(intersect(x, y), MonomialIdeal::principal(mono({1, 1}))));
  CHECK(equals(colon(parse_ideal("(x1*x2)", 2), mono({1, 0})), y));
  CHECK(colon(x, mono({1, 0})).is_unit());
  CHECK(equals(power(sum(x, y), 2), parse_ideal("(x1^2, x1*x2, x2^2)", 2)));
  CHECK(power(x, 0).is_unit());
  CHECK(equals(product(x, y), parse_ideal("x1*x2", 2)));
  CHECK(equals(multiply(sum(x, y), mono({0, 1})), parse_ideal("(x1 x2, x2^2)", 2)));
  CHECK(equals(alexander_dual(parse_ideal("(x1*x2, x2*x3)", 3)), parse_ideal("(x2, x1*x3)", 3)));
  CHECK_THROWS_AS(alexander_dual(parse_ideal("(x1^2)", 1)), DomainError);
  CHECK_THROWS_AS(equals(x, MonomialIdeal::prime(3, 1)), InputError);
  CHECK_THROWS_AS(power(x, -1), InputError);

  const MonomialIdeal e = embed(parse_ideal("(x1*x2)", 2), 4, {1, 3});
  CHECK(to_string(e) == "(x2*x4)");
}

TEST_CASE("parser errors carry a column") {
  CHECK(parse_monomial("x1^2 x3", 3) == mono({2, 0, 1}));
  CHECK(parse_monomial("1", 2).is_one());
  CHECK_THROWS_AS(parse_monomial("x4", 3), ParseError);
  CHECK_THROWS_AS(parse_ideal("(x1,", 2), ParseError);
  try {
    parse_ideal("(x1, y2)", 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 6);
  }
}

TEST_CASE("ideal operations agree with pointwise membership") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 3;
    const MonomialIdeal a = oracle::random_ideal(rng, n, 2, 3);
    const MonomialIdeal b = oracle::random_ideal(rng, n, 2, 3);
    const Monomial u = oracle::random_ideal(rng, n, 1, 1).generators().front();
    const MonomialIdeal ab = intersect(a, b);
    const MonomialIdeal s = sum(a, b);
    const MonomialIdeal p = product(a, b);
    const MonomialIdeal c = colon(a, u);
    const MonomialIdeal a2 = power(a, 2);
    oracle::for_box(n, 4, [&](const Monomial& m) {
      CHECK(membership(m, ab) == (oracle::member(m, a) && oracle::member(m, b)));
      CHECK(membership(m, s) == (oracle::member(m, a) || oracle::member(m, b)));
      CHECK(membership(m, c) == oracle::member(m * u, a));
      CHECK(membership(m, a2) == oracle::member_of_power(m, a, 2));
      bool in_product = false;
      for (const auto& g : a.generators())
        for (const auto& h : b.generators())
          if (oracle::divides(g * h, m)) in_product = true;
      CHECK(membership(m, p) == in_product);
    });
  }
}

TEST_CASE("Alexander duality is an involution on squarefree ideals") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 80; ++t) {
    const MonomialIdeal a = oracle::random_ideal(rng, 5, 1, 4);
    if (a.is_unit() || a.is_zero()) continue;
    CHECK(equals(alexander_dual(alexander_dual(a)), a));
  }
}
