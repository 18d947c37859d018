#include <random>

#include "doctest.h"
#include "hcg/polynomial.hpp"
#include "test_util.hpp"

using namespace hcg;

TEST_CASE("polynomial arithmetic basics") {
  auto x = Polynomial::variable("x"), y = Polynomial::variable("y");
  auto p = x * x + y.scaled(Rat(-2)) + Polynomial::constant(Rat(1, 3));
  CHECK(p.to_string() == "1/3 + x^2 - 2*y");
  CHECK((p - p).is_zero());
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK(x.pow(3).to_string() == "x^3");
  CHECK((-p) + p == Polynomial{});
  CHECK(p.scaled(Rat(0)).is_zero());
}

TEST_CASE("parser accepts the wire syntax and printing round-trips") {
  CHECK(parse_polynomial("2*a_s - 1/3*a_t") ==
        Polynomial::variable("a_s").scaled(Rat(2)) - Polynomial::variable("a_t").scaled(Rat(1, 3)));
  CHECK(parse_polynomial("a_s^2") == Polynomial::variable("a_s").pow(2));
  CHECK(parse_polynomial("-a_s") == -Polynomial::variable("a_s"));
  CHECK(parse_polynomial("(a_s + a_t)*(a_s - a_t)") ==
        parse_polynomial("a_s^2 - a_t^2"));
  CHECK(parse_polynomial("5/10") == Polynomial::constant(Rat(1, 2)));
  CHECK(parse_polynomial("0").is_zero());
  CHECK_THROWS_AS(parse_polynomial(""), error);
  CHECK_THROWS_AS(parse_polynomial("a_s +"), error);
  CHECK_THROWS_AS(parse_polynomial("a_s^(2)"), error);
  CHECK_THROWS_AS(parse_polynomial("2**x"), error);

  std::mt19937_64 rng(0xC0FFEEu);
  for (int i = 0; i < 100; ++i) {
    auto p = hcgtest::random_polynomial(rng, {"a_s", "a_t", "a_u"});
    CHECK(parse_polynomial(p.to_string()) == p);
  }
}

TEST_CASE("exact division") {
  auto x = Polynomial::variable("x"), y = Polynomial::variable("y");
  auto d = x + y.scaled(Rat(2));
  CHECK((d * (x * x - y)).divide_exact(d) == x * x - y);
  CHECK_THROWS_AS(x.divide_exact(y), error);
  CHECK_THROWS_AS((x * x + y).divide_exact(x + y), error);
  CHECK_THROWS_AS(x.divide_exact(Polynomial{}), error);
  std::mt19937_64 rng(0xD1CEu);
  for (int i = 0; i < 50; ++i) {
    auto a = hcgtest::random_polynomial(rng, {"x", "y"});
    auto b = hcgtest::random_polynomial(rng, {"x", "y"});
    if (b.is_zero()) continue;
    CHECK((a * b).divide_exact(b) == a);
  }
}

TEST_CASE("substitution") {
  auto x = Polynomial::variable("x"), y = Polynomial::variable("y");
  auto p = x * x + y;
  auto q = p.substitute({{"x", x + y}});
  CHECK(q == (x + y) * (x + y) + y);
  // Untouched variables stay.
  CHECK(p.substitute({{"z", y}}) == p);
  // Simultaneous substitution, not sequential.
  auto swap = p.substitute({{"x", y}, {"y", x}});
  CHECK(swap == y * y + x);
}
