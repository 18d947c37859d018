#include <random>

#include "doctest.h"
#include "hcg/coxeter.hpp"
#include "test_util.hpp"

using namespace hcg;
using namespace hcgtest;

TEST_CASE("system construction and validation") {
  auto sys = a2();
  CHECK(sys.rank() == 2);
  CHECK(sys.bond("s", "t") == 3);
  CHECK(sys.index("t") == 1);
  CHECK_THROWS_AS(new_coxeter_system({"s", "t"}, {{1, 3}, {2, 1}}), error);   // asymmetric
  CHECK_THROWS_AS(new_coxeter_system({"s", "t"}, {{2, 3}, {3, 1}}), error);   // diagonal
  CHECK_THROWS_AS(new_coxeter_system({"s", "t"}, {{1, 1}, {1, 1}}), error);   // off-diag 1
  CHECK_THROWS_AS(new_coxeter_system({"s", "s"}, {{1, 2}, {2, 1}}), error);   // dup label
  CHECK_THROWS_AS(new_coxeter_system({}, {}), error);                         // empty
  auto inf = new_coxeter_system({"s", "t"}, {{1, kInfiniteBond}, {kInfiniteBond, 1}});
  CHECK(!finite_bond(inf.bond("s", "t")));
}

TEST_CASE("connected components split along commuting pairs") {
  CHECK(connected_components(a2()) == std::vector<std::vector<std::string>>{{"s", "t"}});
  CHECK(connected_components(a1a1()) ==
        std::vector<std::vector<std::string>>{{"s"}, {"t"}});
  CHECK(connected_components(a2a1()) ==
        std::vector<std::vector<std::string>>{{"s", "t"}, {"u"}});
  CHECK(connected_components(a3()) == std::vector<std::vector<std::string>>{{"s", "t", "u"}});
  // An infinite bond still connects.
  auto inf = new_coxeter_system({"s", "t"}, {{1, kInfiniteBond}, {kInfiniteBond, 1}});
  CHECK(connected_components(inf).size() == 1);
}

TEST_CASE("root realization: default Cartan entries per bond order") {
  SUBCASE("order 3 gives -1/-1") {
    auto r = root_realization(a2());
    CHECK(r.cartan("s", "t") == Rat(-1));
    CHECK(r.cartan("t", "s") == Rat(-1));
    CHECK(r.cartan("s", "s") == Rat(2));
  }
  SUBCASE("order 4 gives -1/-2") {
    auto r = root_realization(b2());
    CHECK(r.cartan("s", "t") == Rat(-1));
    CHECK(r.cartan("t", "s") == Rat(-2));
  }
  SUBCASE("order 6 gives -1/-3") {
    auto r = root_realization(g2());
    CHECK(r.cartan("s", "t") == Rat(-1));
    CHECK(r.cartan("t", "s") == Rat(-3));
  }
  SUBCASE("order 2 gives 0") {
    auto r = root_realization(a1a1());
    CHECK(r.cartan("s", "t") == Rat(0));
  }
  SUBCASE("order 5 has no default") {
    CHECK_THROWS_WITH_AS(root_realization(i2(5)), doctest::Contains("no default Cartan"),
                         error);
  }
  SUBCASE("infinite bond has no default") {
    auto inf = new_coxeter_system({"s", "t"}, {{1, kInfiniteBond}, {kInfiniteBond, 1}});
    CHECK_THROWS_AS(root_realization(inf), error);
  }
  SUBCASE("explicit Cartan for an infinite bond") {
    auto inf = new_coxeter_system({"s", "t"}, {{1, kInfiniteBond}, {kInfiniteBond, 1}});
    auto r = root_realization(inf, {{{Rat(2), Rat(-2)}, {Rat(-2), Rat(2)}}});
    CHECK(r.cartan("t", "s") == Rat(-2));
  }
  SUBCASE("explicit Cartan validation") {
    CHECK_THROWS_AS(root_realization(a2(), {{{Rat(1), Rat(-1)}, {Rat(-1), Rat(2)}}}), error);
    CHECK_THROWS_AS(root_realization(a2(), {{{Rat(2), Rat(0)}, {Rat(-1), Rat(2)}}}), error);
    CHECK_THROWS_AS(root_realization(a1a1(), {{{Rat(2), Rat(-1)}, {Rat(0), Rat(2)}}}), error);
  }
}

TEST_CASE("reflection action on polynomials") {
  auto r = root_realization(a2());
  auto as = Polynomial::variable("a_s"), at = Polynomial::variable("a_t");
  CHECK(reflect(r, "s", as) == -as);
  CHECK(reflect(r, "s", at) == at + as);
  CHECK(reflect(r, "t", as) == as + at);
  CHECK_THROWS_AS(reflect(r, "s", Polynomial::variable("zz")), error);

  std::mt19937_64 rng(0x5EED01u);
  for (int i = 0; i < 60; ++i) {
    auto p = random_polynomial(rng, {"a_s", "a_t"});
    auto q = random_polynomial(rng, {"a_s", "a_t"});
    // involution and ring homomorphism
    CHECK(reflect(r, "s", reflect(r, "s", p)) == p);
    CHECK(reflect(r, "t", p * q) == reflect(r, "t", p) * reflect(r, "t", q));
  }
}

TEST_CASE("difference operator values and identities") {
  auto r = root_realization(a2());
  auto as = Polynomial::variable("a_s"), at = Polynomial::variable("a_t");
  CHECK(demazure(r, "s", as) == Polynomial::constant(Rat(2)));
  CHECK(demazure(r, "s", at) == Polynomial::constant(Rat(-1)));
  CHECK(demazure(r, "s", as * as).is_zero());
  CHECK(demazure(r, "s", Polynomial::constant(Rat(7))).is_zero());
  CHECK(demazure(r, "s", as * at) == at.scaled(Rat(2)) + as);

  auto rb = root_realization(b2());
  std::mt19937_64 rng(0x5EED02u);
  for (int i = 0; i < 60; ++i) {
    auto p = random_polynomial(rng, {"a_s", "a_t"});
    auto q = random_polynomial(rng, {"a_s", "a_t"});
    for (auto real : {r, rb})
      for (std::string l : {"s", "t"}) {
        // dd = 0 and the twisted Leibniz rule
        CHECK(demazure(real, l, demazure(real, l, p)).is_zero());
        CHECK(demazure(real, l, p * q) ==
              demazure(real, l, p) * q + reflect(real, l, p) * demazure(real, l, q));
      }
  }
}

TEST_CASE("gradings of the basis variables") {
  auto r = root_realization(a2());
  auto z = AbGroup::free_group({"c"});
  SUBCASE("uniform degree 1 is valid") {
    VGrading vg{z, {{"a_s", z.gen(0)}, {"a_t", z.gen(0)}}};
    auto rep = validate_v_grading(r, vg);
    CHECK(rep.ok);
    CHECK(alpha_degree(r, vg, "s") == z.gen(0));
  }
  SUBCASE("unequal degrees on a non-commuting pair fail") {
    VGrading vg{z, {{"a_s", z.gen(0)}, {"a_t", z.gen(0).scaled(2)}}};
    auto rep = validate_v_grading(r, vg);
    CHECK(!rep.ok);
    bool saw = false;
    for (const auto& e : rep.entries)
      if (!e.ok && e.check.rfind("reflection-preserves:", 0) == 0) saw = true;
    CHECK(saw);
  }
  SUBCASE("unequal degrees on a commuting pair are fine") {
    auto r2 = root_realization(a1a1());
    VGrading vg{z, {{"a_s", z.gen(0)}, {"a_t", z.gen(0).scaled(5)}}};
    CHECK(validate_v_grading(r2, vg).ok);
  }
  SUBCASE("missing basis variable fails") {
    VGrading vg{z, {{"a_s", z.gen(0)}}};
    CHECK(!validate_v_grading(r, vg).ok);
  }
  SUBCASE("degree from a different group fails") {
    auto other = AbGroup::free_group({"d"});
    VGrading vg{z, {{"a_s", other.gen(0)}, {"a_t", z.gen(0)}}};
    CHECK(!validate_v_grading(r, vg).ok);
  }
}
