#include <map>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "hcg/rescale.hpp"
#include "test_util.hpp"

using namespace hcg;
using namespace hcgtest;

namespace {

// chi(a,b) = (-1)^b on a rank-two free group such as the bigrading's.
Character sign_second(const AbGroup& g) { return character(g, std::vector<Rat>{Rat(1), Rat(-1)}); }

VGrading unit_vgrading(const Realization& real) {
  auto gamma = AbGroup::free_group({"q"});
  VGrading vg{gamma, {}};
  for (const auto& v : real.basis()) vg.deg_basis.emplace(v, gamma.gen(0));
  return vg;
}

}  // namespace

TEST_CASE("exact rational powers") {
  CHECK(rat_pow(Rat(2), Int(10)) == Rat(1024));
  CHECK(rat_pow(Rat(2, 3), Int(-2)) == Rat(9, 4));
  CHECK(rat_pow(Rat(-1), Int(3)) == Rat(-1));
  CHECK(rat_pow(Rat(-5, 7), Int(0)) == Rat(1));
  CHECK(rat_pow(Rat(-2, 3), Int(-3)) == Rat(-27, 8));
  CHECK_THROWS_AS(rat_pow(Rat(0), Int(2)), error);
}

TEST_CASE("character construction and validation") {
  auto z2 = AbGroup::free_group({"a", "b"});
  auto chi = sign_second(z2);
  CHECK(chi.value(z2.gen(0)) == Rat(1));
  CHECK(chi.value(z2.gen(1)) == Rat(-1));
  CHECK(chi.value(z2.element({Int(3), Int(2)})) == Rat(1));
  CHECK(chi.value(z2.element({Int(0), Int(5)})) == Rat(-1));
  CHECK(!chi.is_trivial());
  CHECK(trivial_character(z2).is_trivial());

  // On the universal target of a non-commuting pair the relator
  // f_s + g_s - f_t - g_t must map to 1.
  auto uni = universal_lambda(a2());
  const auto& lam = uni.group();
  std::map<std::string, Rat> imgs{{"f_s", Rat(2)},
                                  {"g_s", Rat(1, 2)},
                                  {"f_t", Rat(1, 3)},
                                  {"g_t", Rat(3)}};
  auto chi_l = character(lam, imgs);
  CHECK(chi_l.value(uni.f_of("s") + uni.g_of("s")) == Rat(1));
  CHECK(chi_l.value(uni.f_of("t")) == Rat(1, 3));

  imgs["f_s"] = Rat(5);
  CHECK_THROWS_AS(character(lam, imgs), error);  // relator no longer killed
  CHECK_THROWS_AS(character(z2, std::vector<Rat>{Rat(1)}), error);
  CHECK_THROWS_AS(character(z2, std::vector<Rat>{Rat(1), Rat(0)}), error);
  CHECK_THROWS_AS(character(z2, std::map<std::string, Rat>{{"a", Rat(1)}}), error);
  CHECK_THROWS_AS(
      character(z2, std::map<std::string, Rat>{{"a", Rat(1)}, {"b", Rat(1)}, {"c", Rat(1)}}),
      error);

  // Torsion bounds the possible images.
  auto z2t = presented_group({"x"}, IntMatrix{{2}});
  CHECK_NOTHROW(character(z2t, std::vector<Rat>{Rat(-1)}));
  CHECK_THROWS_AS(character(z2t, std::vector<Rat>{Rat(2)}), error);
  auto z3t = presented_group({"x"}, IntMatrix{{3}});
  CHECK_THROWS_AS(character(z3t, std::vector<Rat>{Rat(-1)}), error);

  // Cross-group evaluation is rejected.
  CHECK_THROWS_AS(chi.value(lam.gen(0)), error);
}

TEST_CASE("characters are multiplicative") {
  std::mt19937_64 rng(0xC0FFEE);
  std::vector<AbGroup> groups{AbGroup::free_group({"a", "b"}),
                              universal_lambda(a3()).group(),
                              presented_group({"p", "q"}, IntMatrix{{0, 2}}),
                              presented_group({"x", "y", "z"}, IntMatrix{{0, 3, 0}, {0, 0, 6}})};
  for (const auto& g : groups) {
    for (uint64_t seed = 0; seed < 6; ++seed) {
      auto chi = sample_character(g, seed);
      auto chi2 = sample_character(g, seed);
      CHECK(chi.images() == chi2.images());  // deterministic
      std::uniform_int_distribution<long> c(-4, 4);
      for (int it = 0; it < 20; ++it) {
        std::vector<Int> xs, ys;
        for (size_t j = 0; j < g.gen_count(); ++j) {
          xs.push_back(Int(c(rng)));
          ys.push_back(Int(c(rng)));
        }
        auto x = g.element(xs), y = g.element(ys);
        CHECK(chi.value(x + y) == chi.value(x) * chi.value(y));
        CHECK(chi.value(-x) == Rat(1) / chi.value(x));
      }
    }
  }

  // Only the trivial rational character exists on Z/3.
  auto z3t = presented_group({"x"}, IntMatrix{{3}});
  for (uint64_t seed = 0; seed < 10; ++seed)
    CHECK(sample_character(z3t, seed).is_trivial());
  // Z/2 admits the sign character, and sampling finds it.
  auto z2t = presented_group({"x"}, IntMatrix{{2}});
  bool nontrivial = false;
  for (uint64_t seed = 0; seed < 40; ++seed)
    if (!sample_character(z2t, seed).is_trivial()) nontrivial = true;
  CHECK(nontrivial);
}

TEST_CASE("rescaling diagrams by a character of the degree group") {
  auto sys = a2();
  auto big = bigrading(sys);
  auto chi = sign_second(big.group());

  auto barbell = Diagram(sys, {}, {{Atom::dot_in("s")}, {Atom::dot_out("s")}});
  auto sm = theta_apply(chi, barbell, big);
  CHECK(sm.scalar == Rat(-1));
  CHECK(sm.diagram == barbell);

  auto vtx = Diagram(sys, {"s", "t", "s"}, {{Atom::vertex("s", "t")}});
  CHECK(theta_apply(chi, vtx, big).scalar == Rat(1));

  auto triv = trivial_character(big.group());
  std::mt19937_64 rng(0x7E57);
  for (int it = 0; it < 40; ++it) {
    auto d = random_diagram(rng, sys, 4, std::nullopt, true);
    CHECK(theta_apply(triv, d, big).scalar == Rat(1));
    // The sign character reads off the parity of the second coordinate.
    auto deg = degree(d, big).coeffs();
    Rat expect = (deg[1] % 2 == 0) ? Rat(1) : Rat(-1);
    CHECK(theta_apply(chi, d, big).scalar == expect);
  }

  // Domain mismatch is rejected.
  CHECK_THROWS_AS(theta_apply(chi, barbell, universal_lambda(sys)), error);
}

TEST_CASE("rescaling scalars are functorial under compose and tensor") {
  std::mt19937_64 rng(0xFAC70);
  for (const auto& sys : {a2(), b2(), a3()}) {
    auto big = bigrading(sys);
    auto uni = universal_lambda(sys);
    for (uint64_t seed : {uint64_t(3), uint64_t(11)}) {
      auto chib = sample_character(big.group(), seed);
      auto chiu = sample_character(uni.group(), seed);
      for (int it = 0; it < 35; ++it) {
        auto d1 = random_diagram(rng, sys, 3, std::nullopt, true);
        auto d2 = random_diagram(rng, sys, 3, d1.top(), true);
        auto comp = compose(d1, d2);
        CHECK(theta_apply(chib, comp, big).scalar ==
              theta_apply(chib, d1, big).scalar * theta_apply(chib, d2, big).scalar);
        CHECK(theta_apply(chiu, comp, uni).scalar ==
              theta_apply(chiu, d1, uni).scalar * theta_apply(chiu, d2, uni).scalar);
        auto d3 = random_diagram(rng, sys, 2, std::nullopt, true);
        auto ten = tensor(d1, d3);
        CHECK(theta_apply(chib, ten, big).scalar ==
              theta_apply(chib, d1, big).scalar * theta_apply(chib, d3, big).scalar);
      }
    }
  }
}

TEST_CASE("catalog relations survive rescaling") {
  // Any character of a grading that verifies is automatically constant on
  // each relation's terms; the half-twist sign character is the paper's
  // named instance.
  for (const auto& sys : {a2(), b2(), g2(), a3(), a1a1()}) {
    auto real = root_realization(sys);
    auto big = bigrading(sys);
    auto cat = build_catalog(sys, real);
    auto chi = sign_second(big.group());
    for (const auto& rel : cat) CHECK(relation_preserved(chi, rel, big));

    for (uint64_t seed = 0; seed < 4; ++seed) {
      auto chir = sample_character(big.group(), seed);
      auto uni = universal_lambda(sys);
      auto chiu = sample_character(uni.group(), seed);
      for (const auto& rel : cat) {
        CHECK(relation_preserved(chir, rel, big));
        CHECK(relation_preserved(chiu, rel, uni));
      }
    }
  }

  // A pair of same-boundary diagrams with degrees (0,0) and (1,1) is not
  // a homogeneous relation, and the sign character detects it.
  auto sys = a2();
  auto big = bigrading(sys);
  auto fake = make_relation(
      "fake", "user",
      {{Rat(1), Diagram::identity(sys, {"s"})},
       {Rat(-1), Diagram(sys, {"s"},
                         {{Atom::dot_in("s"), Atom::id("s")}, {Atom::dot_out("s"), Atom::id("s")}})}});
  CHECK(!relation_preserved(sign_second(big.group()), fake, big));
  CHECK(relation_preserved(trivial_character(big.group()), fake, big));
}

TEST_CASE("identity criterion") {
  for (const auto& sys : {a1(), a2(), b2(), g2(), a3(), a1a1(), a2a1()}) {
    auto real = root_realization(sys);
    auto vg = unit_vgrading(real);
    auto ext = general_grading(sys, real, vg);
    const auto& g = ext.group();
    std::vector<std::string> gammas{"q"};

    CHECK(identity_criterion_universal(g, sys.labels(), gammas));
    CHECK(identity_criterion(g, sys.labels(), gammas, trivial_character(g)));

    // Characters trivial on every f_l and on q are exactly the characters
    // of the quotient by those generators; sample them there and lift.
    std::vector<GroupElement> elems;
    for (const auto& l : sys.labels()) elems.push_back(g.gen("f_" + l));
    elems.push_back(g.gen("q"));
    auto quo = quotient(g, elems);
    REQUIRE(quo.gen_names() == g.gen_names());
    for (uint64_t seed = 0; seed < 100; ++seed) {
      auto lifted = character(g, sample_character(quo, seed).images());
      CHECK(identity_criterion(g, sys.labels(), gammas, lifted));
      CHECK(lifted.is_trivial());
    }
  }

  // Without the q-triviality hypothesis the criterion has a counterexample
  // direction: the f's alone do not generate.
  auto real = root_realization(a2());
  auto ext = general_grading(a2(), real, unit_vgrading(real));
  CHECK(!identity_criterion_universal(ext.group(), a2().labels(), {}));

  // A character violating the hypotheses is rejected, not classified.
  std::map<std::string, Rat> imgs{{"f_s", Rat(2)},
                                  {"g_s", Rat(1, 2)},
                                  {"f_t", Rat(1)},
                                  {"g_t", Rat(1)},
                                  {"q", Rat(1)}};
  auto bad = character(ext.group(), imgs);
  CHECK_THROWS_AS(identity_criterion(ext.group(), a2().labels(), {"q"}, bad), error);

  // Domain mismatch.
  CHECK_THROWS_AS(identity_criterion(ext.group(), a2().labels(), {"q"},
                                     trivial_character(AbGroup::free_group({"a", "b"}))),
                  error);
}

TEST_CASE("classification of rational characters") {
  auto cl = classify_characters(universal_lambda(a2()).group());
  CHECK(cl.free_rank == 3);
  CHECK(cl.invariant_factors.empty());
  CHECK(cl.torsion_total == 1);
  CHECK(cl.parameterization.size() == 3);
  CHECK(cl.to_string().find("free rank 3") != std::string::npos);

  auto z2t = classify_characters(presented_group({"x"}, IntMatrix{{2}}));
  CHECK(z2t.free_rank == 0);
  CHECK(z2t.invariant_factors == std::vector<Int>{Int(2)});
  CHECK(z2t.torsion_total == 2);

  auto z3t = classify_characters(presented_group({"x"}, IntMatrix{{3}}));
  CHECK(z3t.torsion_total == 1);

  auto mixed = classify_characters(presented_group({"x", "y"}, IntMatrix{{0, 6}}));
  CHECK(mixed.free_rank == 1);
  CHECK(mixed.invariant_factors == std::vector<Int>{Int(6)});
  CHECK(mixed.torsion_total == 2);
  CHECK(mixed.parameterization.size() == 2);

  auto klein = classify_characters(presented_group({"x", "y"}, IntMatrix{{2, 0}, {0, 2}}));
  CHECK(klein.torsion_total == 4);
  CHECK(klein.torsion_counts == std::vector<size_t>{2, 2});
}
