#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "hcg/diagram.hpp"
#include "test_util.hpp"

using namespace hcg;
using namespace hcgtest;

TEST_CASE("atom boundary words") {
  auto sys = b2();
  CHECK(Atom::id("s").source(sys) == std::vector<std::string>{"s"});
  CHECK(Atom::dot_in("s").source(sys).empty());
  CHECK(Atom::dot_in("s").target(sys) == std::vector<std::string>{"s"});
  CHECK(Atom::split("s").target(sys) == std::vector<std::string>{"s", "s"});
  CHECK(Atom::merge("s").source(sys) == std::vector<std::string>{"s", "s"});
  CHECK(Atom::vertex("s", "t").source(sys) ==
        std::vector<std::string>{"s", "t", "s", "t"});
  CHECK(Atom::vertex("s", "t").target(sys) ==
        std::vector<std::string>{"t", "s", "t", "s"});
  CHECK(Atom::vertex("t", "s").source(sys) ==
        std::vector<std::string>{"t", "s", "t", "s"});
  CHECK(Atom::poly_box(parse_polynomial("a_s")).source(sys).empty());
}

TEST_CASE("diagram construction validates slice boundaries") {
  auto sys = a2();
  SUBCASE("a closed decoration: strand born and killed") {
    Diagram d(sys, {}, {{Atom::dot_in("s")}, {Atom::dot_out("s")}});
    CHECK(d.top().empty());
  }
  SUBCASE("mismatched slice input is rejected with its index") {
    CHECK_THROWS_WITH_AS(Diagram(sys, {"s"}, {{Atom::merge("s")}}),
                         doctest::Contains("slice 0"), error);
    CHECK_THROWS_WITH_AS(
        Diagram(sys, {"s"}, {{Atom::split("s")}, {Atom::id("s"), Atom::id("t")}}),
        doctest::Contains("slice 1"), error);
  }
  SUBCASE("atom-level validation") {
    CHECK_THROWS_AS(Diagram(sys, {"x"}, {}), error);                       // unknown color
    CHECK_THROWS_AS(Diagram(sys, {"s"}, {{Atom::dot_out("x")}}), error);   // unknown color
    CHECK_THROWS_AS(Diagram(sys, {"s", "s"},
                            {{Atom::vertex("s", "s")}}), error);           // equal colors
    CHECK_THROWS_AS(Diagram(sys, {}, {{Atom::poly_box(Polynomial{})}}), error);  // zero box
    auto inf = new_coxeter_system({"s", "t"}, {{1, kInfiniteBond}, {kInfiniteBond, 1}});
    CHECK_THROWS_AS(Diagram(inf, {"s", "t"}, {{Atom::vertex("s", "t")}}), error);
  }
  SUBCASE("a commuting pair admits the 4-valent crossing") {
    auto sys2 = a1a1();
    Diagram d(sys2, {"s", "t"}, {{Atom::vertex("s", "t")}});
    CHECK(d.top() == std::vector<std::string>{"t", "s"});
  }
}

TEST_CASE("vertical and horizontal composition") {
  auto sys = a2();
  Diagram born(sys, {}, {{Atom::dot_in("s")}});
  Diagram forked(sys, {"s"}, {{Atom::split("s")}});
  SUBCASE("compose stacks in order") {
    Diagram cup = compose(born, forked);
    CHECK(cup.bottom().empty());
    CHECK(cup.top() == std::vector<std::string>{"s", "s"});
    CHECK(cup.slices().size() == 2);
    CHECK_THROWS_WITH_AS(compose(forked, forked), doctest::Contains("boundary mismatch"),
                         error);
  }
  SUBCASE("tensor pads the shorter factor on top") {
    Diagram cup = compose(born, forked);           // two slices
    Diagram one(sys, {"t"}, {{Atom::id("t")}});    // one slice
    Diagram t = tensor(cup, one);
    CHECK(t.bottom() == std::vector<std::string>{"t"});
    CHECK(t.top() == std::vector<std::string>{"s", "s", "t"});
    REQUIRE(t.slices().size() == 2);
    CHECK(t.slices()[1].back() == Atom::id("t"));  // padded identity
  }
  SUBCASE("tensor is literally associative and unital") {
    std::mt19937_64 rng(0xABCD01u);
    auto sys3 = a3();
    for (int i = 0; i < 40; ++i) {
      auto a = random_diagram(rng, sys3), b = random_diagram(rng, sys3),
           c = random_diagram(rng, sys3);
      CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
      auto unit = Diagram::identity(sys3, {});
      CHECK(tensor(unit, a) == a);
      CHECK(tensor(a, unit) == a);
    }
  }
  SUBCASE("composing with the identity only adds identity slices") {
    std::mt19937_64 rng(0xABCD02u);
    auto sys3 = a3();
    for (int i = 0; i < 40; ++i) {
      auto d = random_diagram(rng, sys3);
      auto below = compose(Diagram::identity(sys3, d.bottom()), d);
      auto above = compose(d, Diagram::identity(sys3, d.top()));
      CHECK(below == d);  // identity has no slices at all
      CHECK(above == d);
      CHECK(below.normalized() == d.normalized());
    }
  }
  SUBCASE("interchange: stacking tensors equals tensoring stacks") {
    std::mt19937_64 rng(0xABCD03u);
    auto sys3 = a3();
    int done = 0;
    while (done < 25) {
      auto a = random_diagram(rng, sys3), c = random_diagram(rng, sys3);
      Diagram b = Diagram::identity(sys3, a.top());
      Diagram dd = Diagram::identity(sys3, c.top());
      // pad to equal heights so the slicewise equality is literal
      if (a.slices().size() != c.slices().size()) continue;
      CHECK(compose(tensor(a, c), tensor(b, dd)) == tensor(compose(a, b), compose(c, dd)));
      ++done;
    }
  }
}

TEST_CASE("wire format: explicit text and error reporting") {
  auto sys = a3();
  std::string text =
      "# a small morphism with every atom kind\n"
      "bottom: s t u t\n"
      "slice: id(s) vertex(t,u)\n"
      "slice: dot_out(s) split(u) id(t) id(u)\n"
      "\n"
      "slice: merge(u) dot_in(s) id(t) id(u) poly{2*a_s - 1/3*a_t}\n"
      "slice: vertex(u,s) id(t) id(u)\n"
      "top: s u t u\n";
  Diagram d = parse_diagram(sys, text);
  CHECK(d.bottom() == std::vector<std::string>{"s", "t", "u", "t"});
  CHECK(d.top() == std::vector<std::string>{"s", "u", "t", "u"});
  CHECK(parse_diagram(sys, serialize_diagram(d)) == d);

  CHECK_THROWS_WITH_AS(parse_diagram(sys, "slice: id(s)\n"), doctest::Contains("bottom"),
                       error);
  CHECK_THROWS_WITH_AS(parse_diagram(sys, "bottom: s\nslice: id(s)\ntop: t\n"),
                       doctest::Contains("declared top"), error);
  CHECK_THROWS_WITH_AS(parse_diagram(sys, "bottom: s\nslice: spin(s)\n"),
                       doctest::Contains("unknown atom"), error);
  CHECK_THROWS_WITH_AS(parse_diagram(sys, "bottom: s\nslice: poly{a_s +}\n"),
                       doctest::Contains("line 2"), error);
  CHECK_THROWS_AS(parse_diagram(sys, "bottom: s\nwat: id(s)\n"), error);
}

TEST_CASE("wire format: 50-diagram round-trip corpus with every atom kind") {
  std::mt19937_64 rng(0xF00D01u);
  std::vector<CoxeterSystem> systems{a2(), b2(), a3(), a2a1()};
  std::set<Atom::Kind> seen;
  for (int i = 0; i < 50; ++i) {
    const auto& sys = systems[i % systems.size()];
    Diagram d = random_diagram(rng, sys);
    for (const auto& s : d.slices())
      for (const auto& a : s) seen.insert(a.kind);
    Diagram back = parse_diagram(sys, serialize_diagram(d));
    REQUIRE(back == d);
  }
  CHECK(seen.size() == 7);  // all atom kinds exercised
}

namespace {

// Brute-force oracle: every perfect matching of 2p line points, kept when
// no two arcs interleave.
void all_matchings(std::vector<size_t> free_pts, std::vector<std::pair<size_t, size_t>>& cur,
                   std::vector<std::vector<std::pair<size_t, size_t>>>& out) {
  if (free_pts.empty()) {
    out.push_back(cur);
    return;
  }
  size_t a = free_pts.front();
  for (size_t k = 1; k < free_pts.size(); ++k) {
    size_t b = free_pts[k];
    std::vector<size_t> rest;
    for (size_t q = 1; q < free_pts.size(); ++q)
      if (q != k) rest.push_back(free_pts[q]);
    cur.emplace_back(a, b);
    all_matchings(rest, cur, out);
    cur.pop_back();
  }
}

bool interleaves(const std::vector<std::pair<size_t, size_t>>& arcs) {
  for (size_t i = 0; i < arcs.size(); ++i)
    for (size_t j = i + 1; j < arcs.size(); ++j) {
      auto [a, b] = arcs[i];
      auto [c, d] = arcs[j];
      if (a < c ? (c < b && b < d) : (a < d && d < b)) return true;
    }
  return false;
}

}  // namespace

TEST_CASE("crossingless matchings: counts and brute-force cross-check") {
  const size_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int m = 2; m <= 8; ++m) {
    auto ms = crossingless_matchings(m);
    CHECK(ms.size() == catalan[m - 1]);
    for (const auto& mm : ms) {
      CHECK(mm.arcs.size() == static_cast<size_t>(m - 1));
      CHECK(mm.cups() == mm.caps());  // boundary point counts match per side
      CHECK(mm.cups() + mm.caps() + mm.throughs() == mm.arcs.size());
    }
    // set-uniqueness
    std::set<std::string> keys;
    for (const auto& mm : ms) keys.insert(mm.to_string());
    CHECK(keys.size() == ms.size());
  }
  CHECK_THROWS_AS(crossingless_matchings(1), error);

  SUBCASE("m = 2 and m = 3 explicitly") {
    auto m2 = crossingless_matchings(2);
    REQUIRE(m2.size() == 1);
    CHECK(m2[0].throughs() == 1);
    auto m3 = crossingless_matchings(3);
    REQUIRE(m3.size() == 2);
    std::set<std::string> got{m3[0].to_string(), m3[1].to_string()};
    CHECK(got == std::set<std::string>{"[b0-t0 b1-t1]", "[b0-b1 t0-t1]"});
  }

  SUBCASE("independent enumeration for p <= 5") {
    for (int m = 2; m <= 6; ++m) {
      size_t p = static_cast<size_t>(m - 1);
      std::vector<size_t> pts(2 * p);
      for (size_t i = 0; i < 2 * p; ++i) pts[i] = i;
      std::vector<std::vector<std::pair<size_t, size_t>>> all;
      std::vector<std::pair<size_t, size_t>> cur;
      all_matchings(pts, cur, all);
      std::set<std::string> oracle;
      for (const auto& arcs : all) {
        if (interleaves(arcs)) continue;
        // own circle -> strip mapping, written independently of the library
        Matching mm;
        mm.points_per_side = p;
        for (auto [a, b] : arcs) {
          auto conv = [&](size_t x) {
            return x < p ? MatchPoint{false, x} : MatchPoint{true, 2 * p - 1 - x};
          };
          MatchPoint pa = conv(a), pb = conv(b);
          if (pb < pa) std::swap(pa, pb);
          mm.arcs.emplace_back(pa, pb);
        }
        std::sort(mm.arcs.begin(), mm.arcs.end());
        oracle.insert(mm.to_string());
      }
      std::set<std::string> lib;
      for (const auto& mm : crossingless_matchings(m)) lib.insert(mm.to_string());
      REQUIRE(lib == oracle);
    }
  }
}
