// Shared helpers for the test binaries: seeded random polynomials and a few
// frequently used systems.
#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hcg/coxeter.hpp"
#include "hcg/diagram.hpp"
#include "hcg/polynomial.hpp"

namespace hcgtest {

inline hcg::CoxeterSystem a1() { return hcg::new_coxeter_system({"s"}, {{1}}); }

inline hcg::CoxeterSystem a2() { return hcg::new_coxeter_system({"s", "t"}, {{1, 3}, {3, 1}}); }

inline hcg::CoxeterSystem b2() { return hcg::new_coxeter_system({"s", "t"}, {{1, 4}, {4, 1}}); }

inline hcg::CoxeterSystem g2() { return hcg::new_coxeter_system({"s", "t"}, {{1, 6}, {6, 1}}); }

inline hcg::CoxeterSystem i2(int m) {
  return hcg::new_coxeter_system({"s", "t"}, {{1, m}, {m, 1}});
}

inline hcg::CoxeterSystem a3() {
  return hcg::new_coxeter_system({"s", "t", "u"}, {{1, 3, 2}, {3, 1, 3}, {2, 3, 1}});
}

inline hcg::CoxeterSystem a1a1() {
  return hcg::new_coxeter_system({"s", "t"}, {{1, 2}, {2, 1}});
}

inline hcg::CoxeterSystem a2a1() {
  return hcg::new_coxeter_system({"s", "t", "u"}, {{1, 3, 2}, {3, 1, 2}, {2, 2, 1}});
}

// Small random polynomial over the given variables: up to `max_terms`
// monomials with exponents <= 2 and coefficients in [-5, 5].
inline hcg::Polynomial random_polynomial(std::mt19937_64& rng,
                                         const std::vector<std::string>& vars,
                                         int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(1, max_terms), coeff(-5, 5), expo(0, 2);
  hcg::Polynomial p;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    hcg::Monomial m;
    for (const auto& v : vars) {
      int e = expo(rng);
      if (e > 0) m[v] = static_cast<unsigned>(e);
    }
    p.add_term(m, hcg::Rat(coeff(rng)));
  }
  return p;
}

// Single scaled monomial: homogeneous under every variable grading.
inline hcg::Polynomial random_monomial(std::mt19937_64& rng,
                                       const std::vector<std::string>& vars) {
  std::uniform_int_distribution<int> coef(1, 5), expo(0, 2), sign(0, 1);
  hcg::Polynomial m = hcg::Polynomial::constant(hcg::Rat(sign(rng) ? coef(rng) : -coef(rng)));
  for (const auto& v : vars)
    m = m * hcg::Polynomial::variable(v).pow(static_cast<unsigned>(expo(rng)));
  return m;
}

inline hcg::Polynomial random_nonzero_polynomial(std::mt19937_64& rng,
                                                 const std::vector<std::string>& vars) {
  for (;;) {
    auto p = random_polynomial(rng, vars);
    if (!p.is_zero()) return p;
  }
}

// Random diagram over `sys`, grown slice by slice from a random bottom
// word; hits every atom kind with reasonable frequency.
inline hcg::Diagram random_diagram(std::mt19937_64& rng, const hcg::CoxeterSystem& sys,
                                   int max_slices = 4,
                                   std::optional<std::vector<std::string>> fixed_bottom
                                       = std::nullopt,
                                   bool monomial_boxes = false) {
  using hcg::Atom;
  const auto& labels = sys.labels();
  std::vector<std::string> vars;
  for (const auto& l : labels) vars.push_back("a_" + l);
  std::uniform_int_distribution<size_t> pick(0, labels.size() - 1);
  std::uniform_int_distribution<int> pct(0, 99);

  // Non-commuting pairs with finite bond, for seeding vertex-sized words.
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < labels.size(); ++i)
    for (size_t j = 0; j < labels.size(); ++j)
      if (i != j && hcg::finite_bond(sys.bond(i, j))) pairs.emplace_back(i, j);

  std::vector<std::string> bottom;
  if (fixed_bottom) {
    bottom = std::move(*fixed_bottom);
  } else if (!pairs.empty() && pct(rng) < 35) {
    auto [i, j] = pairs[rng() % pairs.size()];
    int m = sys.bond(i, j);
    for (int k = 0; k < m; ++k) bottom.push_back(labels[k % 2 == 0 ? i : j]);
  } else {
    std::uniform_int_distribution<int> len(0, 4);
    int n = len(rng);
    for (int k = 0; k < n; ++k) bottom.push_back(labels[pick(rng)]);
  }

  std::vector<std::vector<Atom>> slices;
  std::vector<std::string> word = bottom;
  std::uniform_int_distribution<int> nslices(0, max_slices);
  int target_slices = nslices(rng);
  for (int k = 0; k < target_slices; ++k) {
    std::vector<Atom> slice;
    std::vector<std::string> next;
    size_t i = 0;
    auto emit = [&](Atom a) {
      auto tgt = a.target(sys);
      next.insert(next.end(), tgt.begin(), tgt.end());
      slice.push_back(std::move(a));
    };
    while (i < word.size()) {
      if (pct(rng) < 12) emit(Atom::dot_in(labels[pick(rng)]));
      if (pct(rng) < 8)
        emit(Atom::poly_box(monomial_boxes ? random_monomial(rng, vars)
                                           : random_nonzero_polynomial(rng, vars)));
      // Try a vertex when an alternating window starts here.
      bool used = false;
      if (pct(rng) < 45) {
        for (auto [a, b] : pairs) {
          int m = sys.bond(a, b);
          if (i + static_cast<size_t>(m) > word.size()) continue;
          bool match = true;
          for (int q = 0; q < m; ++q)
            if (word[i + q] != labels[q % 2 == 0 ? a : b]) {
              match = false;
              break;
            }
          if (match) {
            emit(Atom::vertex(labels[a], labels[b]));
            i += static_cast<size_t>(m);
            used = true;
            break;
          }
        }
      }
      if (used) continue;
      int r = pct(rng);
      if (r < 12) {
        emit(Atom::dot_out(word[i]));
        i += 1;
      } else if (r < 30) {
        emit(Atom::split(word[i]));
        i += 1;
      } else if (r < 45 && i + 1 < word.size() && word[i] == word[i + 1]) {
        emit(Atom::merge(word[i]));
        i += 2;
      } else {
        emit(Atom::id(word[i]));
        i += 1;
      }
    }
    if (pct(rng) < 15) emit(Atom::dot_in(labels[pick(rng)]));
    if (pct(rng) < 8)
      emit(Atom::poly_box(monomial_boxes ? random_monomial(rng, vars)
                                         : random_nonzero_polynomial(rng, vars)));
    slices.push_back(std::move(slice));
    word = std::move(next);
  }
  return hcg::Diagram(sys, std::move(bottom), std::move(slices));
}

}  // namespace hcgtest
