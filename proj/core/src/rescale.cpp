#include "hcg/rescale.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace hcg {

Rat rat_pow(const Rat& base, const Int& exp) {
  if (base == 0) throw error("rat_pow needs a nonzero base");
  if (!exp.fits_slong_p()) throw error("rat_pow exponent out of range");
  long e = exp.get_si();
  Int p = base.get_num(), q = base.get_den();
  if (e < 0) {
    std::swap(p, q);
    e = -e;
  }
  Int pn, qn;
  mpz_pow_ui(pn.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(e));
  // base was in lowest terms, so the powers are coprime; only the sign of
  // the denominator needs normalizing after a negative-exponent swap.
  if (qn < 0) {
    pn = -pn;
    qn = -qn;
  }
  return Rat(pn, qn);
}

Rat Character::value(const GroupElement& e) const {
  if (!dom_.valid()) throw error("character is uninitialized");
  if (!e.group().same(dom_)) throw error("element lives outside the character's domain");
  Rat v(1);
  const auto& x = e.coeffs();
  for (size_t j = 0; j < x.size(); ++j)
    if (x[j] != 0) v *= rat_pow(img_[j], x[j]);
  return v;
}

bool Character::is_trivial() const {
  return std::all_of(img_.begin(), img_.end(), [](const Rat& r) { return r == 1; });
}

Character character(const AbGroup& g, std::vector<Rat> images) {
  if (!g.valid()) throw error("character needs a group");
  if (images.size() != g.gen_count())
    throw error("character needs one image per generator (" +
                std::to_string(g.gen_count()) + " expected, " +
                std::to_string(images.size()) + " given)");
  for (size_t j = 0; j < images.size(); ++j)
    if (images[j] == 0)
      throw error("character image of '" + g.gen_names()[j] + "' is zero");
  const IntMatrix& rel = g.relators();
  for (size_t r = 0; r < rel.rows(); ++r) {
    Rat v(1);
    for (size_t j = 0; j < rel.cols(); ++j)
      if (rel.at(r, j) != 0) v *= rat_pow(images[j], rel.at(r, j));
    if (v != 1)
      throw error("images do not kill the relator '" +
                  g.element(rel.row(r)).expression() + "' (value " + v.get_str() + ")");
  }
  Character chi;
  chi.dom_ = g;
  chi.img_ = std::move(images);
  return chi;
}

Character character(const AbGroup& g, const std::map<std::string, Rat>& images) {
  if (!g.valid()) throw error("character needs a group");
  std::vector<Rat> v;
  for (const auto& n : g.gen_names()) {
    auto it = images.find(n);
    if (it == images.end()) throw error("character image for generator '" + n + "' missing");
    v.push_back(it->second);
  }
  if (images.size() != g.gen_count())
    throw error("character images name generators the group does not have");
  return character(g, std::move(v));
}

Character trivial_character(const AbGroup& g) {
  return character(g, std::vector<Rat>(g.gen_count(), Rat(1)));
}

Character sample_character(const AbGroup& g, uint64_t seed) {
  if (!g.valid()) throw error("character needs a group");
  std::mt19937_64 rng(seed);
  const std::vector<Rat> pool{Rat(2),  Rat(1, 2), Rat(-1), Rat(3),     Rat(-1, 3),
                              Rat(-2), Rat(5),    Rat(1),  Rat(-3, 2), Rat(2, 3)};
  // Choose values on the Smith basis: free directions from the pool,
  // torsion directions among the roots of unity of the right order.
  const auto& diag = g.diag();
  std::vector<Rat> smith_vals(diag.size());
  for (size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] == 0)
      smith_vals[i] = pool[rng() % pool.size()];
    else if (diag[i] % 2 == 0)
      smith_vals[i] = (rng() % 2 == 0) ? Rat(1) : Rat(-1);
    else
      smith_vals[i] = Rat(1);
  }
  // Generator images through canonical coordinates; this is well defined
  // because each torsion value has the matching multiplicative order.
  std::vector<Rat> images(g.gen_count(), Rat(1));
  for (size_t j = 0; j < g.gen_count(); ++j) {
    auto coords = g.gen(j).canonical();
    Rat v(1);
    for (size_t i = 0; i < coords.size(); ++i)
      if (coords[i] != 0) v *= rat_pow(smith_vals[i], coords[i]);
    images[j] = v;
  }
  return character(g, std::move(images));
}

ScaledMorphism theta_apply(const Character& chi, const Diagram& d, const DegreeAssignment& a) {
  if (!chi.domain().same(a.group()))
    throw error("character domain differs from the degree assignment's group");
  return ScaledMorphism{chi.value(degree(d, a)), d};
}

bool relation_preserved(const Character& chi, const Relation& rel, const DegreeAssignment& a) {
  if (rel.terms.empty()) return true;
  Rat first = theta_apply(chi, rel.terms.front().diagram, a).scalar;
  for (size_t k = 1; k < rel.terms.size(); ++k)
    if (theta_apply(chi, rel.terms[k].diagram, a).scalar != first) return false;
  return true;
}

namespace {

std::vector<GroupElement> hypothesis_generators(const AbGroup& g,
                                                const std::vector<std::string>& colors,
                                                const std::vector<std::string>& gamma_gens) {
  std::vector<GroupElement> elems;
  for (const auto& l : colors) elems.push_back(g.gen("f_" + l));
  for (const auto& n : gamma_gens) elems.push_back(g.gen(n));
  return elems;
}

}  // namespace

bool identity_criterion(const AbGroup& g, const std::vector<std::string>& colors,
                        const std::vector<std::string>& gamma_gens, const Character& chi) {
  if (!chi.domain().same(g)) throw error("character domain is not the given group");
  for (const auto& e : hypothesis_generators(g, colors, gamma_gens)) {
    Rat v = chi.value(e);
    if (v != 1)
      throw error("character violates the criterion hypotheses: chi(" + e.expression() +
                  ") = " + v.get_str());
  }
  return chi.is_trivial();
}

bool identity_criterion_universal(const AbGroup& g, const std::vector<std::string>& colors,
                                  const std::vector<std::string>& gamma_gens) {
  return generates_whole_group(g, hypothesis_generators(g, colors, gamma_gens)).generates;
}

std::string CharacterClassification::to_string() const {
  std::ostringstream os;
  os << "free rank " << free_rank << ", torsion characters " << torsion_total.get_str()
     << "\n";
  for (const auto& p : parameterization) os << "  " << p << "\n";
  return os.str();
}

CharacterClassification classify_characters(const AbGroup& g) {
  if (!g.valid()) throw error("classification needs a group");
  CharacterClassification c;
  c.free_rank = g.free_rank();
  c.invariant_factors = g.invariant_factors();
  for (const auto& d : c.invariant_factors) {
    size_t n = (d % 2 == 0) ? 2 : 1;
    c.torsion_counts.push_back(n);
    c.torsion_total *= Int(static_cast<long>(n));
  }
  size_t k = 0;
  for (size_t i = 0; i < c.free_rank; ++i)
    c.parameterization.push_back("u" + std::to_string(++k) +
                                 ": any nonzero rational (free direction)");
  k = 0;
  for (const auto& d : c.invariant_factors)
    c.parameterization.push_back(
        "t" + std::to_string(++k) + ": " +
        (d % 2 == 0 ? std::string("+1 or -1") : std::string("only 1")) +
        " (torsion of order " + d.get_str() + ", Smith basis)");
  return c;
}

}  // namespace hcg
