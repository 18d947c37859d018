// Characters of grading groups into nonzero rationals and the induced
// degree-based rescaling of diagrams: a character chi turns every
// homogeneous morphism into chi(deg) times itself, which is an
// autoequivalence fixing objects.  Includes the identity criterion (when
// do chi(f_s) = 1 and triviality on the variable-grading part force chi
// to be trivial) and the classification of rational characters of a
// finitely generated abelian group.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hcg/relations.hpp"

namespace hcg {

// Exact base^exp for nonzero rational base and arbitrary-sign exponent.
Rat rat_pow(const Rat& base, const Int& exp);

class Character {
 public:
  Character() = default;

  const AbGroup& domain() const { return dom_; }
  // One nonzero rational per generator of the domain.
  const std::vector<Rat>& images() const { return img_; }

  // chi(e) = product of generator images to the coefficients of e.
  // Throws when e lives in a different group.
  Rat value(const GroupElement& e) const;
  bool is_trivial() const;

 private:
  AbGroup dom_;
  std::vector<Rat> img_;
  friend Character character(const AbGroup&, std::vector<Rat>);
};

// Validates that every image is nonzero and every relator of the group
// maps to 1; throws with the offending relator and its value otherwise.
Character character(const AbGroup& g, std::vector<Rat> images);
// Same, with images keyed by generator name (every generator required).
Character character(const AbGroup& g, const std::map<std::string, Rat>& images);
Character trivial_character(const AbGroup& g);

// A pseudorandom valid character: free directions of the group get small
// nonzero rationals, torsion directions get compatible signs.  The same
// seed always produces the same character.
Character sample_character(const AbGroup& g, uint64_t seed);

struct ScaledMorphism {
  Rat scalar;
  Diagram diagram;
};

// The rescaling functor on one morphism: the diagram unchanged, scaled by
// chi of its degree.  The character's domain must be the assignment's
// group; degree errors (inhomogeneous boxes) propagate.
ScaledMorphism theta_apply(const Character& chi, const Diagram& d, const DegreeAssignment& a);

// True iff every term of the relation acquires the same scalar, so the
// rescaled relation is again a multiple of the original.
bool relation_preserved(const Character& chi, const Relation& rel, const DegreeAssignment& a);

// Identity criterion on a group built by the extended grading
// construction, whose generators are f_l, g_l per color plus the
// variable-grading group's generators (`gamma_gens`).
//
// Pointwise: requires chi(f_l) = 1 for every color and chi trivial on the
// gamma generators (throws otherwise, and on domain mismatch), and
// returns whether chi is trivial on the whole group.
bool identity_criterion(const AbGroup& g, const std::vector<std::string>& colors,
                        const std::vector<std::string>& gamma_gens, const Character& chi);

// Universal form: true iff the f_l and gamma generators generate the
// whole group, in which case EVERY character satisfying the pointwise
// hypotheses is trivial, over any coefficient field.
bool identity_criterion_universal(const AbGroup& g, const std::vector<std::string>& colors,
                                  const std::vector<std::string>& gamma_gens);

// Rational characters of a finitely generated abelian group: free
// directions contribute an arbitrary nonzero rational each; a torsion
// factor Z/d contributes the d-th roots of unity in Q, i.e. {1} for odd
// d and {±1} for even d.
struct CharacterClassification {
  size_t free_rank = 0;
  std::vector<Int> invariant_factors;
  // Number of rational characters of each torsion factor (1 or 2).
  std::vector<size_t> torsion_counts;
  // Product of torsion_counts: rational characters modulo free choices.
  Int torsion_total = 1;
  // One line per Smith-basis direction describing the allowed images.
  std::vector<std::string> parameterization;
  std::string to_string() const;
};

CharacterClassification classify_characters(const AbGroup& g);

}  // namespace hcg
