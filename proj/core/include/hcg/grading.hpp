// Degree assignments for the diagram calculus.  An assignment fixes an
// abelian group and, per color, the degrees of the two dot directions
// (f = strand birth, g = strand death); every other atom's degree is
// derived from those: split -g, merge -f, 2m-valent vertices 0 for even
// bond order and g_a - g_b for odd, polynomial boxes through the variable
// degrees.  Includes the classical assignments, the universal one, its
// extension by a grading of the polynomial variables, and specialization
// along group homomorphisms.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "hcg/abgroup.hpp"
#include "hcg/coxeter.hpp"
#include "hcg/diagram.hpp"

namespace hcg {

class DegreeAssignment {
 public:
  DegreeAssignment() = default;

  const CoxeterSystem& system() const { return sys_; }
  const AbGroup& group() const { return group_; }

  const GroupElement& f_of(const std::string& label) const;
  const GroupElement& g_of(const std::string& label) const;
  const GroupElement& var_degree(const std::string& var) const;
  const std::map<std::string, GroupElement>& var_degrees() const { return deg_v_; }

  // Derived degree of one atom.
  GroupElement atom_degree(const Atom& a) const;
  // Degree of a polynomial: all monomials must agree; throws
  // inhomogeneous_error with the two clashing degrees otherwise, and
  // hcg::error for the zero polynomial or an ungraded variable.
  GroupElement polynomial_degree(const Polynomial& p) const;

 private:
  CoxeterSystem sys_;
  AbGroup group_;
  std::map<std::string, GroupElement> f_, g_, deg_v_;
  friend DegreeAssignment make_assignment(CoxeterSystem, AbGroup,
                                          std::map<std::string, GroupElement>,
                                          std::map<std::string, GroupElement>,
                                          std::map<std::string, GroupElement>);
};

// Validates completeness (every color has f and g) and that all elements
// live in `group`.
DegreeAssignment make_assignment(CoxeterSystem sys, AbGroup group,
                                 std::map<std::string, GroupElement> f,
                                 std::map<std::string, GroupElement> g,
                                 std::map<std::string, GroupElement> deg_v);

// Z^2 assignment: f = (1,0) and g = (0,1) for every color, variables (1,1).
DegreeAssignment bigrading(const CoxeterSystem& sys);

// Classical Z assignment: f = g = 1, variables of degree 2 (the image of
// the bigrading under adding the two coordinates).
DegreeAssignment original_grading(const CoxeterSystem& sys);

// The universal target: one pair f_l, g_l of generators per color, modulo
// f_a + g_a = f_b + g_b for every non-commuting pair (infinite bond orders
// included); variables "a_<label>" get f + g.  Every assignment over the
// bare system is a specialization of this one.
DegreeAssignment universal_lambda(const CoxeterSystem& sys);

// The universal target extended by a grading group for the polynomial
// variables: generators of universal_lambda plus the grading group, with
// f_l + g_l identified with the degree of alpha_l.  The variable grading
// must validate (validate_v_grading); its report is carried in the error
// otherwise.
DegreeAssignment general_grading(const CoxeterSystem& sys, const Realization& real,
                                 const VGrading& vg);

// Sum of the atom degrees of the whole diagram.
GroupElement degree(const Diagram& d, const DegreeAssignment& a);

// Pushes an assignment along a hom of its group.
DegreeAssignment specialize(const DegreeAssignment& a, const Hom& h);

// Sum of g over a word's letters; vertex-only diagrams have degree
// word_weight(bottom) - word_weight(top).
GroupElement word_weight(const DegreeAssignment& a, const std::vector<std::string>& word);

}  // namespace hcg
