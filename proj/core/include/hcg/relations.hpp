// The defining relation catalog of the diagram calculus, the homogeneity
// verifier, and the two constraint-lattice derivations: one for degrees
// (producing the universal grading group with an isomorphism certificate)
// and an independent multiplicative one for rescaling scalars.  The
// verifier is relation-agnostic: relations are plain data (name, family,
// scalar-weighted diagram terms summing to zero), so catalogs can be
// extended from files.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hcg/abgroup.hpp"
#include "hcg/coxeter.hpp"
#include "hcg/diagram.hpp"
#include "hcg/grading.hpp"

namespace hcg {

struct RelationTerm {
  Rat scalar;
  Diagram diagram;
};

// Sum of scalar-weighted diagrams equal to zero.  All terms share one
// bottom word and one top word.
struct Relation {
  std::string name;
  std::string family;
  std::vector<RelationTerm> terms;
};

// Validates nonzero scalars and matching boundaries.
Relation make_relation(std::string name, std::string family, std::vector<RelationTerm> terms);

// The defining relations over a realization: per color the unit/counit
// dot cancellations, Frobenius (co)associativity and the Frobenius law,
// the needle, the barbell (equal to the box of alpha_s), and polynomial
// forcing probes for every alpha_t plus alpha_s^2; per ordered
// non-commuting pair with finite bond order, two-color associativity and
// vertex cyclicity.  Infinite bonds contribute nothing.
std::vector<Relation> build_catalog(const CoxeterSystem& sys, const Realization& real);

// The polynomial-free part of the catalog (no realization needed): dot
// cancellations, Frobenius family, needle, and the two-color families.
std::vector<Relation> build_catalog(const CoxeterSystem& sys);

struct HomogeneityEntry {
  struct Witness {
    std::string term;    // which term (or box) the degree was read from
    std::string degree;  // printed degree
  };
  std::string relation;
  bool homogeneous = false;
  std::optional<GroupElement> degree;  // common degree when homogeneous
  std::vector<Witness> witnesses;      // one per distinct degree otherwise
};

struct HomogeneityReport {
  std::vector<HomogeneityEntry> entries;
  bool all_homogeneous() const;
  std::string to_string() const;
};

// Degrees of all terms via the assignment; homogeneous iff they agree.
// An inhomogeneous polynomial box propagates as inhomogeneous_error.
HomogeneityEntry check_homogeneity(const Relation& rel, const DegreeAssignment& a);

// Runs check_homogeneity over the catalog (plus any extra relations),
// the cup/cap degree balance of the idempotent terms per finite pair,
// and the boundary-weight telescoping of the 2m-valent generators.
// Failures become entries; nothing throws.
HomogeneityReport verify_all(const CoxeterSystem& sys, const Realization& real,
                             const DegreeAssignment& a,
                             const std::vector<Relation>& extra = {});

// One idempotent term per crossingless matching on (m-1)+(m-1) points.
struct JwTerm {
  Matching matching;
  size_t cups = 0;  // each contributes +delta to the term degree
  size_t caps = 0;  // each contributes -delta
};

std::vector<JwTerm> jw_terms(const std::string& s, const std::string& t, int m);

// True iff every term has degree zero, with delta = f_t - g_s.  Throws
// when f_t - g_s != f_s - g_t in the group (delta ill-defined: the
// assignment identifies the two colors' dot sums differently).
bool jw_degree_check(const std::string& s, const std::string& t, int m,
                     const DegreeAssignment& a);

// Homogeneity of the catalog, linearized: one formal unknown per
// generator-kind degree and one integer row per equated degree pair.
struct ConstraintSystem {
  // Interleaved f/g per color, then one vertex unknown per ordered
  // finite non-commuting pair, then one unknown per basis variable
  // (realization mode only).
  std::vector<std::string> unknowns;
  IntMatrix rows;
  std::vector<std::string> sources;  // producing relation, one per row
};

// Canonical basis of the row lattice (Hermite form).
IntMatrix constraint_lattice(const ConstraintSystem& cs);

// Two-sided isomorphism evidence between the derived group and the
// directly constructed reference: generator-to-generator homs both ways
// (hom construction already validates relators), their round trips, and
// both invariant factor lists.
struct IsoCertificate {
  Hom forward;   // reference -> derived
  Hom backward;  // derived -> reference
  bool mutually_inverse = false;
  size_t rank_derived = 0;
  size_t rank_reference = 0;
  std::vector<Int> invariants_derived;
  std::vector<Int> invariants_reference;
  bool ok() const {
    return mutually_inverse && rank_derived == rank_reference &&
           invariants_derived == invariants_reference;
  }
};

struct DeriveResult {
  AbGroup group;                // on the dot unknowns (plus grading group)
  DegreeAssignment assignment;  // the induced canonical assignment
  ConstraintSystem constraints;
  IsoCertificate certificate;
  // The vertex degrees the lattice forces, keyed by ordered pair; these
  // are outputs of elimination, not inputs.
  std::map<std::pair<std::string, std::string>, GroupElement> vertex_degrees;
};

// Quotients the free group on the unknowns by the constraint lattice,
// eliminates the vertex and variable unknowns (each must be forced by a
// unit-pivot row), and certifies the result against universal_lambda.
// Checks the outcome still maps onto the single-integer degree count
// (every dot degree to one); a failure there signals a broken catalog.
DeriveResult derive_universal(const CoxeterSystem& sys, const Realization& real);

// Same derivation from the polynomial-free catalog (odd bonds supply the
// color-sum identifications through cyclicity).
DeriveResult derive_universal(const CoxeterSystem& sys);

// Same derivation with the variable degrees taken from a validated
// grading of the basis; certified against general_grading.
DeriveResult derive_universal(const CoxeterSystem& sys, const Realization& real,
                              const VGrading& vg);

// The multiplicative analogue, written in exponent notation: unknowns
// are the dot scalars per color, one vertex scalar per ordered pair, and
// one scalar per basis variable; a relation survives rescaling iff all
// terms pick up the same factor.  Computed by an independent walk over
// the same catalog; the row space must coincide with derive_universal's.
ConstraintSystem derive_scalar_constraints(const CoxeterSystem& sys, const Realization& real);

}  // namespace hcg
