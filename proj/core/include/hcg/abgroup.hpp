// Finitely generated abelian groups given by generators and relators.
// Elements are integer coefficient vectors over the generators; equality,
// canonical coordinates and structure (free rank, invariant factors) are
// all answered through a cached Smith normal form of the relator matrix.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hcg/intmatrix.hpp"
#include "hcg/numeric.hpp"

namespace hcg {

class GroupElement;

class AbGroup {
 public:
  AbGroup() = default;

  static AbGroup free_group(std::vector<std::string> gen_names);

  bool valid() const { return d_ != nullptr; }
  size_t gen_count() const;
  const std::vector<std::string>& gen_names() const;
  const IntMatrix& relators() const;

  // Diagonal of the relator Smith form padded to gen_count() entries
  // (1s = collapsed generators, 0s = free directions).
  const std::vector<Int>& diag() const;
  // Entries of diag() that are > 1, i.e. the torsion structure.
  std::vector<Int> invariant_factors() const;
  size_t free_rank() const;
  bool is_trivial() const;
  bool torsion_free() const;

  GroupElement zero() const;
  GroupElement gen(size_t i) const;
  GroupElement gen(const std::string& name) const;
  size_t gen_index(const std::string& name) const;
  GroupElement element(std::vector<Int> coeffs) const;

  // Structural identity: same generator names and the same relator matrix.
  bool same(const AbGroup& o) const;

  std::string describe() const;  // e.g. "Z^3", "Z^2 x Z/2 x Z/6"

  // Canonical coordinates of a coefficient vector (Smith basis, torsion
  // reduced into [0, d_i)).
  std::vector<Int> canonical_coords(const std::vector<Int>& coeffs) const;

  struct Data;  // definition internal to abgroup.cpp

 private:
  std::shared_ptr<const Data> d_;
  static AbGroup build(std::vector<std::string> gen_names, IntMatrix relators);
  friend AbGroup presented_group(std::vector<std::string> gen_names, IntMatrix relators);
};

class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(AbGroup group, std::vector<Int> coeffs);

  const AbGroup& group() const { return g_; }
  // Raw coefficients over the generators (one representative, not canonical).
  const std::vector<Int>& coeffs() const { return x_; }
  // Coordinates in the Smith basis; equal elements have equal canonical
  // coordinates.
  std::vector<Int> canonical() const { return g_.canonical_coords(x_); }
  bool is_zero() const;

  GroupElement operator+(const GroupElement& o) const;
  GroupElement operator-(const GroupElement& o) const;
  GroupElement operator-() const;
  GroupElement scaled(const Int& k) const;
  bool operator==(const GroupElement& o) const;

  // "(1,-1,0)" over canonical coordinates.
  std::string to_string() const;
  // "f_s + 2*g_t" over raw coefficients and generator names; "0" when zero.
  std::string expression() const;

 private:
  AbGroup g_;
  std::vector<Int> x_;
};

// A group from generator names and relator rows (relator matrix may have
// zero rows; its column count must equal the generator count).
AbGroup presented_group(std::vector<std::string> gen_names, IntMatrix relators);

// The quotient of `g` by the subgroup generated by `extra` (elements of g).
AbGroup quotient(const AbGroup& g, const std::vector<GroupElement>& extra);

class Hom {
 public:
  Hom() = default;
  const AbGroup& source() const { return src_; }
  const AbGroup& target() const { return dst_; }
  const std::vector<GroupElement>& images() const { return img_; }
  GroupElement apply(const GroupElement& e) const;

 private:
  AbGroup src_, dst_;
  std::vector<GroupElement> img_;
  friend Hom hom(const AbGroup&, const AbGroup&, std::vector<GroupElement>);
};

// Builds a homomorphism from generator images, verifying every relator of
// the source maps to zero; throws with the offending relator otherwise.
Hom hom(const AbGroup& source, const AbGroup& target, std::vector<GroupElement> images);

// Certificate for "do these elements generate the whole group": the
// invariant factors and free rank of the quotient by them (all-1 factors
// and rank zero iff they generate).
struct GenCertificate {
  bool generates = false;
  std::vector<Int> quotient_diag;
  size_t quotient_free_rank = 0;
  std::string to_string() const;
};

GenCertificate generates_whole_group(const AbGroup& g, const std::vector<GroupElement>& elems);

}  // namespace hcg
