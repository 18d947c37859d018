// Coxeter systems (finite generator set with a Coxeter matrix, infinite
// entries allowed), reflection representations on a polynomial ring with a
// chosen basis, the associated reflection/difference operators, and
// auxiliary gradings of the polynomial ring by an abelian group.
#pragma once

#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hcg/abgroup.hpp"
#include "hcg/polynomial.hpp"

namespace hcg {

// Coxeter matrix entry for a non-commuting pair of infinite order.
inline constexpr int kInfiniteBond = std::numeric_limits<int>::max();

inline bool finite_bond(int m) { return m != kInfiniteBond; }

class CoxeterSystem {
 public:
  CoxeterSystem() = default;

  bool valid() const { return d_ != nullptr; }
  size_t rank() const;
  const std::vector<std::string>& labels() const;
  size_t index(const std::string& label) const;
  bool has(const std::string& label) const;

  // Coxeter matrix entry; kInfiniteBond encodes infinity.
  int bond(size_t i, size_t j) const;
  int bond(const std::string& a, const std::string& b) const;

  bool same(const CoxeterSystem& o) const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
  friend CoxeterSystem new_coxeter_system(std::vector<std::string>,
                                          std::vector<std::vector<int>>);
};

// Validates and builds a system: matrix square and symmetric, diagonal 1,
// off-diagonal entries >= 2 or kInfiniteBond.
CoxeterSystem new_coxeter_system(std::vector<std::string> labels,
                                 std::vector<std::vector<int>> coxeter_matrix);

// Partition of the generator labels into connected components of the
// graph with an edge wherever two generators do not commute.
std::vector<std::vector<std::string>> connected_components(const CoxeterSystem& sys);

// A representation of the system on a polynomial ring: each generator has
// a degree-one "root" polynomial alpha_s over the basis variables and a
// covector pairing <alpha_s^v, -> on them, with <alpha_s^v, alpha_s> = 2.
class Realization {
 public:
  Realization() = default;

  bool valid() const { return d_ != nullptr; }
  const CoxeterSystem& system() const;
  const std::vector<std::string>& basis() const;
  const Polynomial& alpha(const std::string& label) const;
  // <alpha_label^v, basis variable>
  const Rat& pairing(const std::string& label, const std::string& var) const;
  // Pairing extended linearly to a degree-one polynomial.
  Rat pairing_linear(const std::string& label, const Polynomial& p) const;
  // cartan(a, b) = <alpha_a^v, alpha_b>
  Rat cartan(const std::string& a, const std::string& b) const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
  friend Realization root_realization(const CoxeterSystem&,
                                      const std::optional<std::vector<std::vector<Rat>>>&);
};

// The realization on the span of the roots themselves: one basis variable
// "a_<label>" per generator with alpha_s = a_s, and the given Cartan matrix
// as pairings.  Without an explicit matrix, off-diagonal entries for bond
// orders 2, 3, 4, 6 default to 0, -1, -1/-2, -1/-3 (the asymmetric entries
// go in label order); any other bond order requires an explicit matrix.
// Validates: diagonal 2, and entry zero exactly when the bond order is 2.
Realization root_realization(
    const CoxeterSystem& sys,
    const std::optional<std::vector<std::vector<Rat>>>& cartan = std::nullopt);

// p with the generator's reflection applied to every variable:
// v -> v - <alpha_s^v, v> * alpha_s.
Polynomial reflect(const Realization& real, const std::string& label, const Polynomial& p);

// Difference operator (p - reflect(p)) / alpha_s (always exact).
Polynomial demazure(const Realization& real, const std::string& label, const Polynomial& p);

// A grading of the basis variables by an abelian group.
struct VGrading {
  AbGroup group;
  std::map<std::string, GroupElement> deg_basis;
};

struct VGradingReport {
  struct Entry {
    std::string check;
    bool ok = false;
    std::string detail;
  };
  bool ok = true;
  std::vector<Entry> entries;
  std::string to_string() const;
};

// Checks the grading covers every basis variable, each alpha_s is
// homogeneous, and every reflection preserves degrees (s(v) homogeneous of
// the degree of v).
VGradingReport validate_v_grading(const Realization& real, const VGrading& vg);

// Degree of alpha_label under a validated grading.
GroupElement alpha_degree(const Realization& real, const VGrading& vg, const std::string& label);

}  // namespace hcg
