#include "hcg/grading.hpp"

#include <algorithm>

namespace hcg {

const GroupElement& DegreeAssignment::f_of(const std::string& label) const {
  auto it = f_.find(label);
  if (it == f_.end()) throw error("no f-degree for color '" + label + "'");
  return it->second;
}

const GroupElement& DegreeAssignment::g_of(const std::string& label) const {
  auto it = g_.find(label);
  if (it == g_.end()) throw error("no g-degree for color '" + label + "'");
  return it->second;
}

const GroupElement& DegreeAssignment::var_degree(const std::string& var) const {
  auto it = deg_v_.find(var);
  if (it == deg_v_.end()) throw error("no degree for variable '" + var + "'");
  return it->second;
}

GroupElement DegreeAssignment::atom_degree(const Atom& a) const {
  switch (a.kind) {
    case Atom::Kind::Id:
      return group_.zero();
    case Atom::Kind::DotIn:
      return f_of(a.c1);
    case Atom::Kind::DotOut:
      return g_of(a.c1);
    case Atom::Kind::Split:
      return -g_of(a.c1);
    case Atom::Kind::Merge:
      return -f_of(a.c1);
    case Atom::Kind::Vertex: {
      int m = sys_.bond(a.c1, a.c2);
      if (!finite_bond(m)) throw error("vertex degree needs a finite bond order");
      if (m % 2 == 0) return group_.zero();
      return g_of(a.c1) - g_of(a.c2);
    }
    case Atom::Kind::PolyBox:
      return polynomial_degree(a.poly);
  }
  throw error("unreachable atom kind");
}

GroupElement DegreeAssignment::polynomial_degree(const Polynomial& p) const {
  if (p.is_zero()) throw error("the zero polynomial has no degree");
  bool have = false;
  GroupElement deg;
  for (const auto& [m, c] : p.terms()) {
    GroupElement d = group_.zero();
    for (const auto& [v, e] : m) d = d + var_degree(v).scaled(Int(e));
    if (!have) {
      deg = d;
      have = true;
    } else if (!(deg == d)) {
      throw inhomogeneous_error("inhomogeneous polynomial: " + p.to_string(), deg.to_string(),
                                d.to_string());
    }
  }
  return deg;
}

DegreeAssignment make_assignment(CoxeterSystem sys, AbGroup group,
                                 std::map<std::string, GroupElement> f,
                                 std::map<std::string, GroupElement> g,
                                 std::map<std::string, GroupElement> deg_v) {
  if (!sys.valid()) throw error("assignment needs a Coxeter system");
  if (!group.valid()) throw error("assignment needs a target group");
  for (const auto& l : sys.labels()) {
    if (!f.count(l)) throw error("missing f-degree for color '" + l + "'");
    if (!g.count(l)) throw error("missing g-degree for color '" + l + "'");
  }
  auto check_in_group = [&](const std::map<std::string, GroupElement>& m, const char* what) {
    for (const auto& [k, e] : m)
      if (!e.group().same(group))
        throw error(std::string(what) + " degree of '" + k + "' lies in a different group");
  };
  check_in_group(f, "f");
  check_in_group(g, "g");
  check_in_group(deg_v, "variable");
  DegreeAssignment a;
  a.sys_ = std::move(sys);
  a.group_ = std::move(group);
  a.f_ = std::move(f);
  a.g_ = std::move(g);
  a.deg_v_ = std::move(deg_v);
  return a;
}

DegreeAssignment bigrading(const CoxeterSystem& sys) {
  auto z2 = AbGroup::free_group({"a", "b"});
  std::map<std::string, GroupElement> f, g, dv;
  for (const auto& l : sys.labels()) {
    f.emplace(l, z2.element({1, 0}));
    g.emplace(l, z2.element({0, 1}));
    dv.emplace("a_" + l, z2.element({1, 1}));
  }
  return make_assignment(sys, z2, std::move(f), std::move(g), std::move(dv));
}

DegreeAssignment original_grading(const CoxeterSystem& sys) {
  auto z = AbGroup::free_group({"d"});
  std::map<std::string, GroupElement> f, g, dv;
  for (const auto& l : sys.labels()) {
    f.emplace(l, z.element({1}));
    g.emplace(l, z.element({1}));
    dv.emplace("a_" + l, z.element({2}));
  }
  return make_assignment(sys, z, std::move(f), std::move(g), std::move(dv));
}

namespace {

std::vector<std::string> lambda_gen_names(const CoxeterSystem& sys) {
  std::vector<std::string> names;
  for (const auto& l : sys.labels()) {
    names.push_back("f_" + l);
    names.push_back("g_" + l);
  }
  return names;
}

// One relator f_a + g_a - f_b - g_b per non-commuting pair, over the
// interleaved generators, padded to `width` columns.
IntMatrix lambda_relators(const CoxeterSystem& sys, size_t width) {
  IntMatrix rels(0, width);
  size_t n = sys.rank();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (sys.bond(i, j) == 2) continue;
      std::vector<Int> row(width, Int(0));
      row[2 * i] = 1;
      row[2 * i + 1] = 1;
      row[2 * j] = -1;
      row[2 * j + 1] = -1;
      rels.append_row(row);
    }
  return rels;
}

}  // namespace

DegreeAssignment universal_lambda(const CoxeterSystem& sys) {
  size_t n = sys.rank();
  auto group = presented_group(lambda_gen_names(sys), lambda_relators(sys, 2 * n));
  std::map<std::string, GroupElement> f, g, dv;
  for (size_t i = 0; i < n; ++i) {
    const auto& l = sys.labels()[i];
    f.emplace(l, group.gen(2 * i));
    g.emplace(l, group.gen(2 * i + 1));
    dv.emplace("a_" + l, group.gen(2 * i) + group.gen(2 * i + 1));
  }
  return make_assignment(sys, group, std::move(f), std::move(g), std::move(dv));
}

DegreeAssignment general_grading(const CoxeterSystem& sys, const Realization& real,
                                 const VGrading& vg) {
  if (!real.valid()) throw error("general grading needs a realization");
  if (!real.system().same(sys)) throw error("realization belongs to a different system");
  auto report = validate_v_grading(real, vg);
  if (!report.ok)
    throw error("variable grading is invalid:\n" + report.to_string());

  size_t n = sys.rank();
  size_t gamma_n = vg.group.gen_count();
  std::vector<std::string> names = lambda_gen_names(sys);
  for (const auto& gn : vg.group.gen_names()) {
    for (const auto& existing : names)
      if (existing == gn)
        throw error("grading-group generator name collides with '" + gn + "'");
    names.push_back(gn);
  }
  size_t width = 2 * n + gamma_n;

  IntMatrix rels = lambda_relators(sys, width);
  const IntMatrix& grels = vg.group.relators();
  for (size_t r = 0; r < grels.rows(); ++r) {
    std::vector<Int> row(width, Int(0));
    for (size_t j = 0; j < gamma_n; ++j) row[2 * n + j] = grels.at(r, j);
    rels.append_row(row);
  }
  // Identify f_l + g_l with the degree of alpha_l inside the grading group.
  for (size_t i = 0; i < n; ++i) {
    const auto& l = sys.labels()[i];
    GroupElement da = alpha_degree(real, vg, l);
    std::vector<Int> row(width, Int(0));
    row[2 * i] = 1;
    row[2 * i + 1] = 1;
    for (size_t j = 0; j < gamma_n; ++j) row[2 * n + j] = -da.coeffs()[j];
    rels.append_row(row);
  }

  auto group = presented_group(std::move(names), std::move(rels));
  auto embed = [&](const GroupElement& e) {
    std::vector<Int> x(width, Int(0));
    for (size_t j = 0; j < gamma_n; ++j) x[2 * n + j] = e.coeffs()[j];
    return group.element(std::move(x));
  };
  std::map<std::string, GroupElement> f, g, dv;
  for (size_t i = 0; i < n; ++i) {
    const auto& l = sys.labels()[i];
    f.emplace(l, group.gen(2 * i));
    g.emplace(l, group.gen(2 * i + 1));
  }
  for (const auto& [v, d] : vg.deg_basis) dv.emplace(v, embed(d));
  return make_assignment(sys, std::move(group), std::move(f), std::move(g), std::move(dv));
}

GroupElement degree(const Diagram& d, const DegreeAssignment& a) {
  if (!d.system().same(a.system())) throw error("diagram and assignment disagree on the system");
  GroupElement acc = a.group().zero();
  for (const auto& slice : d.slices())
    for (const auto& atom : slice) acc = acc + a.atom_degree(atom);
  return acc;
}

DegreeAssignment specialize(const DegreeAssignment& a, const Hom& h) {
  if (!h.source().same(a.group())) throw error("hom source is not the assignment's group");
  std::map<std::string, GroupElement> f, g, dv;
  for (const auto& l : a.system().labels()) {
    f.emplace(l, h.apply(a.f_of(l)));
    g.emplace(l, h.apply(a.g_of(l)));
  }
  for (const auto& [v, d] : a.var_degrees()) dv.emplace(v, h.apply(d));
  return make_assignment(a.system(), h.target(), std::move(f), std::move(g), std::move(dv));
}

GroupElement word_weight(const DegreeAssignment& a, const std::vector<std::string>& word) {
  GroupElement acc = a.group().zero();
  for (const auto& l : word) acc = acc + a.g_of(l);
  return acc;
}

}  // namespace hcg
