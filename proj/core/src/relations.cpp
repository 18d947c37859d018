#include "hcg/relations.hpp"

#include <algorithm>
#include <sstream>

namespace hcg {

namespace {

std::vector<std::string> alternating(const std::string& a, const std::string& b, int len) {
  std::vector<std::string> w;
  for (int i = 0; i < len; ++i) w.push_back(i % 2 == 0 ? a : b);
  return w;
}

std::vector<Atom> id_atoms(const std::vector<std::string>& word) {
  std::vector<Atom> v;
  for (const auto& c : word) v.push_back(Atom::id(c));
  return v;
}

// Ordered pairs of distinct colors with a finite bond order (commuting
// pairs included: their 4-valent crossing is a generator too).
std::vector<std::pair<size_t, size_t>> finite_pairs(const CoxeterSystem& sys) {
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t i = 0; i < sys.rank(); ++i)
    for (size_t j = 0; j < sys.rank(); ++j)
      if (i != j && finite_bond(sys.bond(i, j))) out.emplace_back(i, j);
  return out;
}

void one_color_families(const CoxeterSystem& sys, std::vector<Relation>& out) {
  for (const auto& s : sys.labels()) {
    auto strand = Diagram::identity(sys, {s});
    out.push_back(make_relation(
        "unit-left(" + s + ")", "unit",
        {{Rat(1), Diagram(sys, {s}, {{Atom::split(s)}, {Atom::dot_out(s), Atom::id(s)}})},
         {Rat(-1), strand}}));
    out.push_back(make_relation(
        "unit-right(" + s + ")", "unit",
        {{Rat(1), Diagram(sys, {s}, {{Atom::split(s)}, {Atom::id(s), Atom::dot_out(s)}})},
         {Rat(-1), strand}}));
    out.push_back(make_relation(
        "counit-left(" + s + ")", "unit",
        {{Rat(1), Diagram(sys, {s}, {{Atom::dot_in(s), Atom::id(s)}, {Atom::merge(s)}})},
         {Rat(-1), strand}}));
    out.push_back(make_relation(
        "counit-right(" + s + ")", "unit",
        {{Rat(1), Diagram(sys, {s}, {{Atom::id(s), Atom::dot_in(s)}, {Atom::merge(s)}})},
         {Rat(-1), strand}}));
    out.push_back(make_relation(
        "assoc-merge(" + s + ")", "frobenius",
        {{Rat(1),
          Diagram(sys, {s, s, s}, {{Atom::merge(s), Atom::id(s)}, {Atom::merge(s)}})},
         {Rat(-1),
          Diagram(sys, {s, s, s}, {{Atom::id(s), Atom::merge(s)}, {Atom::merge(s)}})}}));
    out.push_back(make_relation(
        "assoc-split(" + s + ")", "frobenius",
        {{Rat(1), Diagram(sys, {s}, {{Atom::split(s)}, {Atom::split(s), Atom::id(s)}})},
         {Rat(-1), Diagram(sys, {s}, {{Atom::split(s)}, {Atom::id(s), Atom::split(s)}})}}));
    Diagram merge_then_split(sys, {s, s}, {{Atom::merge(s)}, {Atom::split(s)}});
    out.push_back(make_relation(
        "frobenius-left(" + s + ")", "frobenius",
        {{Rat(1), merge_then_split},
         {Rat(-1), Diagram(sys, {s, s},
                           {{Atom::split(s), Atom::id(s)}, {Atom::id(s), Atom::merge(s)}})}}));
    out.push_back(make_relation(
        "frobenius-right(" + s + ")", "frobenius",
        {{Rat(1), merge_then_split},
         {Rat(-1), Diagram(sys, {s, s},
                           {{Atom::id(s), Atom::split(s)}, {Atom::merge(s), Atom::id(s)}})}}));
    out.push_back(make_relation(
        "needle(" + s + ")", "needle",
        {{Rat(1),
          Diagram(sys, {s}, {{Atom::split(s)}, {Atom::merge(s)}, {Atom::dot_out(s)}})}}));
  }
}

void polynomial_families(const CoxeterSystem& sys, const Realization& real,
                         std::vector<Relation>& out) {
  for (const auto& s : sys.labels()) {
    out.push_back(make_relation(
        "barbell(" + s + ")", "barbell",
        {{Rat(1), Diagram(sys, {}, {{Atom::dot_in(s)}, {Atom::dot_out(s)}})},
         {Rat(-1), Diagram(sys, {}, {{Atom::poly_box(real.alpha(s))}})}}));

    std::vector<Polynomial> probes;
    for (const auto& t : sys.labels()) probes.push_back(real.alpha(t));
    probes.push_back(real.alpha(s) * real.alpha(s));
    for (const auto& f : probes) {
      auto sf = reflect(real, s, f);
      auto df = demazure(real, s, f);
      std::vector<RelationTerm> terms;
      terms.push_back({Rat(1), Diagram(sys, {s}, {{Atom::poly_box(f), Atom::id(s)}})});
      terms.push_back({Rat(-1), Diagram(sys, {s}, {{Atom::id(s), Atom::poly_box(sf)}})});
      if (!df.is_zero())
        terms.push_back({Rat(-1), Diagram(sys, {s},
                                          {{Atom::dot_out(s)},
                                           {Atom::poly_box(df)},
                                           {Atom::dot_in(s)}})});
      out.push_back(make_relation("forcing(" + s + "; " + f.to_string() + ")", "forcing",
                                  std::move(terms)));
    }
  }
}

void pair_families(const CoxeterSystem& sys, std::vector<Relation>& out) {
  for (auto [i, j] : finite_pairs(sys)) {
    const auto& a = sys.labels()[i];
    const auto& b = sys.labels()[j];
    int m = sys.bond(i, j);
    // The color whose strand is duplicated: the last letter of the
    // vertex's top word.
    const std::string& e = (m % 2 == 0) ? a : b;

    auto bot = alternating(a, b, m);
    auto vtop = alternating(b, a, m);
    std::vector<Atom> lhs2 = id_atoms({vtop.begin(), vtop.end() - 1});
    lhs2.push_back(Atom::split(e));
    Diagram assoc_lhs(sys, bot, {{Atom::vertex(a, b)}, std::move(lhs2)});
    std::vector<Atom> rhs1{Atom::split(a)};
    for (size_t q = 1; q < bot.size(); ++q) rhs1.push_back(Atom::id(bot[q]));
    Diagram assoc_rhs(sys, bot,
                      {std::move(rhs1),
                       {Atom::id(a), Atom::vertex(a, b)},
                       {Atom::vertex(a, b), Atom::id(e)}});
    out.push_back(make_relation("two-color-assoc(" + a + "," + b + ")", "two-color-assoc",
                                {{Rat(1), std::move(assoc_lhs)}, {Rat(-1), std::move(assoc_rhs)}}));

    // One-click rotation: bending the leading strand up on the left of
    // one vertex equals bending a trailing strand up on the right of the
    // color-swapped vertex.
    auto w = alternating(b, a, m - 1);
    std::vector<Atom> l1{Atom::dot_in(a)};
    auto wi = id_atoms(w);
    l1.insert(l1.end(), wi.begin(), wi.end());
    std::vector<Atom> l2{Atom::split(a)};
    l2.insert(l2.end(), wi.begin(), wi.end());
    Diagram rot_left(sys, w, {std::move(l1), std::move(l2), {Atom::id(a), Atom::vertex(a, b)}});
    std::vector<Atom> r1 = wi;
    r1.push_back(Atom::dot_in(e));
    std::vector<Atom> r2 = wi;
    r2.push_back(Atom::split(e));
    Diagram rot_right(sys, w,
                      {std::move(r1), std::move(r2), {Atom::vertex(b, a), Atom::id(e)}});
    out.push_back(make_relation("cyclicity(" + a + "," + b + ")", "cyclicity",
                                {{Rat(1), std::move(rot_left)}, {Rat(-1), std::move(rot_right)}}));
  }
}

}  // namespace

Relation make_relation(std::string name, std::string family, std::vector<RelationTerm> terms) {
  if (name.empty()) throw error("relation needs a name");
  if (terms.empty()) throw error("relation '" + name + "' has no terms");
  for (const auto& t : terms)
    if (t.scalar == 0) throw error("relation '" + name + "' has a zero scalar");
  const auto& first = terms.front().diagram;
  for (const auto& t : terms) {
    if (!t.diagram.system().same(first.system()))
      throw error("relation '" + name + "' mixes systems");
    if (t.diagram.bottom() != first.bottom() || t.diagram.top() != first.top())
      throw error("relation '" + name + "' has terms with different boundaries: '" +
                  word_string(first.bottom()) + "' -> '" + word_string(first.top()) +
                  "' vs '" + word_string(t.diagram.bottom()) + "' -> '" +
                  word_string(t.diagram.top()) + "'");
  }
  return Relation{std::move(name), std::move(family), std::move(terms)};
}

std::vector<Relation> build_catalog(const CoxeterSystem& sys, const Realization& real) {
  if (!real.valid()) throw error("catalog needs a realization");
  if (!real.system().same(sys)) throw error("realization belongs to a different system");
  std::vector<Relation> out;
  one_color_families(sys, out);
  polynomial_families(sys, real, out);
  pair_families(sys, out);
  return out;
}

std::vector<Relation> build_catalog(const CoxeterSystem& sys) {
  if (!sys.valid()) throw error("catalog needs a Coxeter system");
  std::vector<Relation> out;
  one_color_families(sys, out);
  pair_families(sys, out);
  return out;
}

HomogeneityEntry check_homogeneity(const Relation& rel, const DegreeAssignment& a) {
  HomogeneityEntry e;
  e.relation = rel.name;
  std::vector<GroupElement> degs;
  for (const auto& t : rel.terms) degs.push_back(degree(t.diagram, a));
  e.homogeneous = std::all_of(degs.begin(), degs.end(),
                              [&](const GroupElement& d) { return d == degs.front(); });
  if (e.homogeneous) {
    e.degree = degs.front();
  } else {
    for (size_t k = 0; k < degs.size(); ++k) {
      bool seen = false;
      for (size_t q = 0; q < k; ++q)
        if (degs[q] == degs[k]) seen = true;
      if (!seen) e.witnesses.push_back({"term " + std::to_string(k), degs[k].to_string()});
    }
  }
  return e;
}

std::vector<JwTerm> jw_terms(const std::string& s, const std::string& t, int m) {
  if (s == t) throw error("idempotent terms need two distinct colors");
  std::vector<JwTerm> out;
  for (auto& match : crossingless_matchings(m)) {
    JwTerm term;
    term.cups = match.cups();
    term.caps = match.caps();
    term.matching = std::move(match);
    out.push_back(std::move(term));
  }
  return out;
}

bool jw_degree_check(const std::string& s, const std::string& t, int m,
                     const DegreeAssignment& a) {
  auto terms = jw_terms(s, t, m);
  bool need_delta = std::any_of(terms.begin(), terms.end(),
                                [](const JwTerm& jt) { return jt.cups + jt.caps > 0; });
  if (!need_delta) return true;
  auto d1 = a.f_of(t) - a.g_of(s);
  auto d2 = a.f_of(s) - a.g_of(t);
  if (!(d1 == d2))
    throw error("cup degree ill-defined for (" + s + "," + t + "): f_" + t + " - g_" + s +
                " = " + d1.to_string() + " but f_" + s + " - g_" + t + " = " + d2.to_string());
  return std::all_of(terms.begin(), terms.end(), [&](const JwTerm& jt) {
    return (d1.scaled(Int(static_cast<long>(jt.cups))) -
            d1.scaled(Int(static_cast<long>(jt.caps))))
        .is_zero();
  });
}

bool HomogeneityReport::all_homogeneous() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const HomogeneityEntry& e) { return e.homogeneous; });
}

std::string HomogeneityReport::to_string() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    if (e.homogeneous) {
      os << "ok   " << e.relation;
      if (e.degree) os << "  degree " << e.degree->to_string();
      os << "\n";
    } else {
      os << "FAIL " << e.relation << "\n";
      for (const auto& w : e.witnesses) os << "     " << w.term << ": " << w.degree << "\n";
    }
  }
  return os.str();
}

HomogeneityReport verify_all(const CoxeterSystem& sys, const Realization& real,
                             const DegreeAssignment& a, const std::vector<Relation>& extra) {
  HomogeneityReport rep;
  auto catalog = build_catalog(sys, real);
  catalog.insert(catalog.end(), extra.begin(), extra.end());
  for (const auto& rel : catalog) {
    try {
      rep.entries.push_back(check_homogeneity(rel, a));
    } catch (const inhomogeneous_error& ex) {
      HomogeneityEntry e;
      e.relation = rel.name;
      e.homogeneous = false;
      e.witnesses.push_back({"polynomial box", ex.degree_a});
      e.witnesses.push_back({"polynomial box", ex.degree_b});
      rep.entries.push_back(std::move(e));
    }
  }

  const auto& labels = sys.labels();
  for (size_t i = 0; i < labels.size(); ++i)
    for (size_t j = i + 1; j < labels.size(); ++j) {
      if (!finite_bond(sys.bond(i, j))) continue;
      HomogeneityEntry e;
      e.relation = "jones-wenzl(" + labels[i] + "," + labels[j] + ")";
      try {
        e.homogeneous = jw_degree_check(labels[i], labels[j], sys.bond(i, j), a);
        if (e.homogeneous) e.degree = a.group().zero();
      } catch (const error& ex) {
        e.homogeneous = false;
        e.witnesses.push_back({"cup degree", ex.what()});
      }
      rep.entries.push_back(std::move(e));
    }

  for (auto [i, j] : finite_pairs(sys)) {
    const auto& ca = labels[i];
    const auto& cb = labels[j];
    int m = sys.bond(i, j);
    HomogeneityEntry e;
    e.relation = "telescoping(" + ca + "," + cb + ")";
    auto vdeg = a.atom_degree(Atom::vertex(ca, cb));
    auto wdiff = word_weight(a, alternating(ca, cb, m)) - word_weight(a, alternating(cb, ca, m));
    e.homogeneous = vdeg == wdiff;
    if (e.homogeneous) {
      e.degree = vdeg;
    } else {
      e.witnesses.push_back({"vertex degree", vdeg.to_string()});
      e.witnesses.push_back({"boundary weight difference", wdiff.to_string()});
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

IntMatrix constraint_lattice(const ConstraintSystem& cs) { return hermite_normal_form(cs.rows); }

namespace {

// Column layout shared by the degree and scalar extractions: interleaved
// per-color dot unknowns, one unknown per ordered finite pair, then one
// per basis variable (or the grading-group coordinates in vg mode).
struct FormalLayout {
  CoxeterSystem sys;
  std::vector<std::pair<size_t, size_t>> pairs;
  std::map<std::string, size_t> color_of;
  std::map<std::pair<std::string, std::string>, size_t> pair_col;
  std::map<std::string, size_t> var_col;  // realization mode
  const VGrading* vg = nullptr;           // vg mode
  size_t tail_offset = 0;                 // first column after f/g + pairs
  size_t width = 0;
  std::vector<std::string> names;
};

FormalLayout make_layout(const CoxeterSystem& sys, const Realization* real, const VGrading* vg,
                         const char* dot_in_name, const char* dot_out_name,
                         const char* pair_name, const char* var_name) {
  FormalLayout lay;
  lay.sys = sys;
  lay.pairs = finite_pairs(sys);
  const auto& labels = sys.labels();
  for (size_t i = 0; i < labels.size(); ++i) {
    lay.color_of[labels[i]] = i;
    lay.names.push_back(dot_in_name + ("_" + labels[i]));
    lay.names.push_back(dot_out_name + ("_" + labels[i]));
  }
  for (auto [i, j] : lay.pairs) {
    lay.pair_col[{labels[i], labels[j]}] = lay.names.size();
    lay.names.push_back(pair_name + ("_" + labels[i] + "_" + labels[j]));
  }
  lay.tail_offset = lay.names.size();
  if (vg) {
    lay.vg = vg;
    for (const auto& gn : vg->group.gen_names()) lay.names.push_back(gn);
  } else if (real) {
    for (const auto& v : real->basis()) {
      lay.var_col[v] = lay.names.size();
      lay.names.push_back(var_name + ("_" + v));
    }
  }
  lay.width = lay.names.size();
  return lay;
}

std::vector<Int> monomial_vector(const FormalLayout& lay, const Monomial& m) {
  std::vector<Int> v(lay.width, Int(0));
  for (const auto& [var, e] : m) {
    if (lay.vg) {
      auto it = lay.vg->deg_basis.find(var);
      if (it == lay.vg->deg_basis.end())
        throw error("variable '" + var + "' has no degree in the grading group");
      const auto& coeffs = it->second.coeffs();
      for (size_t j = 0; j < coeffs.size(); ++j)
        v[lay.tail_offset + j] += coeffs[j] * Int(e);
    } else {
      auto it = lay.var_col.find(var);
      if (it == lay.var_col.end())
        throw error("variable '" + var + "' is not a basis variable");
      v[it->second] += Int(e);
    }
  }
  return v;
}

void add_vec(std::vector<Int>& acc, const std::vector<Int>& v, int sign) {
  for (size_t k = 0; k < acc.size(); ++k) acc[k] += sign * v[k];
}

// Formal degree of one term; box side-conditions are appended as rows.
std::vector<Int> term_vector(const FormalLayout& lay, const Diagram& d,
                             const std::string& source, IntMatrix& rows,
                             std::vector<std::string>& sources) {
  std::vector<Int> acc(lay.width, Int(0));
  for (const auto& slice : d.slices())
    for (const auto& atom : slice) {
      switch (atom.kind) {
        case Atom::Kind::Id:
          break;
        case Atom::Kind::DotIn:
          acc[2 * lay.color_of.at(atom.c1)] += 1;
          break;
        case Atom::Kind::DotOut:
          acc[2 * lay.color_of.at(atom.c1) + 1] += 1;
          break;
        case Atom::Kind::Split:
          acc[2 * lay.color_of.at(atom.c1) + 1] -= 1;
          break;
        case Atom::Kind::Merge:
          acc[2 * lay.color_of.at(atom.c1)] -= 1;
          break;
        case Atom::Kind::Vertex:
          acc[lay.pair_col.at({atom.c1, atom.c2})] += 1;
          break;
        case Atom::Kind::PolyBox: {
          if (atom.poly.is_zero()) throw error("zero polynomial box in '" + source + "'");
          bool first = true;
          std::vector<Int> box;
          for (const auto& [mono, c] : atom.poly.terms()) {
            auto mv = monomial_vector(lay, mono);
            if (first) {
              box = mv;
              first = false;
            } else {
              add_vec(mv, box, -1);
              rows.append_row(mv);
              sources.push_back(source + " [box homogeneity]");
            }
          }
          add_vec(acc, box, 1);
          break;
        }
      }
    }
  return acc;
}

ConstraintSystem extract_constraints(const FormalLayout& lay,
                                     const std::vector<Relation>& catalog) {
  ConstraintSystem cs;
  cs.unknowns = lay.names;
  cs.rows = IntMatrix(0, lay.width);
  for (const auto& rel : catalog) {
    std::vector<std::vector<Int>> tvs;
    for (const auto& t : rel.terms)
      tvs.push_back(term_vector(lay, t.diagram, rel.name, cs.rows, cs.sources));
    for (size_t k = 1; k < tvs.size(); ++k) {
      auto row = tvs[k];
      add_vec(row, tvs[0], -1);
      cs.rows.append_row(row);
      cs.sources.push_back(rel.name);
    }
  }
  return cs;
}

DeriveResult derive_core(const CoxeterSystem& sys, const Realization* real, const VGrading* vg) {
  if (vg) {
    auto report = validate_v_grading(*real, *vg);
    if (!report.ok) throw error("variable grading is invalid:\n" + report.to_string());
  }
  if (!real) {
    const auto& labels = sys.labels();
    for (size_t i = 0; i < labels.size(); ++i)
      for (size_t j = i + 1; j < labels.size(); ++j)
        if (!finite_bond(sys.bond(i, j)))
          throw error("group-level derivation needs finite bond orders; pair (" + labels[i] +
                      "," + labels[j] +
                      ") has an infinite bond — supply a realization so polynomial forcing "
                      "can constrain it");
  }
  auto catalog = real ? build_catalog(sys, *real) : build_catalog(sys);
  auto lay = make_layout(sys, real, vg, "f", "g", "h", "d");

  DeriveResult res;
  res.constraints = extract_constraints(lay, catalog);
  if (!real) {
    // Without polynomials the catalog never compares the two dot pairs of
    // a pair of colors; the cup-degree obligation of the idempotent terms
    // (well-definedness of f_t - g_s = f_s - g_t) supplies those rows.
    const auto& labels = sys.labels();
    for (size_t i = 0; i < labels.size(); ++i)
      for (size_t j = i + 1; j < labels.size(); ++j) {
        int m = sys.bond(i, j);
        if (!finite_bond(m) || m < 3) continue;
        std::vector<Int> row(lay.width, Int(0));
        row[2 * i] += 1;
        row[2 * i + 1] += 1;
        row[2 * j] -= 1;
        row[2 * j + 1] -= 1;
        res.constraints.rows.append_row(row);
        res.constraints.sources.push_back("jones-wenzl(" + labels[i] + "," + labels[j] +
                                          ") [cup degree]");
      }
  }

  // Full lattice: extracted rows plus (vg mode) the grading group's own
  // relators on the tail columns.
  IntMatrix lattice = res.constraints.rows;
  size_t n2 = 2 * sys.rank();
  size_t np = lay.pairs.size();
  if (vg) {
    const IntMatrix& grels = vg->group.relators();
    for (size_t r = 0; r < grels.rows(); ++r) {
      std::vector<Int> row(lay.width, Int(0));
      for (size_t j = 0; j < grels.cols(); ++j) row[lay.tail_offset + j] = grels.at(r, j);
      lattice.append_row(row);
    }
  }

  // Eliminated block: the pair unknowns, plus the variable unknowns in
  // realization mode.  Kept: dots (and the grading group in vg mode).
  std::vector<size_t> elim_cols, kept_cols;
  for (size_t k = 0; k < np; ++k) elim_cols.push_back(n2 + k);
  if (!vg)
    for (size_t k = lay.tail_offset; k < lay.width; ++k) elim_cols.push_back(k);
  for (size_t k = 0; k < n2; ++k) kept_cols.push_back(k);
  if (vg)
    for (size_t k = lay.tail_offset; k < lay.width; ++k) kept_cols.push_back(k);

  size_t ne = elim_cols.size(), nk = kept_cols.size();
  IntMatrix permuted(lattice.rows(), lay.width);
  for (size_t r = 0; r < lattice.rows(); ++r) {
    for (size_t k = 0; k < ne; ++k) permuted.at(r, k) = lattice.at(r, elim_cols[k]);
    for (size_t k = 0; k < nk; ++k) permuted.at(r, ne + k) = lattice.at(r, kept_cols[k]);
  }
  IntMatrix H = hermite_normal_form(permuted);

  std::vector<std::optional<size_t>> pivot_row(ne);
  IntMatrix kept_rows(0, nk);
  for (size_t r = 0; r < H.rows(); ++r) {
    size_t p = 0;
    while (p < H.cols() && H.at(r, p) == 0) ++p;
    if (p < ne) {
      pivot_row[p] = r;
    } else {
      std::vector<Int> row(nk, Int(0));
      for (size_t k = 0; k < nk; ++k) row[k] = H.at(r, ne + k);
      kept_rows.append_row(row);
    }
  }
  for (size_t k = 0; k < ne; ++k) {
    if (!pivot_row[k])
      throw error("constraints do not determine '" + lay.names[elim_cols[k]] + "'");
    if (H.at(*pivot_row[k], k) != 1)
      throw error("constraints pin '" + lay.names[elim_cols[k]] +
                  "' only up to a finite ambiguity (pivot " +
                  H.at(*pivot_row[k], k).get_str() + ")");
  }
  // With every eliminated column on a unit pivot, the form's above-pivot
  // reduction has cleared the rest of the block, so each pivot row reads
  // off the eliminated unknown over the kept columns directly.
  std::vector<std::vector<Int>> elim_expr(ne);
  for (size_t k = 0; k < ne; ++k) {
    size_t r = *pivot_row[k];
    for (size_t q = 0; q < ne; ++q)
      if (q != k && H.at(r, q) != 0)
        throw error("internal: unit-pivot elimination left a mixed row");
    std::vector<Int> expr(nk, Int(0));
    for (size_t q = 0; q < nk; ++q) expr[q] = -H.at(r, ne + q);
    elim_expr[k] = std::move(expr);
  }

  std::vector<std::string> kept_names;
  for (size_t k : kept_cols) kept_names.push_back(lay.names[k]);
  res.group = presented_group(kept_names, kept_rows);

  const auto& labels = sys.labels();
  std::map<std::string, GroupElement> f, g, dv;
  for (size_t i = 0; i < labels.size(); ++i) {
    f.emplace(labels[i], res.group.gen(2 * i));
    g.emplace(labels[i], res.group.gen(2 * i + 1));
  }
  if (vg) {
    for (const auto& [v, dEl] : vg->deg_basis) {
      std::vector<Int> x(nk, Int(0));
      for (size_t j = 0; j < dEl.coeffs().size(); ++j) x[n2 + j] = dEl.coeffs()[j];
      dv.emplace(v, res.group.element(std::move(x)));
    }
  } else if (real) {
    for (const auto& v : real->basis())
      dv.emplace(v, res.group.element(elim_expr[np + (lay.var_col.at(v) - lay.tail_offset)]));
  }
  res.assignment = make_assignment(sys, res.group, f, g, dv);

  for (size_t k = 0; k < np; ++k) {
    auto [i, j] = lay.pairs[k];
    res.vertex_degrees.emplace(std::make_pair(labels[i], labels[j]),
                               res.group.element(elim_expr[k]));
  }

  // The derived group must still collapse onto counting every dot as one
  // degree; losing that means the catalog itself is broken.
  if (!vg) {
    try {
      auto z = AbGroup::free_group({"n"});
      std::vector<GroupElement> ones(res.group.gen_count(), z.gen(0));
      hom(res.group, z, std::move(ones));
    } catch (const error& ex) {
      throw error(std::string("derived lattice does not refine the single-integer degrees: ") +
                  ex.what());
    }
  }

  auto reference =
      vg ? general_grading(sys, *real, *vg) : universal_lambda(sys);
  const AbGroup& ref = reference.group();
  if (ref.gen_count() != res.group.gen_count())
    throw error("internal: derived and reference generator lists differ");
  std::vector<GroupElement> fwd_imgs, bwd_imgs;
  for (size_t k = 0; k < res.group.gen_count(); ++k) {
    fwd_imgs.push_back(res.group.gen(k));
    bwd_imgs.push_back(ref.gen(k));
  }
  try {
    res.certificate.forward = hom(ref, res.group, std::move(fwd_imgs));
    res.certificate.backward = hom(res.group, ref, std::move(bwd_imgs));
  } catch (const error& ex) {
    throw error(std::string("derived group is not isomorphic to the reference target: ") +
                ex.what());
  }
  res.certificate.mutually_inverse = true;
  for (size_t k = 0; k < ref.gen_count(); ++k) {
    if (!(res.certificate.backward.apply(res.certificate.forward.apply(ref.gen(k))) ==
          ref.gen(k)))
      res.certificate.mutually_inverse = false;
    if (!(res.certificate.forward.apply(res.certificate.backward.apply(res.group.gen(k))) ==
          res.group.gen(k)))
      res.certificate.mutually_inverse = false;
  }
  res.certificate.rank_derived = res.group.free_rank();
  res.certificate.rank_reference = ref.free_rank();
  res.certificate.invariants_derived = res.group.invariant_factors();
  res.certificate.invariants_reference = ref.invariant_factors();
  return res;
}

}  // namespace

DeriveResult derive_universal(const CoxeterSystem& sys, const Realization& real) {
  return derive_core(sys, &real, nullptr);
}

DeriveResult derive_universal(const CoxeterSystem& sys) { return derive_core(sys, nullptr, nullptr); }

DeriveResult derive_universal(const CoxeterSystem& sys, const Realization& real,
                              const VGrading& vg) {
  return derive_core(sys, &real, &vg);
}

ConstraintSystem derive_scalar_constraints(const CoxeterSystem& sys, const Realization& real) {
  auto catalog = build_catalog(sys, real);
  auto lay = make_layout(sys, &real, nullptr, "k", "l", "s", "n");

  // Independent multiplicative walk, in exponent notation: a term's
  // scalar under rescaling is the product over its atoms of the per-kind
  // scalars; a relation survives iff all terms scale identically, and a
  // box survives iff all its monomials do.
  ConstraintSystem cs;
  cs.unknowns = lay.names;
  cs.rows = IntMatrix(0, lay.width);
  auto monomial_exponents = [&](const Monomial& m) {
    std::vector<Int> v(lay.width, Int(0));
    for (const auto& [var, e] : m) v[lay.var_col.at(var)] += Int(e);
    return v;
  };
  auto term_exponents = [&](const Diagram& d, const std::string& source) {
    std::vector<Int> acc(lay.width, Int(0));
    for (const auto& slice : d.slices())
      for (const auto& atom : slice) {
        switch (atom.kind) {
          case Atom::Kind::Id:
            break;
          case Atom::Kind::DotIn:
            acc[2 * lay.color_of.at(atom.c1)] += 1;
            break;
          case Atom::Kind::DotOut:
            acc[2 * lay.color_of.at(atom.c1) + 1] += 1;
            break;
          case Atom::Kind::Split:
            acc[2 * lay.color_of.at(atom.c1) + 1] -= 1;
            break;
          case Atom::Kind::Merge:
            acc[2 * lay.color_of.at(atom.c1)] -= 1;
            break;
          case Atom::Kind::Vertex:
            acc[lay.pair_col.at({atom.c1, atom.c2})] += 1;
            break;
          case Atom::Kind::PolyBox: {
            bool first = true;
            std::vector<Int> box;
            for (const auto& [mono, c] : atom.poly.terms()) {
              auto mv = monomial_exponents(mono);
              if (first) {
                box = mv;
                first = false;
              } else {
                add_vec(mv, box, -1);
                cs.rows.append_row(mv);
                cs.sources.push_back(source + " [box rescaling]");
              }
            }
            add_vec(acc, box, 1);
            break;
          }
        }
      }
    return acc;
  };
  for (const auto& rel : catalog) {
    std::vector<std::vector<Int>> tvs;
    for (const auto& t : rel.terms) tvs.push_back(term_exponents(t.diagram, rel.name));
    for (size_t k = 1; k < tvs.size(); ++k) {
      auto row = tvs[k];
      add_vec(row, tvs[0], -1);
      cs.rows.append_row(row);
      cs.sources.push_back(rel.name);
    }
  }
  return cs;
}

}  // namespace hcg
