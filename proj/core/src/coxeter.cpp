#include "hcg/coxeter.hpp"

#include <sstream>
#include <unordered_map>

namespace hcg {

struct CoxeterSystem::Data {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> m;
  std::unordered_map<std::string, size_t> index;
};

size_t CoxeterSystem::rank() const {
  if (!d_) throw error("use of empty CoxeterSystem");
  return d_->labels.size();
}

const std::vector<std::string>& CoxeterSystem::labels() const {
  if (!d_) throw error("use of empty CoxeterSystem");
  return d_->labels;
}

size_t CoxeterSystem::index(const std::string& label) const {
  if (!d_) throw error("use of empty CoxeterSystem");
  auto it = d_->index.find(label);
  if (it == d_->index.end()) throw error("unknown generator label: '" + label + "'");
  return it->second;
}

bool CoxeterSystem::has(const std::string& label) const {
  return d_ && d_->index.count(label) > 0;
}

int CoxeterSystem::bond(size_t i, size_t j) const {
  if (i >= rank() || j >= rank()) throw error("generator index out of range");
  return d_->m[i][j];
}

int CoxeterSystem::bond(const std::string& a, const std::string& b) const {
  return bond(index(a), index(b));
}

bool CoxeterSystem::same(const CoxeterSystem& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  return d_->labels == o.d_->labels && d_->m == o.d_->m;
}

CoxeterSystem new_coxeter_system(std::vector<std::string> labels,
                                 std::vector<std::vector<int>> coxeter_matrix) {
  size_t n = labels.size();
  if (n == 0) throw error("a Coxeter system needs at least one generator");
  if (coxeter_matrix.size() != n) throw error("Coxeter matrix must be square of the rank");
  auto d = std::make_shared<CoxeterSystem::Data>();
  for (size_t i = 0; i < n; ++i) {
    if (labels[i].empty()) throw error("empty generator label");
    if (!d->index.emplace(labels[i], i).second)
      throw error("duplicate generator label: '" + labels[i] + "'");
  }
  for (size_t i = 0; i < n; ++i) {
    if (coxeter_matrix[i].size() != n) throw error("Coxeter matrix must be square of the rank");
    for (size_t j = 0; j < n; ++j) {
      int m = coxeter_matrix[i][j];
      if (i == j) {
        if (m != 1) throw error("Coxeter matrix diagonal must be 1");
      } else {
        if (m != kInfiniteBond && m < 2)
          throw error("off-diagonal Coxeter matrix entries must be >= 2 or infinite");
        if (m != coxeter_matrix[j][i]) throw error("Coxeter matrix must be symmetric");
      }
    }
  }
  d->labels = std::move(labels);
  d->m = std::move(coxeter_matrix);
  CoxeterSystem s;
  s.d_ = std::move(d);
  return s;
}

std::vector<std::vector<std::string>> connected_components(const CoxeterSystem& sys) {
  size_t n = sys.rank();
  std::vector<size_t> comp(n, n);
  size_t ncomp = 0;
  for (size_t start = 0; start < n; ++start) {
    if (comp[start] != n) continue;
    // Flood from `start` along non-commuting pairs.
    std::vector<size_t> stack{start};
    comp[start] = ncomp;
    while (!stack.empty()) {
      size_t i = stack.back();
      stack.pop_back();
      for (size_t j = 0; j < n; ++j)
        if (comp[j] == n && sys.bond(i, j) != 2 && i != j) {
          comp[j] = ncomp;
          stack.push_back(j);
        }
    }
    ++ncomp;
  }
  std::vector<std::vector<std::string>> out(ncomp);
  for (size_t i = 0; i < n; ++i) out[comp[i]].push_back(sys.labels()[i]);
  return out;
}

struct Realization::Data {
  CoxeterSystem sys;
  std::vector<std::string> basis;
  std::map<std::string, Polynomial> alpha;
  std::map<std::string, std::map<std::string, Rat>> pairing;
};

const CoxeterSystem& Realization::system() const {
  if (!d_) throw error("use of empty Realization");
  return d_->sys;
}

const std::vector<std::string>& Realization::basis() const {
  if (!d_) throw error("use of empty Realization");
  return d_->basis;
}

const Polynomial& Realization::alpha(const std::string& label) const {
  if (!d_) throw error("use of empty Realization");
  auto it = d_->alpha.find(label);
  if (it == d_->alpha.end()) throw error("unknown generator label: '" + label + "'");
  return it->second;
}

const Rat& Realization::pairing(const std::string& label, const std::string& var) const {
  if (!d_) throw error("use of empty Realization");
  auto it = d_->pairing.find(label);
  if (it == d_->pairing.end()) throw error("unknown generator label: '" + label + "'");
  auto jt = it->second.find(var);
  if (jt == it->second.end()) throw error("unknown basis variable: '" + var + "'");
  return jt->second;
}

Rat Realization::pairing_linear(const std::string& label, const Polynomial& p) const {
  Rat acc(0);
  for (const auto& [m, c] : p.terms()) {
    if (m.empty()) continue;  // constants pair to zero
    if (m.size() != 1 || m.begin()->second != 1)
      throw error("pairing applied to a non-linear polynomial");
    acc += c * pairing(label, m.begin()->first);
  }
  acc.canonicalize();
  return acc;
}

Rat Realization::cartan(const std::string& a, const std::string& b) const {
  return pairing_linear(a, alpha(b));
}

Realization root_realization(const CoxeterSystem& sys,
                             const std::optional<std::vector<std::vector<Rat>>>& cartan) {
  if (!sys.valid()) throw error("root_realization needs a system");
  size_t n = sys.rank();
  std::vector<std::vector<Rat>> c;
  if (cartan) {
    c = *cartan;
    if (c.size() != n) throw error("Cartan matrix must be square of the rank");
    for (const auto& row : c)
      if (row.size() != n) throw error("Cartan matrix must be square of the rank");
  } else {
    c.assign(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (i == j) {
          c[i][j] = 2;
          continue;
        }
        int m = sys.bond(i, j);
        bool first = i < j;  // the "-1" side of an asymmetric default
        switch (m) {
          case 2: c[i][j] = 0; break;
          case 3: c[i][j] = -1; break;
          case 4: c[i][j] = first ? Rat(-1) : Rat(-2); break;
          case 6: c[i][j] = first ? Rat(-1) : Rat(-3); break;
          default:
            throw error(std::string("no default Cartan entry for bond order ") +
                        (finite_bond(m) ? std::to_string(m) : "infinity") +
                        "; supply an explicit Cartan matrix");
        }
      }
  }
  for (size_t i = 0; i < n; ++i) {
    if (c[i][i] != 2) throw error("Cartan diagonal must be 2");
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      bool commute = sys.bond(i, j) == 2;
      if (commute && c[i][j] != 0)
        throw error("Cartan entry for a commuting pair must be 0 (" + sys.labels()[i] + "," +
                    sys.labels()[j] + ")");
      if (!commute && c[i][j] == 0)
        throw error("Cartan entry for a non-commuting pair must be nonzero (" + sys.labels()[i] +
                    "," + sys.labels()[j] + ")");
    }
  }
  auto d = std::make_shared<Realization::Data>();
  d->sys = sys;
  for (size_t i = 0; i < n; ++i) d->basis.push_back("a_" + sys.labels()[i]);
  for (size_t i = 0; i < n; ++i) {
    const std::string& li = sys.labels()[i];
    d->alpha.emplace(li, Polynomial::variable(d->basis[i]));
    std::map<std::string, Rat> row;
    for (size_t j = 0; j < n; ++j) row.emplace(d->basis[j], c[i][j]);
    d->pairing.emplace(li, std::move(row));
  }
  Realization r;
  r.d_ = std::move(d);
  return r;
}

namespace {

// Substitution map of the reflection along `label`.
std::map<std::string, Polynomial> reflection_map(const Realization& real,
                                                 const std::string& label) {
  std::map<std::string, Polynomial> sub;
  const Polynomial& al = real.alpha(label);
  for (const std::string& v : real.basis()) {
    const Rat& c = real.pairing(label, v);
    if (c == 0) continue;
    sub.emplace(v, Polynomial::variable(v) - al.scaled(c));
  }
  return sub;
}

void check_vars_known(const Realization& real, const Polynomial& p) {
  for (const std::string& v : p.variables()) {
    bool known = false;
    for (const std::string& b : real.basis())
      if (b == v) {
        known = true;
        break;
      }
    if (!known) throw error("polynomial uses unknown basis variable: '" + v + "'");
  }
}

}  // namespace

Polynomial reflect(const Realization& real, const std::string& label, const Polynomial& p) {
  check_vars_known(real, p);
  return p.substitute(reflection_map(real, label));
}

Polynomial demazure(const Realization& real, const std::string& label, const Polynomial& p) {
  Polynomial num = p - reflect(real, label, p);
  if (num.is_zero()) return num;
  return num.divide_exact(real.alpha(label));
}

std::string VGradingReport::to_string() const {
  std::ostringstream os;
  os << (ok ? "valid" : "invalid");
  for (const auto& e : entries)
    os << "\n  [" << (e.ok ? "ok" : "FAIL") << "] " << e.check
       << (e.detail.empty() ? "" : ": " + e.detail);
  return os.str();
}

VGradingReport validate_v_grading(const Realization& real, const VGrading& vg) {
  VGradingReport rep;
  auto add = [&](std::string check, bool ok, std::string detail) {
    rep.entries.push_back({std::move(check), ok, std::move(detail)});
    rep.ok = rep.ok && ok;
  };
  if (!vg.group.valid()) {
    add("group", false, "no grading group");
    return rep;
  }
  for (const std::string& v : real.basis()) {
    auto it = vg.deg_basis.find(v);
    if (it == vg.deg_basis.end()) {
      add("covers:" + v, false, "basis variable has no degree");
      continue;
    }
    if (!it->second.group().same(vg.group))
      add("degree-in-group:" + v, false, "degree lies in a different group");
  }
  if (!rep.ok) return rep;
  for (const std::string& l : real.system().labels()) {
    // alpha_l homogeneous?
    const Polynomial& al = real.alpha(l);
    bool homog = true;
    const GroupElement* first = nullptr;
    std::string fv;
    for (const auto& [m, c] : al.terms()) {
      if (m.size() != 1 || m.begin()->second != 1) {
        homog = false;
        add("alpha-homogeneous:" + l, false, "alpha is not a linear form");
        break;
      }
      const std::string& v = m.begin()->first;
      const GroupElement& dv = vg.deg_basis.at(v);
      if (!first) {
        first = &dv;
        fv = v;
      } else if (!(*first == dv)) {
        homog = false;
        add("alpha-homogeneous:" + l, false,
            "deg " + fv + " = " + first->to_string() + " but deg " + v + " = " + dv.to_string());
        break;
      }
    }
    if (homog) add("alpha-homogeneous:" + l, true, "");
    if (!homog) continue;
    // Reflection along l sends v to v - <alpha_l^v, v> alpha_l; that image
    // is homogeneous of degree deg v iff every variable left in it has
    // degree deg v.
    for (const std::string& v : real.basis()) {
      const Rat& cv = real.pairing(l, v);
      if (cv == 0) continue;
      const GroupElement& dv = vg.deg_basis.at(v);
      Polynomial image = Polynomial::variable(v) - real.alpha(l).scaled(cv);
      bool okv = true;
      std::string bad;
      for (const std::string& w : image.variables())
        if (!(vg.deg_basis.at(w) == dv)) {
          okv = false;
          bad = w;
          break;
        }
      if (okv)
        add("reflection-preserves:" + l + ":" + v, true, "");
      else
        add("reflection-preserves:" + l + ":" + v, false,
            "image carries " + bad + " of degree " + vg.deg_basis.at(bad).to_string() +
                " against deg " + v + " = " + dv.to_string());
    }
  }
  return rep;
}

GroupElement alpha_degree(const Realization& real, const VGrading& vg, const std::string& label) {
  const Polynomial& al = real.alpha(label);
  const GroupElement* deg = nullptr;
  std::string fv;
  for (const auto& [m, c] : al.terms()) {
    const std::string& v = m.begin()->first;
    auto it = vg.deg_basis.find(v);
    if (it == vg.deg_basis.end()) throw error("basis variable has no degree: '" + v + "'");
    if (!deg) {
      deg = &it->second;
      fv = v;
    } else if (!(*deg == it->second)) {
      throw inhomogeneous_error("alpha_" + label + " is not homogeneous", deg->to_string(),
                                it->second.to_string());
    }
  }
  if (!deg) throw error("alpha_" + label + " is zero");
  return *deg;
}

}  // namespace hcg
