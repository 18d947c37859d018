#include "hcg/abgroup.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace hcg {

struct AbGroup::Data {
  std::vector<std::string> gens;
  IntMatrix rels;  // one relator per row, cols == gens.size()
  SmithForm snf;   // of rels
  std::vector<Int> diag;  // padded to gens.size()
  size_t free_rank = 0;
  std::unordered_map<std::string, size_t> index;
};

AbGroup AbGroup::build(std::vector<std::string> gens, IntMatrix rels) {
  if (rels.rows() > 0 && rels.cols() != gens.size())
    throw error("relator width does not match generator count");
  if (rels.rows() == 0) rels = IntMatrix(0, gens.size());
  auto d = std::make_shared<Data>();
  d->gens = std::move(gens);
  for (size_t i = 0; i < d->gens.size(); ++i) {
    if (d->gens[i].empty()) throw error("empty generator name");
    if (!d->index.emplace(d->gens[i], i).second)
      throw error("duplicate generator name: '" + d->gens[i] + "'");
  }
  d->rels = std::move(rels);
  d->snf = smith_normal_form(d->rels);
  d->diag = d->snf.diagonal(d->gens.size());
  for (const Int& v : d->diag)
    if (v == 0) ++d->free_rank;
  AbGroup g;
  g.d_ = std::move(d);
  return g;
}

AbGroup AbGroup::free_group(std::vector<std::string> gen_names) {
  size_t n = gen_names.size();
  return build(std::move(gen_names), IntMatrix(0, n));
}

static const AbGroup::Data& deref(const std::shared_ptr<const AbGroup::Data>& d) {
  if (!d) throw error("use of empty AbGroup");
  return *d;
}

size_t AbGroup::gen_count() const { return deref(d_).gens.size(); }
const std::vector<std::string>& AbGroup::gen_names() const { return deref(d_).gens; }
const IntMatrix& AbGroup::relators() const { return deref(d_).rels; }
const std::vector<Int>& AbGroup::diag() const { return deref(d_).diag; }

std::vector<Int> AbGroup::invariant_factors() const {
  std::vector<Int> out;
  for (const Int& v : diag())
    if (v > 1) out.push_back(v);
  return out;
}

size_t AbGroup::free_rank() const { return deref(d_).free_rank; }

bool AbGroup::is_trivial() const { return free_rank() == 0 && invariant_factors().empty(); }

bool AbGroup::torsion_free() const { return invariant_factors().empty(); }

GroupElement AbGroup::zero() const {
  return GroupElement(*this, std::vector<Int>(gen_count(), Int(0)));
}

GroupElement AbGroup::gen(size_t i) const {
  if (i >= gen_count()) throw error("generator index out of range");
  std::vector<Int> x(gen_count(), Int(0));
  x[i] = 1;
  return GroupElement(*this, std::move(x));
}

size_t AbGroup::gen_index(const std::string& name) const {
  const auto& ix = deref(d_).index;
  auto it = ix.find(name);
  if (it == ix.end()) throw error("unknown generator name: '" + name + "'");
  return it->second;
}

GroupElement AbGroup::gen(const std::string& name) const { return gen(gen_index(name)); }

GroupElement AbGroup::element(std::vector<Int> coeffs) const {
  return GroupElement(*this, std::move(coeffs));
}

bool AbGroup::same(const AbGroup& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  return d_->gens == o.d_->gens && d_->rels == o.d_->rels;
}

std::string AbGroup::describe() const {
  std::ostringstream os;
  size_t fr = free_rank();
  auto tf = invariant_factors();
  if (fr == 0 && tf.empty()) return "0";
  bool first = true;
  if (fr > 0) {
    os << (fr == 1 ? "Z" : "Z^" + std::to_string(fr));
    first = false;
  }
  for (const Int& v : tf) {
    os << (first ? "" : " x ") << "Z/" << v.get_str();
    first = false;
  }
  return os.str();
}

std::vector<Int> AbGroup::canonical_coords(const std::vector<Int>& coeffs) const {
  const auto& d = deref(d_);
  if (coeffs.size() != d.gens.size()) throw error("coefficient vector has wrong length");
  size_t n = d.gens.size();
  // y = x * V, then reduce coordinate i modulo diag[i] where positive.
  std::vector<Int> y(n, Int(0));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i)
      if (coeffs[i] != 0) y[j] += coeffs[i] * d.snf.v.at(i, j);
  for (size_t i = 0; i < n; ++i)
    if (d.diag[i] > 0)
      mpz_fdiv_r(y[i].get_mpz_t(), y[i].get_mpz_t(), d.diag[i].get_mpz_t());
  return y;
}

GroupElement::GroupElement(AbGroup group, std::vector<Int> coeffs)
    : g_(std::move(group)), x_(std::move(coeffs)) {
  if (!g_.valid()) throw error("element of an empty AbGroup");
  if (x_.size() != g_.gen_count()) throw error("coefficient vector has wrong length");
}

bool GroupElement::is_zero() const {
  for (const Int& v : canonical())
    if (v != 0) return false;
  return true;
}

static void check_same_group(const GroupElement& a, const GroupElement& b) {
  if (!a.group().same(b.group())) throw error("elements belong to different groups");
}

GroupElement GroupElement::operator+(const GroupElement& o) const {
  check_same_group(*this, o);
  std::vector<Int> x = x_;
  for (size_t i = 0; i < x.size(); ++i) x[i] += o.x_[i];
  return GroupElement(g_, std::move(x));
}

GroupElement GroupElement::operator-(const GroupElement& o) const {
  check_same_group(*this, o);
  std::vector<Int> x = x_;
  for (size_t i = 0; i < x.size(); ++i) x[i] -= o.x_[i];
  return GroupElement(g_, std::move(x));
}

GroupElement GroupElement::operator-() const {
  std::vector<Int> x = x_;
  for (Int& v : x) v = -v;
  return GroupElement(g_, std::move(x));
}

GroupElement GroupElement::scaled(const Int& k) const {
  std::vector<Int> x = x_;
  for (Int& v : x) v *= k;
  return GroupElement(g_, std::move(x));
}

bool GroupElement::operator==(const GroupElement& o) const {
  check_same_group(*this, o);
  return canonical() == o.canonical();
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << "(";
  auto y = canonical();
  for (size_t i = 0; i < y.size(); ++i) os << (i ? "," : "") << y[i].get_str();
  os << ")";
  return os.str();
}

std::string GroupElement::expression() const {
  std::ostringstream os;
  bool first = true;
  const auto& names = g_.gen_names();
  for (size_t i = 0; i < x_.size(); ++i) {
    if (x_[i] == 0) continue;
    Int a = abs(x_[i]);
    if (first)
      os << (x_[i] < 0 ? "-" : "");
    else
      os << (x_[i] < 0 ? " - " : " + ");
    if (a != 1) os << a.get_str() << "*";
    os << names[i];
    first = false;
  }
  return first ? "0" : os.str();
}

AbGroup presented_group(std::vector<std::string> gen_names, IntMatrix relators) {
  return AbGroup::build(std::move(gen_names), std::move(relators));
}

AbGroup quotient(const AbGroup& g, const std::vector<GroupElement>& extra) {
  IntMatrix rels = g.relators();
  for (const auto& e : extra) {
    if (!e.group().same(g)) throw error("quotient element from a different group");
    rels.append_row(e.coeffs());
  }
  return presented_group(g.gen_names(), std::move(rels));
}

GroupElement Hom::apply(const GroupElement& e) const {
  if (!src_.valid()) throw error("use of empty Hom");
  if (!e.group().same(src_)) throw error("hom applied to element of a different group");
  GroupElement acc = dst_.zero();
  for (size_t i = 0; i < img_.size(); ++i)
    if (e.coeffs()[i] != 0) acc = acc + img_[i].scaled(e.coeffs()[i]);
  return acc;
}

Hom hom(const AbGroup& source, const AbGroup& target, std::vector<GroupElement> images) {
  if (images.size() != source.gen_count())
    throw error("hom needs one image per source generator");
  for (const auto& im : images)
    if (!im.group().same(target)) throw error("hom image lies in a different group");
  const IntMatrix& rels = source.relators();
  for (size_t r = 0; r < rels.rows(); ++r) {
    GroupElement acc = target.zero();
    for (size_t i = 0; i < source.gen_count(); ++i)
      if (rels.at(r, i) != 0) acc = acc + images[i].scaled(rels.at(r, i));
    if (!acc.is_zero())
      throw error("not a homomorphism: relator " + std::to_string(r) +
                  " maps to " + acc.to_string());
  }
  Hom h;
  h.src_ = source;
  h.dst_ = target;
  h.img_ = std::move(images);
  return h;
}

std::string GenCertificate::to_string() const {
  std::ostringstream os;
  os << (generates ? "generates" : "does not generate") << " (quotient diag:";
  for (const Int& v : quotient_diag) os << " " << v.get_str();
  os << "; free rank " << quotient_free_rank << ")";
  return os.str();
}

GenCertificate generates_whole_group(const AbGroup& g, const std::vector<GroupElement>& elems) {
  AbGroup q = quotient(g, elems);
  GenCertificate c;
  c.quotient_diag = q.diag();
  c.quotient_free_rank = q.free_rank();
  c.generates = q.is_trivial();
  return c;
}

}  // namespace hcg
