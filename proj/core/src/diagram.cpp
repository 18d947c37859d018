#include "hcg/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hcg {

Atom Atom::id(std::string c) { return Atom{Kind::Id, std::move(c), "", {}}; }
Atom Atom::dot_in(std::string c) { return Atom{Kind::DotIn, std::move(c), "", {}}; }
Atom Atom::dot_out(std::string c) { return Atom{Kind::DotOut, std::move(c), "", {}}; }
Atom Atom::split(std::string c) { return Atom{Kind::Split, std::move(c), "", {}}; }
Atom Atom::merge(std::string c) { return Atom{Kind::Merge, std::move(c), "", {}}; }
Atom Atom::vertex(std::string a, std::string b) {
  return Atom{Kind::Vertex, std::move(a), std::move(b), {}};
}
Atom Atom::poly_box(Polynomial p) { return Atom{Kind::PolyBox, "", "", std::move(p)}; }

namespace {

std::vector<std::string> alternating(const std::string& a, const std::string& b, int m) {
  std::vector<std::string> w;
  w.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) w.push_back(i % 2 == 0 ? a : b);
  return w;
}

int vertex_bond(const CoxeterSystem& sys, const Atom& at) {
  int m = sys.bond(at.c1, at.c2);
  if (!finite_bond(m))
    throw error("vertex(" + at.c1 + "," + at.c2 + ") needs a finite bond order");
  return m;
}

}  // namespace

std::vector<std::string> Atom::source(const CoxeterSystem& sys) const {
  switch (kind) {
    case Kind::Id: return {c1};
    case Kind::DotIn: return {};
    case Kind::DotOut: return {c1};
    case Kind::Split: return {c1};
    case Kind::Merge: return {c1, c1};
    case Kind::Vertex: return alternating(c1, c2, vertex_bond(sys, *this));
    case Kind::PolyBox: return {};
  }
  throw error("unreachable atom kind");
}

std::vector<std::string> Atom::target(const CoxeterSystem& sys) const {
  switch (kind) {
    case Kind::Id: return {c1};
    case Kind::DotIn: return {c1};
    case Kind::DotOut: return {};
    case Kind::Split: return {c1, c1};
    case Kind::Merge: return {c1};
    case Kind::Vertex: return alternating(c2, c1, vertex_bond(sys, *this));
    case Kind::PolyBox: return {};
  }
  throw error("unreachable atom kind");
}

std::string Atom::to_string() const {
  switch (kind) {
    case Kind::Id: return "id(" + c1 + ")";
    case Kind::DotIn: return "dot_in(" + c1 + ")";
    case Kind::DotOut: return "dot_out(" + c1 + ")";
    case Kind::Split: return "split(" + c1 + ")";
    case Kind::Merge: return "merge(" + c1 + ")";
    case Kind::Vertex: return "vertex(" + c1 + "," + c2 + ")";
    case Kind::PolyBox: return "poly{" + poly.to_string() + "}";
  }
  throw error("unreachable atom kind");
}

std::string word_string(const std::vector<std::string>& word) {
  std::ostringstream os;
  for (size_t i = 0; i < word.size(); ++i) os << (i ? " " : "") << word[i];
  return os.str();
}

namespace {

void check_atom(const CoxeterSystem& sys, const Atom& a, size_t slice, size_t pos) {
  auto where = [&]() {
    return " (slice " + std::to_string(slice) + ", position " + std::to_string(pos) + ")";
  };
  switch (a.kind) {
    case Atom::Kind::PolyBox:
      if (a.poly.is_zero()) throw error("poly box with zero polynomial" + where());
      return;
    case Atom::Kind::Vertex:
      if (!sys.has(a.c1) || !sys.has(a.c2))
        throw error("unknown color in " + a.to_string() + where());
      if (a.c1 == a.c2)
        throw error("vertex colors must differ" + where());
      vertex_bond(sys, a);  // throws on an infinite bond
      return;
    default:
      if (!sys.has(a.c1)) throw error("unknown color in " + a.to_string() + where());
      return;
  }
}

}  // namespace

Diagram::Diagram(CoxeterSystem sys, std::vector<std::string> bottom,
                 std::vector<std::vector<Atom>> slices)
    : sys_(std::move(sys)), bottom_(std::move(bottom)), slices_(std::move(slices)) {
  if (!sys_.valid()) throw error("diagram needs a Coxeter system");
  for (const auto& l : bottom_)
    if (!sys_.has(l)) throw error("unknown color in bottom word: '" + l + "'");
  std::vector<std::string> word = bottom_;
  for (size_t k = 0; k < slices_.size(); ++k) {
    std::vector<std::string> expect, next;
    for (size_t p = 0; p < slices_[k].size(); ++p) {
      const Atom& a = slices_[k][p];
      check_atom(sys_, a, k, p);
      auto src = a.source(sys_);
      expect.insert(expect.end(), src.begin(), src.end());
      auto tgt = a.target(sys_);
      next.insert(next.end(), tgt.begin(), tgt.end());
    }
    if (expect != word)
      throw error("slice " + std::to_string(k) + " reads '" + word_string(expect) +
                  "' but sits on '" + word_string(word) + "'");
    word = std::move(next);
  }
  top_ = std::move(word);
}

Diagram Diagram::identity(const CoxeterSystem& sys, std::vector<std::string> word) {
  return Diagram(sys, std::move(word), {});
}

Diagram Diagram::normalized() const {
  std::vector<std::vector<Atom>> kept;
  for (const auto& s : slices_) {
    bool all_id = std::all_of(s.begin(), s.end(),
                              [](const Atom& a) { return a.kind == Atom::Kind::Id; });
    if (!all_id) kept.push_back(s);
  }
  return Diagram(sys_, bottom_, std::move(kept));
}

bool Diagram::operator==(const Diagram& o) const {
  if (!sys_.valid() || !o.sys_.valid()) return sys_.valid() == o.sys_.valid();
  return sys_.same(o.sys_) && bottom_ == o.bottom_ && slices_ == o.slices_;
}

Diagram compose(const Diagram& a, const Diagram& b) {
  if (!a.system().same(b.system())) throw error("compose across different systems");
  if (a.top() != b.bottom())
    throw error("compose boundary mismatch: top is '" + word_string(a.top()) +
                "', next bottom is '" + word_string(b.bottom()) + "'");
  std::vector<std::vector<Atom>> slices = a.slices();
  slices.insert(slices.end(), b.slices().begin(), b.slices().end());
  return Diagram(a.system(), a.bottom(), std::move(slices));
}

Diagram tensor(const Diagram& a, const Diagram& b) {
  if (!a.system().same(b.system())) throw error("tensor across different systems");
  std::vector<std::string> bottom = a.bottom();
  bottom.insert(bottom.end(), b.bottom().begin(), b.bottom().end());
  size_t n = std::max(a.slices().size(), b.slices().size());
  std::vector<std::vector<Atom>> slices(n);
  auto ids = [](const std::vector<std::string>& word) {
    std::vector<Atom> s;
    s.reserve(word.size());
    for (const auto& l : word) s.push_back(Atom::id(l));
    return s;
  };
  for (size_t k = 0; k < n; ++k) {
    std::vector<Atom> s =
        k < a.slices().size() ? a.slices()[k] : ids(a.top());
    std::vector<Atom> sb =
        k < b.slices().size() ? b.slices()[k] : ids(b.top());
    s.insert(s.end(), sb.begin(), sb.end());
    slices[k] = std::move(s);
  }
  return Diagram(a.system(), std::move(bottom), std::move(slices));
}

namespace {

struct LineScanner {
  std::string line;
  size_t i = 0;
  size_t lineno = 0;

  void skip() {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  }
  bool done() {
    skip();
    return i >= line.size();
  }
  [[noreturn]] void fail(const std::string& what) {
    throw error("diagram parse error, line " + std::to_string(lineno) + ": " + what);
  }
  std::string ident() {
    skip();
    size_t start = i;
    auto ok = [&](char c, bool lead) {
      return c == '_' || std::isalpha(static_cast<unsigned char>(c)) ||
             (!lead && std::isdigit(static_cast<unsigned char>(c)));
    };
    if (i >= line.size() || !ok(line[i], true)) fail("expected a name");
    while (i < line.size() && ok(line[i], false)) ++i;
    return line.substr(start, i - start);
  }
  void expect(char c) {
    skip();
    if (i >= line.size() || line[i] != c)
      fail(std::string("expected '") + c + "'");
    ++i;
  }
  // Text up to the matching close brace (no nesting inside polynomials).
  std::string braced() {
    expect('{');
    size_t start = i;
    while (i < line.size() && line[i] != '}') ++i;
    if (i >= line.size()) fail("unterminated '{'");
    std::string inner = line.substr(start, i - start);
    ++i;
    return inner;
  }
};

Atom parse_atom(LineScanner& sc) {
  std::string name = sc.ident();
  if (name == "poly") {
    std::string body = sc.braced();
    try {
      return Atom::poly_box(parse_polynomial(body));
    } catch (const error& e) {
      sc.fail(e.what());
    }
  }
  sc.expect('(');
  std::string c1 = sc.ident();
  if (name == "vertex") {
    sc.expect(',');
    std::string c2 = sc.ident();
    sc.expect(')');
    return Atom::vertex(std::move(c1), std::move(c2));
  }
  sc.expect(')');
  if (name == "id") return Atom::id(std::move(c1));
  if (name == "dot_in") return Atom::dot_in(std::move(c1));
  if (name == "dot_out") return Atom::dot_out(std::move(c1));
  if (name == "split") return Atom::split(std::move(c1));
  if (name == "merge") return Atom::merge(std::move(c1));
  sc.fail("unknown atom '" + name + "'");
}

}  // namespace

Diagram parse_diagram(const CoxeterSystem& sys, const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  size_t lineno = 0;
  bool have_bottom = false;
  std::vector<std::string> bottom;
  std::vector<std::vector<Atom>> slices;
  std::optional<std::vector<std::string>> declared_top;
  while (std::getline(in, raw)) {
    ++lineno;
    LineScanner sc{raw, 0, lineno};
    if (sc.done()) continue;
    if (raw[sc.i] == '#') continue;
    std::string key = sc.ident();
    sc.expect(':');
    if (key == "bottom") {
      if (have_bottom) sc.fail("duplicate 'bottom:'");
      while (!sc.done()) bottom.push_back(sc.ident());
      have_bottom = true;
    } else if (key == "slice") {
      if (!have_bottom) sc.fail("'slice:' before 'bottom:'");
      if (declared_top) sc.fail("'slice:' after 'top:'");
      std::vector<Atom> slice;
      while (!sc.done()) slice.push_back(parse_atom(sc));
      slices.push_back(std::move(slice));
    } else if (key == "top") {
      if (!have_bottom) sc.fail("'top:' before 'bottom:'");
      if (declared_top) sc.fail("duplicate 'top:'");
      std::vector<std::string> w;
      while (!sc.done()) w.push_back(sc.ident());
      declared_top = std::move(w);
    } else {
      sc.fail("unknown line key '" + key + "'");
    }
  }
  if (!have_bottom) throw error("diagram parse error: missing 'bottom:' line");
  Diagram d(sys, std::move(bottom), std::move(slices));
  if (declared_top && *declared_top != d.top())
    throw error("declared top '" + word_string(*declared_top) +
                "' does not match computed top '" + word_string(d.top()) + "'");
  return d;
}

std::string serialize_diagram(const Diagram& d) {
  std::ostringstream os;
  os << "bottom: " << word_string(d.bottom()) << "\n";
  for (const auto& s : d.slices()) {
    os << "slice:";
    for (const auto& a : s) os << " " << a.to_string();
    os << "\n";
  }
  os << "top: " << word_string(d.top()) << "\n";
  return os.str();
}

std::string MatchPoint::to_string() const {
  return (top ? "t" : "b") + std::to_string(index);
}

size_t Matching::cups() const {
  size_t n = 0;
  for (const auto& [a, b] : arcs) n += a.top && b.top;
  return n;
}

size_t Matching::caps() const {
  size_t n = 0;
  for (const auto& [a, b] : arcs) n += !a.top && !b.top;
  return n;
}

size_t Matching::throughs() const { return arcs.size() - cups() - caps(); }

std::string Matching::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < arcs.size(); ++i)
    os << (i ? " " : "") << arcs[i].first.to_string() << "-" << arcs[i].second.to_string();
  os << "]";
  return os.str();
}

namespace {

// Circle position -> side point.  Bottom points go left to right, then top
// points continue right to left, so planarity on the circle is planarity
// of the strip.
MatchPoint strip_point(size_t circle, size_t p) {
  if (circle < p) return MatchPoint{false, circle};
  return MatchPoint{true, 2 * p - 1 - circle};
}

using ArcSet = std::vector<std::pair<size_t, size_t>>;

// All non-crossing perfect matchings of the line points lo..hi: point lo
// pairs with some k at odd distance, splitting the rest into the enclosed
// and the following range.
std::vector<ArcSet> enumerate_noncrossing(size_t lo, size_t hi) {
  std::vector<ArcSet> out;
  for (size_t k = lo + 1; k <= hi; k += 2) {
    auto inner = lo + 1 <= k - 1 ? enumerate_noncrossing(lo + 1, k - 1)
                                 : std::vector<ArcSet>{{}};
    auto outer = k + 1 <= hi ? enumerate_noncrossing(k + 1, hi)
                             : std::vector<ArcSet>{{}};
    for (const auto& ins : inner)
      for (const auto& outs : outer) {
        ArcSet full{{lo, k}};
        full.insert(full.end(), ins.begin(), ins.end());
        full.insert(full.end(), outs.begin(), outs.end());
        out.push_back(std::move(full));
      }
  }
  return out;
}

}  // namespace

std::vector<Matching> crossingless_matchings(int m) {
  if (m < 2) throw error("crossingless matchings need a bond order >= 2");
  size_t p = static_cast<size_t>(m - 1);
  std::vector<ArcSet> raw = enumerate_noncrossing(0, 2 * p - 1);
  std::vector<Matching> out;
  out.reserve(raw.size());
  for (auto& arcs : raw) {
    Matching mm;
    mm.points_per_side = p;
    for (auto& [a, b] : arcs) {
      MatchPoint pa = strip_point(a, p), pb = strip_point(b, p);
      if (pb < pa) std::swap(pa, pb);
      mm.arcs.emplace_back(pa, pb);
    }
    std::sort(mm.arcs.begin(), mm.arcs.end());
    out.push_back(std::move(mm));
  }
  std::sort(out.begin(), out.end(), [](const Matching& x, const Matching& y) {
    return x.arcs < y.arcs;
  });
  return out;
}

}  // namespace hcg
