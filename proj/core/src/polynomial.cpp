#include "hcg/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace hcg {

Polynomial Polynomial::constant(Rat c) {
  Polynomial p;
  p.add_term({}, c);
  return p;
}

Polynomial Polynomial::variable(const std::string& name) {
  Polynomial p;
  p.add_term({{name, 1u}}, Rat(1));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat Polynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rat(0) : it->second;
}

std::vector<std::string> Polynomial::variables() const {
  std::map<std::string, bool> seen;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) seen[v] = true;
  std::vector<std::string> out;
  for (const auto& [v, b] : seen) out.push_back(v);
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    it->second.canonicalize();
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma;
      for (const auto& [v, e] : mb) m[v] += e;
      r.add_term(m, ca * cb);
    }
  return r;
}

Polynomial Polynomial::scaled(const Rat& c) const {
  if (c == 0) return Polynomial{};
  Polynomial r;
  for (const auto& [m, cc] : terms_) {
    Rat v = cc * c;
    v.canonicalize();
    r.terms_.emplace(m, v);
  }
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(Rat(1));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& map) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Polynomial term = constant(c);
    for (const auto& [v, e] : m) {
      auto it = map.find(v);
      term = term * (it == map.end() ? variable(v) : it->second).pow(e);
    }
    out = out + term;
  }
  return out;
}

namespace {

// Graded-lex order (total degree, then exponent of the name-wise earliest
// differing variable).  Unlike the map's own key order this respects
// monomial multiplication, which the division loop needs to terminate.
bool grlex_less(const Monomial& a, const Monomial& b) {
  unsigned long da = 0, db = 0;
  for (const auto& [v, e] : a) da += e;
  for (const auto& [v, e] : b) db += e;
  if (da != db) return da < db;
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first != ib->first)
      // The earlier name is the more significant variable; having it at
      // all makes the monomial larger.
      return ia->first > ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia;
    ++ib;
  }
  return ia == a.end() && ib != b.end();
}

}  // namespace

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw error("polynomial division by zero");
  // Reduce against the divisor's graded-lex leading term; each step cancels
  // the numerator's leading monomial, which strictly decreases.
  auto lead = [](const Polynomial& p) {
    auto best = p.terms_.begin();
    for (auto it = std::next(best); it != p.terms_.end(); ++it)
      if (grlex_less(best->first, it->first)) best = it;
    return best;
  };
  const auto dlead = lead(divisor);
  Polynomial rem = *this, quot;
  while (!rem.is_zero()) {
    auto rlead = lead(rem);
    // Quotient monomial = rlead / dlead, if the exponents allow it.
    Monomial qm = rlead->first;
    bool divides = true;
    for (const auto& [v, e] : dlead->first) {
      auto it = qm.find(v);
      if (it == qm.end() || it->second < e) {
        divides = false;
        break;
      }
      if (it->second == e)
        qm.erase(it);
      else
        it->second -= e;
    }
    if (!divides) throw error("polynomial division left a remainder");
    Rat qc = rlead->second / dlead->second;
    Polynomial qterm;
    qterm.add_term(qm, qc);
    quot = quot + qterm;
    rem = rem - qterm * divisor;
  }
  return quot;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool wrote_coeff = false;
    if (m.empty() || a != 1) {
      os << rational_string(a);
      wrote_coeff = true;
    }
    bool first_var = true;
    for (const auto& [v, e] : m) {
      if (wrote_coeff || !first_var) os << "*";
      os << v;
      if (e != 1) os << "^" << e;
      first_var = false;
      wrote_coeff = true;
    }
  }
  return os.str();
}

namespace {

struct PolyParser {
  const std::string& s;
  size_t i = 0;

  explicit PolyParser(const std::string& text) : s(text) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw error("polynomial parse error at position " + std::to_string(i) + ": " + what +
                " in '" + s + "'");
  }

  std::string number() {
    skip();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected number");
    if (i < s.size() && s[i] == '/') {
      ++i;
      size_t dstart = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == dstart) fail("expected denominator");
    }
    return s.substr(start, i - start);
  }

  std::string ident() {
    skip();
    size_t start = i;
    auto ok = [&](char c, bool lead) {
      return c == '_' || std::isalpha(static_cast<unsigned char>(c)) ||
             (!lead && std::isdigit(static_cast<unsigned char>(c)));
    };
    if (i >= s.size() || !ok(s[i], true)) fail("expected identifier");
    while (i < s.size() && ok(s[i], false)) ++i;
    return s.substr(start, i - start);
  }

  Polynomial factor() {
    skip();
    if (i >= s.size()) fail("unexpected end of input");
    char c = s[i];
    if (c == '-') {
      ++i;
      return -factor();
    }
    if (c == '(') {
      ++i;
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(parse_rational(number()));
    Polynomial v = Polynomial::variable(ident());
    if (eat('^')) {
      std::string e = number();
      if (e.find('/') != std::string::npos) fail("exponent must be an integer");
      unsigned long ue = std::stoul(e);
      return v.pow(static_cast<unsigned>(ue));
    }
    return v;
  }

  Polynomial term() {
    Polynomial p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }

  Polynomial expr() {
    Polynomial p = term();
    for (;;) {
      if (eat('+'))
        p = p + term();
      else if (eat('-'))
        p = p - term();
      else
        return p;
    }
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text) {
  PolyParser p(text);
  Polynomial out = p.expr();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return out;
}

}  // namespace hcg
