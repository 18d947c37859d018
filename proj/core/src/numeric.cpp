#include "hcg/numeric.hpp"

#include <limits>

namespace hcg {

namespace {

// mpq's own parser silently ignores embedded whitespace, so shape-check the
// literal first: [+-]digits or [+-]digits/digits.
bool rational_shape_ok(const std::string& s) {
  size_t i = 0;
  auto digits = [&]() {
    size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    return i > start;
  };
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (!digits()) return false;
  if (i < s.size() && s[i] == '/') {
    ++i;
    if (!digits()) return false;
  }
  return i == s.size();
}

}  // namespace

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw error("empty rational literal");
  mpq_class q;
  if (!rational_shape_ok(text) || q.set_str(text, 10) != 0)
    throw error("malformed rational literal: '" + text + "'");
  if (q.get_den() == 0)
    throw error("zero denominator in rational literal: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rational_string(const Rat& value) {
  Rat v = value;
  v.canonicalize();
  return v.get_str();
}

Rat rational_pow(const Rat& base, const Int& exp) {
  if (base == 0) {
    if (exp < 0) throw error("0 raised to a negative power");
    return exp == 0 ? Rat(1) : Rat(0);
  }
  Int e = abs(exp);
  if (!e.fits_ulong_p()) throw error("exponent too large in rational_pow");
  unsigned long ue = e.get_ui();
  Rat num(1), cur = base;
  while (ue > 0) {
    if (ue & 1ul) num *= cur;
    ue >>= 1;
    if (ue) cur *= cur;
  }
  if (exp < 0) num = 1 / num;
  num.canonicalize();
  return num;
}

long to_long(const Int& value) {
  if (!value.fits_slong_p()) throw error("integer out of machine range");
  return value.get_si();
}

}  // namespace hcg
