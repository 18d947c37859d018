// Multivariate polynomials with exact rational coefficients, stored as a
// sorted map from monomials to coefficients.  Includes a small expression
// parser ("2*a_s^2 - 1/3*a_t") used by file formats, and printing that
// round-trips through that parser.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "hcg/numeric.hpp"

namespace hcg {

// Variable name -> positive exponent, sorted; the empty map is the unit.
using Monomial = std::map<std::string, unsigned>;

class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial constant(Rat c);
  static Polynomial variable(const std::string& name);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The constant term's value (zero when absent).
  Rat constant_term() const;

  const std::map<Monomial, Rat>& terms() const { return terms_; }
  // All variable names appearing in some monomial.
  std::vector<std::string> variables() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rat& c) const;
  Polynomial pow(unsigned e) const;
  bool operator==(const Polynomial& o) const = default;

  // Replaces each variable by the mapped polynomial (variables not in the
  // map stay themselves).
  Polynomial substitute(const std::map<std::string, Polynomial>& map) const;

  // Exact division; throws hcg::error when the divisor does not divide.
  Polynomial divide_exact(const Polynomial& divisor) const;

  std::string to_string() const;

  void add_term(const Monomial& m, const Rat& c);  // accumulates, drops zeros

 private:
  std::map<Monomial, Rat> terms_;
};

// Parses "2*a_s^2 - 1/3*a_t + 1" style expressions: +, -, *, ^ with
// nonnegative integer exponents, rational literals "p/q", parentheses.
Polynomial parse_polynomial(const std::string& text);

}  // namespace hcg
