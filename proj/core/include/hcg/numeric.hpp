// Exact arithmetic primitives shared across the library: arbitrary-precision
// integers and rationals (GMP-backed), the common exception type, and
// string conversion helpers for the "p/q" wire format.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hcg {

using Int = mpz_class;
using Rat = mpq_class;

// Base class for all errors raised by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a degree computation meets an object whose parts have two
// different degrees; carries the two clashing degrees in printed form.
struct inhomogeneous_error : error {
  std::string degree_a;
  std::string degree_b;
  inhomogeneous_error(const std::string& what, std::string da, std::string db)
      : error(what), degree_a(std::move(da)), degree_b(std::move(db)) {}
};

// Parses "p", "-p" or "p/q" with q > 0 after canonicalisation.
// Throws hcg::error on malformed input or zero denominator.
Rat parse_rational(const std::string& text);

// Formats a rational as "p" or "p/q" (canonical form, q > 0).
std::string rational_string(const Rat& value);

// base^exp for rational base and integer exponent (negative allowed).
// Throws on 0^negative.
Rat rational_pow(const Rat& base, const Int& exp);

// Checked narrowing used when an Int indexes something machine-sized.
long to_long(const Int& value);

}  // namespace hcg
