// String diagrams for the generator calculus: colored strands read from a
// bottom word to a top word through horizontal slices of atoms.  Includes
// the plain-text wire format ("bottom:/slice:/top:" lines), vertical and
// horizontal composition, and crossingless matchings of boundary points.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hcg/coxeter.hpp"
#include "hcg/polynomial.hpp"

namespace hcg {

struct Atom {
  enum class Kind { Id, DotIn, DotOut, Split, Merge, Vertex, PolyBox };

  Kind kind = Kind::Id;
  std::string c1;    // color; first color for Vertex
  std::string c2;    // second color for Vertex only
  Polynomial poly;   // PolyBox only

  static Atom id(std::string c);
  static Atom dot_in(std::string c);   // no strands below, one above
  static Atom dot_out(std::string c);  // one strand below, none above
  static Atom split(std::string c);    // one below, two above
  static Atom merge(std::string c);    // two below, one above
  static Atom vertex(std::string a, std::string b);  // alternating words of the bond order
  static Atom poly_box(Polynomial p);  // scalar decoration, no strands

  // Boundary words; Vertex needs the system for the bond order.
  std::vector<std::string> source(const CoxeterSystem& sys) const;
  std::vector<std::string> target(const CoxeterSystem& sys) const;

  bool operator==(const Atom& o) const = default;
  std::string to_string() const;
};

class Diagram {
 public:
  Diagram() = default;
  // Validates colors against the system, vertex bond orders finite, and
  // that each slice's source word matches the word below it.
  Diagram(CoxeterSystem sys, std::vector<std::string> bottom,
          std::vector<std::vector<Atom>> slices);

  static Diagram identity(const CoxeterSystem& sys, std::vector<std::string> word);

  const CoxeterSystem& system() const { return sys_; }
  const std::vector<std::string>& bottom() const { return bottom_; }
  const std::vector<std::string>& top() const { return top_; }
  const std::vector<std::vector<Atom>>& slices() const { return slices_; }

  // The diagram without its all-identity slices (same morphism).
  Diagram normalized() const;

  bool operator==(const Diagram& o) const;

 private:
  CoxeterSystem sys_;
  std::vector<std::string> bottom_, top_;
  std::vector<std::vector<Atom>> slices_;
};

// b stacked on top of a; b's bottom word must equal a's top word.
Diagram compose(const Diagram& a, const Diagram& b);

// Side-by-side juxtaposition; the shorter diagram is padded with identity
// slices at its top.
Diagram tensor(const Diagram& a, const Diagram& b);

// Plain-text format:
//   bottom: s t s
//   slice: id(s) merge(t) ...        (atoms left to right)
//   slice: vertex(s,t) poly{a_s - 2*a_t}
//   top: t s                          (optional; validated when present)
// '#' starts a comment line.
Diagram parse_diagram(const CoxeterSystem& sys, const std::string& text);
std::string serialize_diagram(const Diagram& d);

// One endpoint of a matching arc: side and 0-based position, left to right.
struct MatchPoint {
  bool top = false;
  size_t index = 0;
  auto operator<=>(const MatchPoint&) const = default;
  std::string to_string() const;  // "b0", "t3"
};

// A planar perfect matching of p bottom and p top points.
struct Matching {
  size_t points_per_side = 0;
  std::vector<std::pair<MatchPoint, MatchPoint>> arcs;  // each pair sorted, arcs sorted

  size_t cups() const;      // both ends on top
  size_t caps() const;      // both ends on bottom
  size_t throughs() const;  // one end on each side
  bool operator==(const Matching& o) const = default;
  std::string to_string() const;
};

// All crossingless perfect matchings of (m-1) bottom and (m-1) top points,
// in a deterministic order; their number is the Catalan number C_{m-1}.
std::vector<Matching> crossingless_matchings(int m);

// "s t s t" -> the word as a vector; helpers shared by formats.
std::string word_string(const std::vector<std::string>& word);

}  // namespace hcg
