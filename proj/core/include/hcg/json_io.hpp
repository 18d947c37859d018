// JSON configuration and report formats: Coxeter systems with optional
// Cartan data, group presentations, grading specifications, characters,
// relation catalogs (diagrams embedded in the line-oriented wire format),
// and homogeneity reports.  All rationals travel as strings "p/q"; group
// elements travel as raw coefficient vectors over the owning group's
// generators.  Parse failures throw hcg::error with a message naming the
// offending key.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hcg/coxeter.hpp"
#include "hcg/grading.hpp"
#include "hcg/relations.hpp"
#include "hcg/rescale.hpp"

namespace hcg {

// A system document: {"labels":["s","t"],"m":[[1,3],[3,1]],
// "cartan":[["2","-1"],["-1","2"]]}.  Bond orders are positive integers
// or the string "inf"; "cartan" is optional.  When a Cartan matrix is
// given the realization is built from it; otherwise the standard values
// for bond orders 2, 3, 4, 6 are tried, and the realization is left
// empty when some bond has none (the system itself is still usable).
struct SystemConfig {
  CoxeterSystem system;
  std::optional<Realization> realization;
};

SystemConfig parse_system_config(const std::string& text);
SystemConfig load_system_config(const std::string& path);
std::string system_config_to_string(const CoxeterSystem& sys,
                                    const std::optional<Realization>& real);

// {"gens":["f_s","g_s"],"rels":[[1,1]]}; "rels" may be absent or empty.
AbGroup group_from_string(const std::string& text);
std::string group_to_string(const AbGroup& g);

// A grading specification is either the name of a built-in assignment --
// "bigrading", "original", "universal" -- or a JSON document:
//   {"kind":"bigrading" | "original" | "universal"}
//   {"kind":"general","gamma":{...group...},
//    "deg_basis":{"a_s":[1],...},"deg_alpha":{"s":[1],...}}
//   {"kind":"explicit","group":{...group...},
//    "f":{"s":[...]},"g":{...},"deg_basis":{...}}
// "general" grades the polynomial variables by gamma and derives the
// universal dot degrees on top (requires a realization); "deg_alpha" is
// optional and, when present, is checked against the degrees the basis
// grading induces.  "explicit" spells out every degree over an arbitrary
// group; element values are coefficient vectors over the group's
// generators.
DegreeAssignment parse_grading_spec(const std::string& text,
                                    const CoxeterSystem& sys,
                                    const std::optional<Realization>& real);

// Resolves a command-line grading argument: a built-in name is used
// directly, anything else is read as a file path.
DegreeAssignment load_grading_spec(const std::string& name_or_path,
                                   const CoxeterSystem& sys,
                                   const std::optional<Realization>& real);

// {"group":"bigrading","images":{"m":"1","n":"-1"}}.  Images are keyed
// by the generator names of the assignment's group and parsed as exact
// rationals.  The "group" field is a consistency declaration: when
// present it must equal `grading_name` (the spec string the assignment
// was built from).
Character parse_character_spec(const std::string& text,
                               const DegreeAssignment& assignment,
                               const std::string& grading_name);
std::string character_to_string(const Character& chi, const std::string& grading_name);

// JSON array of {"name":...,"family":...,"terms":[{"scalar":"p/q",
// "diagram":"bottom: ...\nslice: ..."}]}.  "family" defaults to "user".
std::vector<Relation> catalog_from_string(const CoxeterSystem& sys,
                                          const std::string& text);
std::string catalog_to_string(const std::vector<Relation>& catalog);

// JSON array of {"relation":name,"homogeneous":bool,
// "degree":[...]|null,"witnesses":[{"term":...,"degree":...}]}.
// Degrees are coefficient vectors over the grading group's generators,
// so a parsed report reconstructs the same group elements exactly.
std::string report_to_string(const HomogeneityReport& rep);
HomogeneityReport report_from_string(const AbGroup& g, const std::string& text);

// Whole-file slurp; throws hcg::error when the file cannot be read.
std::string read_file(const std::string& path);

}  // namespace hcg
