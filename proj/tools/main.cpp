// Command-line driver: loads a Coxeter system configuration (plus
// optional Cartan data), resolves a grading specification, and runs one
// of the five commands.  Exit codes: 0 success (for `verify`: everything
// homogeneous), 1 inhomogeneity found by `verify`, 2 configuration or
// parse errors.
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hcg/grading.hpp"
#include "hcg/json_io.hpp"
#include "hcg/relations.hpp"
#include "hcg/rescale.hpp"

namespace {

using hcg::Int;
using hcg::Rat;
using nlohmann::json;

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

json coords_to_json(const std::vector<Int>& coords) {
  json arr = json::array();
  for (const auto& v : coords) arr.push_back(int_to_json(v));
  return arr;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  return hcg::read_file(path);
}

struct Options {
  std::string coxeter;
  std::string grading = "bigrading";
  std::string format = "text";
  std::string catalog_file;
  std::string character_file;
  std::string diagram_file;
  bool group_level = false;
};

hcg::Diagram load_diagram(const hcg::CoxeterSystem& sys, const std::string& path) {
  return hcg::parse_diagram(sys, read_input(path));
}

int cmd_verify(const Options& opt) {
  hcg::SystemConfig cfg = hcg::load_system_config(opt.coxeter);
  if (!cfg.realization)
    throw hcg::error(
        "verification runs over the full catalog and needs a realization; "
        "add Cartan data to " + opt.coxeter);
  hcg::DegreeAssignment a =
      hcg::load_grading_spec(opt.grading, cfg.system, cfg.realization);
  std::vector<hcg::Relation> extra;
  if (!opt.catalog_file.empty())
    extra = hcg::catalog_from_string(cfg.system, read_input(opt.catalog_file));
  hcg::HomogeneityReport rep =
      hcg::verify_all(cfg.system, *cfg.realization, a, extra);
  if (opt.format == "json") {
    std::cout << hcg::report_to_string(rep);
  } else {
    std::cout << rep.to_string();
    size_t bad = 0;
    for (const auto& e : rep.entries) bad += e.homogeneous ? 0 : 1;
    if (bad == 0)
      std::cout << "checked " << rep.entries.size()
                << " entries: all homogeneous\n";
    else
      std::cout << "checked " << rep.entries.size() << " entries: " << bad
                << " inhomogeneous\n";
  }
  return rep.all_homogeneous() ? 0 : 1;
}

int cmd_universal(const Options& opt) {
  hcg::SystemConfig cfg = hcg::load_system_config(opt.coxeter);
  const bool group_level = opt.group_level || !cfg.realization;
  hcg::DeriveResult res = group_level
                              ? hcg::derive_universal(cfg.system)
                              : hcg::derive_universal(cfg.system, *cfg.realization);
  std::vector<std::pair<std::string, hcg::GroupElement>> gens;
  for (const auto& l : cfg.system.labels()) {
    gens.emplace_back("f_" + l, res.assignment.f_of(l));
    gens.emplace_back("g_" + l, res.assignment.g_of(l));
  }
  const auto& cert = res.certificate;
  if (opt.format == "json") {
    json j;
    j["mode"] = group_level ? "group-level" : "realization";
    j["group"] = json::parse(hcg::group_to_string(res.group));
    j["structure"] = res.group.describe();
    j["free_rank"] = res.group.free_rank();
    json factors = json::array();
    for (const auto& d : res.group.invariant_factors()) factors.push_back(int_to_json(d));
    j["invariant_factors"] = factors;
    json imgs;
    for (const auto& [name, val] : gens) imgs[name] = coords_to_json(val.canonical());
    j["generators"] = imgs;
    json vdeg;
    for (const auto& [pair, val] : res.vertex_degrees)
      vdeg[pair.first + "," + pair.second] = coords_to_json(val.canonical());
    j["vertex_degrees"] = vdeg;
    json c;
    c["isomorphic"] = cert.ok();
    c["mutually_inverse"] = cert.mutually_inverse;
    c["rank_reference"] = cert.rank_reference;
    c["rank_derived"] = cert.rank_derived;
    json ir = json::array(), id = json::array();
    for (const auto& d : cert.invariants_reference) ir.push_back(int_to_json(d));
    for (const auto& d : cert.invariants_derived) id.push_back(int_to_json(d));
    c["invariants_reference"] = ir;
    c["invariants_derived"] = id;
    j["certificate"] = c;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "mode: "
              << (group_level ? "group level (no realization needed)"
                              : "realization")
              << "\n";
    std::cout << "group: " << res.group.describe() << "\n";
    std::cout << "free rank: " << res.group.free_rank() << "\n";
    std::cout << "invariant factors:";
    if (res.group.invariant_factors().empty()) std::cout << " none";
    for (const auto& d : res.group.invariant_factors())
      std::cout << " " << d.get_str();
    std::cout << "\n";
    std::cout << "generators:\n";
    for (const auto& [name, val] : gens)
      std::cout << "  " << name << " -> " << val.to_string() << "\n";
    if (!res.vertex_degrees.empty()) {
      std::cout << "vertex degrees:\n";
      for (const auto& [pair, val] : res.vertex_degrees)
        std::cout << "  h(" << pair.first << "," << pair.second << ") -> "
                  << val.to_string() << "\n";
    }
    std::cout << "certificate: "
              << (cert.ok() ? "isomorphic to the reference grading group"
                            : "MISMATCH against the reference grading group")
              << " (rank " << cert.rank_derived << ", mutually inverse: "
              << (cert.mutually_inverse ? "yes" : "no") << ")\n";
  }
  return 0;
}

int cmd_degree(const Options& opt) {
  hcg::SystemConfig cfg = hcg::load_system_config(opt.coxeter);
  hcg::DegreeAssignment a =
      hcg::load_grading_spec(opt.grading, cfg.system, cfg.realization);
  hcg::Diagram d = load_diagram(cfg.system, opt.diagram_file);
  hcg::GroupElement deg = hcg::degree(d, a);
  if (opt.format == "json") {
    json j;
    j["degree"] = coords_to_json(deg.canonical());
    j["display"] = deg.to_string();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << deg.to_string() << "\n";
  }
  return 0;
}

int cmd_theta(const Options& opt) {
  hcg::SystemConfig cfg = hcg::load_system_config(opt.coxeter);
  hcg::DegreeAssignment a =
      hcg::load_grading_spec(opt.grading, cfg.system, cfg.realization);
  hcg::Character chi =
      hcg::parse_character_spec(read_input(opt.character_file), a, opt.grading);
  hcg::Diagram d = load_diagram(cfg.system, opt.diagram_file);
  hcg::ScaledMorphism sm = hcg::theta_apply(chi, d, a);
  if (opt.format == "json") {
    json j;
    j["scalar"] = sm.scalar.get_str();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << sm.scalar.get_str() << "\n";
  }
  return 0;
}

int cmd_classify(const Options& opt) {
  hcg::SystemConfig cfg = hcg::load_system_config(opt.coxeter);
  hcg::DegreeAssignment a =
      hcg::load_grading_spec(opt.grading, cfg.system, cfg.realization);
  hcg::CharacterClassification c = hcg::classify_characters(a.group());
  if (opt.format == "json") {
    json j;
    j["free_rank"] = c.free_rank;
    json factors = json::array();
    for (const auto& d : c.invariant_factors) factors.push_back(int_to_json(d));
    j["invariant_factors"] = factors;
    json counts = json::array();
    for (const auto& n : c.torsion_counts) counts.push_back(n);
    j["torsion_counts"] = counts;
    j["torsion_total"] = int_to_json(c.torsion_total);
    j["parameterization"] = c.parameterization;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "free rank " << c.free_rank << "; rational characters: "
              << c.free_rank << " free parameter" << (c.free_rank == 1 ? "" : "s");
    if (c.torsion_total > 1)
      std::cout << " x " << c.torsion_total.get_str() << " torsion sign choices";
    std::cout << "\n";
    for (const auto& line : c.parameterization) std::cout << "  " << line << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Graded structure of a diagrammatic generators-and-relations calculus: "
      "verify homogeneity, derive the universal grading, and work with "
      "degree characters"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool with_grading) {
    sub->add_option("--coxeter", opt.coxeter,
                    "system configuration JSON (labels, bond matrix, optional cartan)")
        ->required();
    if (with_grading)
      sub->add_option(
          "--grading", opt.grading,
          "built-in grading name (bigrading, original, universal) or a "
          "grading-spec JSON file [default: bigrading]");
    sub->add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* verify = app.add_subcommand(
      "verify", "check every defining relation is homogeneous under a grading");
  add_common(verify, true);
  verify->add_option("--catalog", opt.catalog_file,
                     "extra relations to check, as a catalog JSON file");

  CLI::App* universal = app.add_subcommand(
      "universal", "derive the universal grading group from the relation catalog");
  add_common(universal, false);
  universal->add_flag("--group-level", opt.group_level,
                      "ignore any realization and use the polynomial-free catalog");

  CLI::App* degree = app.add_subcommand(
      "degree", "degree of a diagram in the grading group's canonical coordinates");
  add_common(degree, true);
  degree->add_option("--diagram", opt.diagram_file,
                     "diagram file in the wire format ('-' for stdin)")
      ->required();

  CLI::App* theta = app.add_subcommand(
      "theta", "scalar a degree character assigns to a diagram");
  add_common(theta, true);
  theta->add_option("--character", opt.character_file, "character spec JSON file")
      ->required();
  theta->add_option("--diagram", opt.diagram_file,
                    "diagram file in the wire format ('-' for stdin)")
      ->required();

  CLI::App* classify = app.add_subcommand(
      "classify", "structure of the rational character group of a grading");
  add_common(classify, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(verify)) return cmd_verify(opt);
    if (app.got_subcommand(universal)) return cmd_universal(opt);
    if (app.got_subcommand(degree)) return cmd_degree(opt);
    if (app.got_subcommand(theta)) return cmd_theta(opt);
    if (app.got_subcommand(classify)) return cmd_classify(opt);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
