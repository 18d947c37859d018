#include "hcg/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hcg {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& ctx, const std::string& msg) {
  throw error(ctx + ": " + msg);
}

json parse_json(const std::string& ctx, const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& ex) {
    fail(ctx, ex.what());
  }
}

const json& field(const std::string& ctx, const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ctx, std::string("missing \"") + key + "\"");
  return j.at(key);
}

Rat rat_from_json(const std::string& ctx, const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    Rat r;
    if (r.set_str(j.get<std::string>(), 10) != 0 || r.get_den() == 0)
      fail(ctx, "not a rational: \"" + j.get<std::string>() + "\"");
    r.canonicalize();
    return r;
  }
  fail(ctx, "expected an integer or a \"p/q\" string");
}

Int int_from_json(const std::string& ctx, const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Int v;
    if (v.set_str(j.get<std::string>(), 10) != 0)
      fail(ctx, "not an integer: \"" + j.get<std::string>() + "\"");
    return v;
  }
  fail(ctx, "expected an integer");
}

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

std::vector<Int> coeffs_from_json(const std::string& ctx, const json& j) {
  if (!j.is_array()) fail(ctx, "expected a coefficient array");
  std::vector<Int> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(int_from_json(ctx, e));
  return out;
}

json coeffs_to_json(const std::vector<Int>& coeffs) {
  json arr = json::array();
  for (const auto& v : coeffs) arr.push_back(int_to_json(v));
  return arr;
}

AbGroup group_from_json(const std::string& ctx, const json& j) {
  const json& gens = field(ctx, j, "gens");
  if (!gens.is_array() || gens.empty()) fail(ctx, "\"gens\" must be a nonempty array");
  std::vector<std::string> names;
  for (const auto& g : gens) {
    if (!g.is_string()) fail(ctx, "generator names must be strings");
    names.push_back(g.get<std::string>());
  }
  IntMatrix rels(0, names.size());
  if (j.contains("rels")) {
    const json& rows = j.at("rels");
    if (!rows.is_array()) fail(ctx, "\"rels\" must be an array of rows");
    for (const auto& row : rows) {
      std::vector<Int> r = coeffs_from_json(ctx + ": rels", row);
      if (r.size() != names.size())
        fail(ctx, "relator length " + std::to_string(r.size()) +
                      " does not match " + std::to_string(names.size()) + " generators");
      rels.append_row(r);
    }
  }
  try {
    return presented_group(std::move(names), std::move(rels));
  } catch (const error& ex) {
    fail(ctx, ex.what());
  }
}

json group_to_json(const AbGroup& g) {
  json j;
  j["gens"] = g.gen_names();
  json rows = json::array();
  for (size_t r = 0; r < g.relators().rows(); ++r)
    rows.push_back(coeffs_to_json(g.relators().row(r)));
  j["rels"] = rows;
  return j;
}

std::map<std::string, GroupElement> elements_from_json(const std::string& ctx,
                                                       const json& j,
                                                       const AbGroup& g) {
  if (!j.is_object()) fail(ctx, "expected an object of coefficient arrays");
  std::map<std::string, GroupElement> out;
  for (const auto& [key, val] : j.items()) {
    std::vector<Int> coeffs = coeffs_from_json(ctx + ": " + key, val);
    if (coeffs.size() != g.gen_count())
      fail(ctx, key + ": coefficient count " + std::to_string(coeffs.size()) +
                    " does not match " + std::to_string(g.gen_count()) + " generators");
    out.emplace(key, g.element(std::move(coeffs)));
  }
  return out;
}

DegreeAssignment grading_from_json(const json& j, const CoxeterSystem& sys,
                                   const std::optional<Realization>& real) {
  const std::string ctx = "grading spec";
  const json& kind = field(ctx, j, "kind");
  if (!kind.is_string()) fail(ctx, "\"kind\" must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "bigrading") return bigrading(sys);
  if (k == "original") return original_grading(sys);
  if (k == "universal") return universal_lambda(sys);
  if (k == "general") {
    if (!real)
      fail(ctx, "kind \"general\" needs a realization (provide Cartan data)");
    AbGroup gamma = group_from_json(ctx + ": gamma", field(ctx, j, "gamma"));
    VGrading vg{gamma, elements_from_json(ctx + ": deg_basis",
                                          field(ctx, j, "deg_basis"), gamma)};
    DegreeAssignment a = general_grading(sys, *real, vg);
    if (j.contains("deg_alpha")) {
      std::map<std::string, GroupElement> claimed =
          elements_from_json(ctx + ": deg_alpha", j.at("deg_alpha"), gamma);
      for (const auto& [label, elem] : claimed) {
        if (!sys.has(label)) fail(ctx, "deg_alpha: unknown generator " + label);
        if (!(alpha_degree(*real, vg, label) == elem))
          fail(ctx, "deg_alpha[" + label + "] = " + elem.to_string() +
                        " contradicts the basis grading, which gives " +
                        alpha_degree(*real, vg, label).to_string());
      }
    }
    return a;
  }
  if (k == "explicit") {
    AbGroup g = group_from_json(ctx + ": group", field(ctx, j, "group"));
    return make_assignment(
        sys, g, elements_from_json(ctx + ": f", field(ctx, j, "f"), g),
        elements_from_json(ctx + ": g", field(ctx, j, "g"), g),
        elements_from_json(ctx + ": deg_basis", field(ctx, j, "deg_basis"), g));
  }
  fail(ctx, "unknown kind \"" + k +
                "\" (expected bigrading, original, universal, general, or explicit)");
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SystemConfig parse_system_config(const std::string& text) {
  const std::string ctx = "system config";
  json j = parse_json(ctx, text);
  const json& labels_j = field(ctx, j, "labels");
  if (!labels_j.is_array()) fail(ctx, "\"labels\" must be an array");
  std::vector<std::string> labels;
  for (const auto& l : labels_j) {
    if (!l.is_string()) fail(ctx, "labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  const json& m_j = field(ctx, j, "m");
  if (!m_j.is_array() || m_j.size() != labels.size())
    fail(ctx, "\"m\" must be a " + std::to_string(labels.size()) + "x" +
                  std::to_string(labels.size()) + " matrix");
  std::vector<std::vector<int>> m;
  for (const auto& row : m_j) {
    if (!row.is_array() || row.size() != labels.size())
      fail(ctx, "\"m\" rows must have " + std::to_string(labels.size()) + " entries");
    std::vector<int> r;
    for (const auto& e : row) {
      if (e.is_string() && e.get<std::string>() == "inf")
        r.push_back(kInfiniteBond);
      else if (e.is_number_integer())
        r.push_back(e.get<int>());
      else
        fail(ctx, "bond orders must be integers or \"inf\"");
    }
    m.push_back(std::move(r));
  }
  SystemConfig cfg;
  try {
    cfg.system = new_coxeter_system(std::move(labels), std::move(m));
  } catch (const error& ex) {
    fail(ctx, ex.what());
  }
  if (j.contains("cartan")) {
    const json& c_j = j.at("cartan");
    if (!c_j.is_array()) fail(ctx, "\"cartan\" must be a matrix");
    std::vector<std::vector<Rat>> cartan;
    for (const auto& row : c_j) {
      if (!row.is_array()) fail(ctx, "\"cartan\" rows must be arrays");
      std::vector<Rat> r;
      for (const auto& e : row) r.push_back(rat_from_json(ctx + ": cartan", e));
      cartan.push_back(std::move(r));
    }
    try {
      cfg.realization = root_realization(cfg.system, cartan);
    } catch (const error& ex) {
      fail(ctx, ex.what());
    }
  } else {
    try {
      cfg.realization = root_realization(cfg.system);
    } catch (const error&) {
      // Some bond order has no standard Cartan entry; the realization
      // stays empty and realization-dependent features are unavailable.
    }
  }
  return cfg;
}

SystemConfig load_system_config(const std::string& path) {
  return parse_system_config(read_file(path));
}

std::string system_config_to_string(const CoxeterSystem& sys,
                                    const std::optional<Realization>& real) {
  json j;
  j["labels"] = sys.labels();
  json m = json::array();
  for (const auto& a : sys.labels()) {
    json row = json::array();
    for (const auto& b : sys.labels()) {
      int bond = sys.bond(a, b);
      if (finite_bond(bond))
        row.push_back(bond);
      else
        row.push_back("inf");
    }
    m.push_back(std::move(row));
  }
  j["m"] = m;
  if (real) {
    json c = json::array();
    for (const auto& a : sys.labels()) {
      json row = json::array();
      for (const auto& b : sys.labels())
        row.push_back(real->cartan(a, b).get_str());
      c.push_back(std::move(row));
    }
    j["cartan"] = c;
  }
  return j.dump(2) + "\n";
}

AbGroup group_from_string(const std::string& text) {
  return group_from_json("group", parse_json("group", text));
}

std::string group_to_string(const AbGroup& g) { return group_to_json(g).dump(2) + "\n"; }

DegreeAssignment parse_grading_spec(const std::string& text,
                                    const CoxeterSystem& sys,
                                    const std::optional<Realization>& real) {
  return grading_from_json(parse_json("grading spec", text), sys, real);
}

DegreeAssignment load_grading_spec(const std::string& name_or_path,
                                   const CoxeterSystem& sys,
                                   const std::optional<Realization>& real) {
  if (name_or_path == "bigrading") return bigrading(sys);
  if (name_or_path == "original") return original_grading(sys);
  if (name_or_path == "universal") return universal_lambda(sys);
  return parse_grading_spec(read_file(name_or_path), sys, real);
}

Character parse_character_spec(const std::string& text,
                               const DegreeAssignment& assignment,
                               const std::string& grading_name) {
  const std::string ctx = "character spec";
  json j = parse_json(ctx, text);
  if (j.contains("group")) {
    const json& g = j.at("group");
    if (!g.is_string()) fail(ctx, "\"group\" must be a string");
    if (g.get<std::string>() != grading_name)
      fail(ctx, "character targets grading \"" + g.get<std::string>() +
                    "\" but the run uses \"" + grading_name + "\"");
  }
  const json& images_j = field(ctx, j, "images");
  if (!images_j.is_object()) fail(ctx, "\"images\" must be an object");
  std::map<std::string, Rat> images;
  for (const auto& [key, val] : images_j.items())
    images.emplace(key, rat_from_json(ctx + ": " + key, val));
  return character(assignment.group(), images);
}

std::string character_to_string(const Character& chi, const std::string& grading_name) {
  json j;
  j["group"] = grading_name;
  json images;
  const auto& names = chi.domain().gen_names();
  for (size_t i = 0; i < names.size(); ++i)
    images[names[i]] = chi.images()[i].get_str();
  j["images"] = images;
  return j.dump(2) + "\n";
}

std::vector<Relation> catalog_from_string(const CoxeterSystem& sys,
                                          const std::string& text) {
  const std::string ctx = "catalog";
  json j = parse_json(ctx, text);
  if (!j.is_array()) fail(ctx, "expected an array of relations");
  std::vector<Relation> out;
  for (const auto& rel_j : j) {
    const json& name_j = field(ctx, rel_j, "name");
    if (!name_j.is_string()) fail(ctx, "\"name\" must be a string");
    std::string name = name_j.get<std::string>();
    std::string family = "user";
    if (rel_j.contains("family")) {
      if (!rel_j.at("family").is_string()) fail(ctx, name + ": \"family\" must be a string");
      family = rel_j.at("family").get<std::string>();
    }
    const json& terms_j = field(ctx + ": " + name, rel_j, "terms");
    if (!terms_j.is_array()) fail(ctx, name + ": \"terms\" must be an array");
    std::vector<RelationTerm> terms;
    for (const auto& term_j : terms_j) {
      Rat scalar = rat_from_json(ctx + ": " + name, field(ctx + ": " + name, term_j, "scalar"));
      const json& d_j = field(ctx + ": " + name, term_j, "diagram");
      if (!d_j.is_string()) fail(ctx, name + ": \"diagram\" must be a string");
      try {
        terms.push_back({scalar, parse_diagram(sys, d_j.get<std::string>())});
      } catch (const error& ex) {
        fail(ctx, name + ": " + ex.what());
      }
    }
    try {
      out.push_back(make_relation(std::move(name), std::move(family), std::move(terms)));
    } catch (const error& ex) {
      fail(ctx, ex.what());
    }
  }
  return out;
}

std::string catalog_to_string(const std::vector<Relation>& catalog) {
  json arr = json::array();
  for (const auto& rel : catalog) {
    json r;
    r["name"] = rel.name;
    r["family"] = rel.family;
    json terms = json::array();
    for (const auto& term : rel.terms) {
      json t;
      t["scalar"] = term.scalar.get_str();
      t["diagram"] = serialize_diagram(term.diagram);
      terms.push_back(std::move(t));
    }
    r["terms"] = terms;
    arr.push_back(std::move(r));
  }
  return arr.dump(2) + "\n";
}

std::string report_to_string(const HomogeneityReport& rep) {
  json arr = json::array();
  for (const auto& e : rep.entries) {
    json item;
    item["relation"] = e.relation;
    item["homogeneous"] = e.homogeneous;
    if (e.degree)
      item["degree"] = coeffs_to_json(e.degree->coeffs());
    else
      item["degree"] = nullptr;
    json ws = json::array();
    for (const auto& w : e.witnesses) {
      json wj;
      wj["term"] = w.term;
      wj["degree"] = w.degree;
      ws.push_back(std::move(wj));
    }
    item["witnesses"] = ws;
    arr.push_back(std::move(item));
  }
  return arr.dump(2) + "\n";
}

HomogeneityReport report_from_string(const AbGroup& g, const std::string& text) {
  const std::string ctx = "report";
  json j = parse_json(ctx, text);
  if (!j.is_array()) fail(ctx, "expected an array of entries");
  HomogeneityReport rep;
  for (const auto& item : j) {
    HomogeneityEntry e;
    const json& rel = field(ctx, item, "relation");
    if (!rel.is_string()) fail(ctx, "\"relation\" must be a string");
    e.relation = rel.get<std::string>();
    const json& hom = field(ctx, item, "homogeneous");
    if (!hom.is_boolean()) fail(ctx, "\"homogeneous\" must be a boolean");
    e.homogeneous = hom.get<bool>();
    const json& deg = field(ctx, item, "degree");
    if (!deg.is_null()) {
      std::vector<Int> coeffs = coeffs_from_json(ctx + ": degree", deg);
      if (coeffs.size() != g.gen_count())
        fail(ctx, e.relation + ": degree has " + std::to_string(coeffs.size()) +
                      " coordinates, the group has " + std::to_string(g.gen_count()) +
                      " generators");
      e.degree = g.element(std::move(coeffs));
    }
    if (item.contains("witnesses")) {
      const json& ws = item.at("witnesses");
      if (!ws.is_array()) fail(ctx, "\"witnesses\" must be an array");
      for (const auto& w : ws) {
        const json& term = field(ctx, w, "term");
        const json& degree = field(ctx, w, "degree");
        if (!term.is_string() || !degree.is_string())
          fail(ctx, "witness fields must be strings");
        e.witnesses.push_back({term.get<std::string>(), degree.get<std::string>()});
      }
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace hcg
