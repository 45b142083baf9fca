#include "coiso/cli/structure_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "coiso/catalog/catalog.hpp"
#include "coiso/ring/parser.hpp"

namespace coiso::cli {

namespace {

using nlohmann::json;

void only_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw InputError(where + " must be an object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw InputError("unknown key '" + key + "' in " + where);
}

std::vector<std::string> names(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + " must be an array of names");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw InputError(where + " must be an array of names");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Polynomial expression(const json& j, const VariableContext& ctx, const std::string& where) {
  try {
    if (j.is_number_integer()) return Polynomial(Rational(j.get<long>()));
    if (j.is_string()) return parse_polynomial(j.get<std::string>(), ctx);
  } catch (const ParseError& e) {
    throw InputError(where + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + " must be a string or an integer");
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  return s.substr(a, s.find_last_not_of(" \t") - a + 1);
}

IndexTuple key_indices(const std::string& key, const VariableContext& ctx) {
  IndexTuple out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto i = ctx.find(trim(part));
    if (!i) throw InputError("unknown coordinate '" + trim(part) + "' in key '" + key + "'");
    out.push_back(*i);
  }
  return out;
}

void fill_tensor(AntisymTensor& t, const json& entries, const VariableContext& ctx, const std::string& where) {
  if (!entries.is_object()) throw InputError(where + " must be an object");
  std::map<IndexTuple, std::pair<std::string, Polynomial>> seen;
  for (const auto& [key, value] : entries.items()) {
    const IndexTuple idx = key_indices(key, ctx);
    if (static_cast<int>(idx.size()) != t.rank())
      throw InputError(where + " key '" + key + "' needs " + std::to_string(t.rank()) + " coordinates");
    const Polynomial v = expression(value, ctx, where + "[" + key + "]");
    const SignedTuple s = sort_with_sign(idx);
    if (s.sign == 0) {
      if (!v.is_zero()) throw InputError(where + " key '" + key + "' repeats a coordinate");
      continue;
    }
    const Polynomial normalized = s.sign > 0 ? v : -v;
    auto it = seen.find(s.sorted);
    if (it != seen.end() && it->second.second != normalized)
      throw InputError(where + " keys '" + it->second.first + "' and '" + key + "' conflict");
    seen[s.sorted] = {key, normalized};
    t.set(s.sorted, normalized);
  }
}

NormalMultiSection normal_vector(const json& j, const PatchPtr& patch, const std::string& where) {
  only_keys(j, std::set<std::string>(patch->fiber().begin(), patch->fiber().end()), where);
  std::vector<Polynomial> comps(patch->d());
  for (int a = 0; a < patch->d(); ++a)
    if (j.contains(patch->fiber()[a])) comps[a] = expression(j[patch->fiber()[a]], patch->context(), where);
  for (const auto& c : comps)
    if (c.depends_on(patch->fiber_mask())) throw InputError(where + " entries must not depend on fiber coordinates");
  return NormalMultiSection::vector(patch, comps);
}

FormalSeries series(const json& j, const PatchPtr& patch, const std::string& where) {
  if (!j.is_array()) throw InputError(where + " must be an array");
  FormalSeries s{patch, {}};
  for (std::size_t i = 0; i < j.size(); ++i)
    s.coefficients.push_back(normal_vector(j[i], patch, where + "[" + std::to_string(i) + "]"));
  return s;
}

VData catalog_structure(const json& j, std::string& source) {
  only_keys(j, {"name", "n"}, "catalog");
  if (!j.contains("name") || !j["name"].is_string()) throw InputError("catalog needs a name");
  const std::string name = j["name"].get<std::string>();
  const int n = j.contains("n") ? j["n"].get<int>() : 1;
  if (n < 1 || n > 3) throw InputError("catalog n must be between 1 and 3");
  source = name + " n=" + std::to_string(n);
  if (name == "darboux_contact" || name == "legendrian") return legendrian_patch(n);
  if (name == "flowout") return flowout_patch(n);
  throw InputError("unknown catalog structure '" + name + "'");
}

PreSympData presymplectic_block(const json& j, int& K) {
  only_keys(j, {"leaf", "transverse", "fiber", "W", "G", "reference", "K"}, "presymplectic");
  for (const char* key : {"leaf", "transverse", "W", "G"})
    if (!j.contains(key)) throw InputError(std::string("presymplectic block needs '") + key + "'");
  const auto x = names(j["leaf"], "presymplectic.leaf");
  const auto u = names(j["transverse"], "presymplectic.transverse");
  std::vector<std::string> p;
  if (j.contains("fiber")) p = names(j["fiber"], "presymplectic.fiber");
  else
    for (std::size_t i = 0; i < x.size(); ++i) p.push_back("p" + std::to_string(i + 1));
  std::vector<std::string> all = x;
  all.insert(all.end(), u.begin(), u.end());
  all.insert(all.end(), p.begin(), p.end());
  const VariableContext ctx(all);

  auto matrix = [&](const json& m, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!m.is_array() || m.size() != rows) throw InputError(where + " has the wrong number of rows");
    PolyMatrix out;
    for (std::size_t r = 0; r < rows; ++r) {
      if (!m[r].is_array() || m[r].size() != cols) throw InputError(where + " has the wrong number of columns");
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < cols; ++c) row.push_back(expression(m[r][c], ctx, where));
      out.push_back(row);
    }
    return out;
  };
  PolyMatrix W = matrix(j["W"], u.size(), u.size(), "presymplectic.W");
  PolyMatrix G = matrix(j["G"], x.size(), u.size(), "presymplectic.G");
  std::vector<Rational> reference;
  if (j.contains("reference")) {
    if (!j["reference"].is_array()) throw InputError("presymplectic.reference must be an array");
    for (const auto& e : j["reference"]) {
      const Polynomial c = expression(e, VariableContext(), "presymplectic.reference");
      reference.push_back(c.constant_term());
    }
  }
  if (j.contains("K")) {
    if (!j["K"].is_number_integer() || j["K"].get<int>() < 0 || j["K"].get<int>() > 6)
      throw InputError("presymplectic.K must be an integer between 0 and 6");
    K = j["K"].get<int>();
  }
  try {
    return make_presymplectic(x, u, W, G, reference, p);
  } catch (const SingularForm& e) {
    throw InputError(std::string("presymplectic: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("presymplectic: ") + e.what());
  }
}

}  // namespace

StructureFile parse_structure(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  only_keys(doc, {"format", "base", "fiber", "J", "catalog", "section", "series", "family", "presymplectic"}, "file");
  if (!doc.contains("format") || doc["format"] != kFormat) throw InputError(std::string("format must be \"") + kFormat + "\"");

  StructureFile f;
  f.source = "none";
  try {
    if (doc.contains("catalog") && doc.contains("J")) throw InputError("give either J or catalog, not both");
    if (doc.contains("catalog")) {
      if (doc.contains("base") || doc.contains("fiber")) throw InputError("catalog structures fix their own coordinates");
      f.V = catalog_structure(doc["catalog"], f.source);
    } else if (doc.contains("J")) {
      if (!doc.contains("base") || !doc.contains("fiber")) throw InputError("J needs base and fiber names");
      PatchPtr patch = make_patch(names(doc["base"], "base"), names(doc["fiber"], "fiber"));
      only_keys(doc["J"], {"X", "G"}, "J");
      MultiOperator op(patch, 2);
      if (doc["J"].contains("X")) fill_tensor(op.X(), doc["J"]["X"], patch->context(), "J.X");
      if (doc["J"].contains("G")) fill_tensor(op.G(), doc["J"]["G"], patch->context(), "J.G");
      f.V = VData{JacobiStructure(op)};
      f.source = "components";
    } else if (doc.contains("base") || doc.contains("fiber")) {
      throw InputError("coordinates given without J");
    }

    const bool needs_structure = doc.contains("section") || doc.contains("series") || doc.contains("family");
    if (needs_structure && !f.V) throw InputError("sections need a structure");
    if (doc.contains("section")) f.section = normal_vector(doc["section"], f.V->patch(), "section");
    if (doc.contains("series")) {
      f.series = series(doc["series"], f.V->patch(), "series");
      f.series->validate();
    }
    if (doc.contains("family")) {
      const json& fam = doc["family"];
      only_keys(fam, {"time", "series", "lambda"}, "family");
      if (!fam.contains("time") || !fam["time"].is_string()) throw InputError("family needs a time coordinate");
      GaugeFamily g{fam["time"].get<std::string>(), FormalSeries{f.V->patch(), {}}, {}};
      if (fam.contains("series")) g.s = series(fam["series"], f.V->patch(), "family.series");
      if (fam.contains("lambda")) {
        if (!fam["lambda"].is_array()) throw InputError("family.lambda must be an array");
        for (const auto& e : fam["lambda"]) {
          const Polynomial l = expression(e, f.V->patch()->context(), "family.lambda");
          if (l.depends_on(f.V->patch()->fiber_mask())) throw InputError("family.lambda must not depend on fibers");
          g.lambda.push_back(NormalMultiSection::section(f.V->patch(), l));
        }
      }
      if (!f.V->patch()->context().find(g.time)) throw InputError("unknown time coordinate '" + g.time + "'");
      g.validate();
      f.family = g;
    }
    if (doc.contains("presymplectic")) f.presymplectic = presymplectic_block(doc["presymplectic"], f.truncation);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed field: ") + e.what());
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (!f.V && !f.presymplectic) throw InputError("file defines neither a structure nor a presymplectic block");
  return f;
}

StructureFile load_structure(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_structure(ss.str());
}

}  // namespace coiso::cli
