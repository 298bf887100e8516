#pragma once

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "points.hpp"

namespace liecat::io {

using json = nlohmann::ordered_json;

/// Schema violation with the JSON path of the offending node.
struct SchemaError : std::runtime_error {
  std::string path;
  SchemaError(std::string p, const std::string& msg)
      : std::runtime_error(p + ": " + msg), path(std::move(p)) {}
};

namespace detail {

inline const json& need(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(path + "." + key, "missing");
  return j.at(key);
}

inline std::string need_string(const json& j, const std::string& key, const std::string& path) {
  const json& v = need(j, key, path);
  if (!v.is_string()) throw SchemaError(path + "." + key, "expected a string");
  return v.get<std::string>();
}

inline void check_name(const std::string& name, const std::string& path) {
  if (name.empty()) throw SchemaError(path, "empty name");
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      throw SchemaError(path, "name '" + name + "' may only use letters, digits and _");
}

inline Scalar parse_scalar(const json& v, FieldTag f, const std::string& path) {
  if (v.is_number_integer()) return Scalar::from_int(f, v.get<long>());
  if (v.is_string()) {
    try {
      return Scalar::parse(f, v.get<std::string>());
    } catch (const ShapeError& e) {
      throw SchemaError(path, e.what());
    }
  }
  throw SchemaError(path, "scalar must be an integer or a \"p/q\" string");
}

}  // namespace detail

inline FieldTag parse_field(const std::string& s, const std::string& path) {
  if (s == "Q") return FieldTag::rationals();
  std::string body;
  if (s.rfind("Fp:", 0) == 0) body = s.substr(3);
  else if (s.size() > 1 && s[0] == 'F') body = s.substr(1);
  if (!body.empty()) {
    for (char c : body)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw SchemaError(path, "bad field '" + s + "'");
    if (body.size() > 3) throw SchemaError(path, "field modulus out of range");
    try {
      return FieldTag::prime(uint32_t(std::stoul(body)));
    } catch (const ShapeError& e) {
      throw SchemaError(path, e.what());
    }
  }
  throw SchemaError(path, "field must be \"Q\" or \"Fp:<p>\"");
}

inline CategoryInstance load_instance(const json& j, const std::string& path,
                                      const FieldTag* field_override = nullptr) {
  std::string cat = detail::need_string(j, "category", path);
  FieldTag f = field_override ? *field_override
                              : parse_field(detail::need_string(j, "field", path),
                                            path + ".field");
  if (cat == "vect") return CategoryInstance::vect(f);
  if (cat == "super") return CategoryInstance::super_cat(f);
  if (cat == "lp") return CategoryInstance::lp(f);
  if (cat == "chain") {
    const json& g = detail::need(j, "grading", path);
    if (!g.contains("min") || !g.contains("max"))
      throw SchemaError(path + ".grading", "chain grading needs min and max");
    return CategoryInstance::chain(f, g.at("min").get<int>(), g.at("max").get<int>());
  }
  if (cat == "colour") {
    const json& g = detail::need(j, "grading", path);
    const json& eps = detail::need(g, "epsilon", path + ".grading");
    std::vector<std::vector<int>> table;
    for (const auto& row : eps) table.push_back(row.get<std::vector<int>>());
    try {
      return CategoryInstance::colour(f, GradeGroup::colour_z2z2(table));
    } catch (const ShapeError& e) {
      throw SchemaError(path + ".grading.epsilon", e.what());
    }
  }
  throw SchemaError(path + ".category", "unknown category '" + cat + "'");
}

inline Degree parse_degree(const json& v, const CategoryInstance& cat, const std::string& path) {
  int rank = cat.grading.rank();
  if (v.is_null()) {
    if (rank == 0) return Degree{};
    throw SchemaError(path, "degree required in this instance");
  }
  if (v.is_number_integer()) {
    if (rank == 0 && v.get<int>() == 0) return Degree{};
    if (rank != 1) throw SchemaError(path, "degree must have " + std::to_string(rank) +
                                               " components");
    return Degree({v.get<int32_t>()});
  }
  if (v.is_array()) {
    std::vector<int32_t> c;
    for (const auto& e : v) c.push_back(e.get<int32_t>());
    if (int(c.size()) != rank)
      throw SchemaError(path, "degree must have " + std::to_string(rank) + " components");
    return Degree(std::move(c));
  }
  throw SchemaError(path, "degree must be an integer or an array of integers");
}

/// Loads a graded object node: category, field, basis, optional differential.
inline ObjPtr load_object(const json& j, const std::string& path,
                          const FieldTag* field_override = nullptr) {
  CategoryInstance cat = load_instance(j, path, field_override);
  const json& basis = detail::need(j, "basis", path);
  if (!basis.is_array()) throw SchemaError(path + ".basis", "expected an array");
  std::vector<BasisElt> elts;
  std::map<std::string, int> seen;
  for (size_t i = 0; i < basis.size(); ++i) {
    std::string bp = path + ".basis[" + std::to_string(i) + "]";
    const json& b = basis[i];
    std::string name = detail::need_string(b, "name", bp);
    detail::check_name(name, bp + ".name");
    if (!seen.emplace(name, int(i)).second)
      throw SchemaError(bp + ".name", "duplicate basis name '" + name + "'");
    Degree d = cat.grading.rank() == 0
                   ? Degree{}
                   : parse_degree(b.contains("degree") ? b.at("degree") : json(nullptr), cat,
                                  bp + ".degree");
    elts.push_back({std::move(name), std::move(d)});
  }
  std::optional<SpMat> diff;
  if (j.contains("differential")) {
    if (!cat.has_differential())
      throw SchemaError(path + ".differential", "this instance carries no differential");
    SpMat d(int(elts.size()), int(elts.size()), cat.field);
    const json& dd = j.at("differential");
    for (size_t i = 0; i < dd.size(); ++i) {
      std::string dp = path + ".differential[" + std::to_string(i) + "]";
      const json& t = dd[i];
      if (!t.is_array() || t.size() != 3) throw SchemaError(dp, "expected [from, to, scalar]");
      auto from = seen.find(t[0].get<std::string>());
      auto to = seen.find(t[1].get<std::string>());
      if (from == seen.end()) throw SchemaError(dp + "[0]", "unknown basis name");
      if (to == seen.end()) throw SchemaError(dp + "[1]", "unknown basis name");
      d.add_entry(to->second, from->second, detail::parse_scalar(t[2], cat.field, dp + "[2]"));
    }
    diff = std::move(d);
  }
  try {
    return make_object(cat, std::move(elts), std::move(diff));
  } catch (const ShapeError& e) {
    throw SchemaError(path, e.what());
  }
}

/// Loads {"algebra": <object>, "bracket": [[x, y, z, c]...]}. Pairs whose
/// reversed pair is not given explicitly are filled in by the sign rule
/// [y,x] = -eps(x,y)[x,y].
inline LieObject load_lie(const json& j, const std::string& path,
                          const FieldTag* field_override = nullptr) {
  ObjPtr carrier = load_object(detail::need(j, "algebra", path), path + ".algebra",
                               field_override);
  const auto& cat = carrier->cat();
  ObjPtr sq = tensor_objects(carrier, carrier);
  auto ti = liecat::detail::tensor_index(*carrier, *carrier);

  SpMat bm(carrier->dim(), sq->dim(), cat.field);
  std::vector<bool> given(size_t(carrier->dim()) * carrier->dim(), false);
  const json& br = detail::need(j, "bracket", path);
  if (!br.is_array()) throw SchemaError(path + ".bracket", "expected an array");
  for (size_t i = 0; i < br.size(); ++i) {
    std::string bp = path + ".bracket[" + std::to_string(i) + "]";
    const json& t = br[i];
    if (!t.is_array() || t.size() != 4) throw SchemaError(bp, "expected [x, y, z, scalar]");
    int xi = carrier->index_of(t[0].get<std::string>());
    int yi = carrier->index_of(t[1].get<std::string>());
    int zi = carrier->index_of(t[2].get<std::string>());
    if (xi < 0) throw SchemaError(bp + "[0]", "unknown basis name '" + t[0].get<std::string>() + "'");
    if (yi < 0) throw SchemaError(bp + "[1]", "unknown basis name '" + t[1].get<std::string>() + "'");
    if (zi < 0) throw SchemaError(bp + "[2]", "unknown basis name '" + t[2].get<std::string>() + "'");
    int q = ti.at(xi, yi);
    if (q < 0) throw SchemaError(bp, "pair is truncated away in this instance");
    Scalar c = detail::parse_scalar(t[3], cat.field, bp + "[3]");
    try {
      bm.add_entry(zi, q, c);
    } catch (const ShapeError&) {
      throw SchemaError(bp, "entry violates degree homogeneity");
    }
    given[size_t(xi) * carrier->dim() + yi] = true;
  }
  // antisymmetric completion for pairs not explicitly listed
  for (int xi = 0; xi < carrier->dim(); ++xi)
    for (int yi = 0; yi < carrier->dim(); ++yi) {
      if (!given[size_t(xi) * carrier->dim() + yi]) continue;
      if (given[size_t(yi) * carrier->dim() + xi]) continue;
      if (xi == yi) continue;
      int q = ti.at(xi, yi), qr = ti.at(yi, xi);
      if (q < 0 || qr < 0) continue;
      Scalar sign = -cat.grading.eps(cat.field, carrier->degree(xi), carrier->degree(yi));
      for (const auto& [z, c] : bm.col(q)) bm.add_entry(z, qr, sign * c);
      given[size_t(yi) * carrier->dim() + xi] = true;
    }
  try {
    return LieObject(carrier, Morphism(sq, carrier, cat.grading.zero(), std::move(bm)));
  } catch (const ShapeError& e) {
    throw SchemaError(path + ".bracket", e.what());
  }
}

/// Loads {"monoid": {"object": <object>, "table": [[a,b,c,s]...], "unit": [[name,s]...]}}.
inline MonoidObject load_monoid(const json& j, const std::string& path,
                                const FieldTag* field_override = nullptr) {
  ObjPtr carrier = load_object(detail::need(j, "object", path), path + ".object",
                               field_override);
  const auto& cat = carrier->cat();
  ObjPtr sq = tensor_objects(carrier, carrier);
  auto ti = liecat::detail::tensor_index(*carrier, *carrier);
  SpMat mm(carrier->dim(), sq->dim(), cat.field);
  const json& table = detail::need(j, "table", path);
  for (size_t i = 0; i < table.size(); ++i) {
    std::string tp = path + ".table[" + std::to_string(i) + "]";
    const json& t = table[i];
    if (!t.is_array() || t.size() != 4) throw SchemaError(tp, "expected [a, b, c, scalar]");
    int a = carrier->index_of(t[0].get<std::string>());
    int b = carrier->index_of(t[1].get<std::string>());
    int c = carrier->index_of(t[2].get<std::string>());
    if (a < 0) throw SchemaError(tp + "[0]", "unknown basis name");
    if (b < 0) throw SchemaError(tp + "[1]", "unknown basis name");
    if (c < 0) throw SchemaError(tp + "[2]", "unknown basis name");
    mm.add_entry(c, ti.at(a, b), detail::parse_scalar(t[3], cat.field, tp + "[3]"));
  }
  SpMat um(carrier->dim(), 1, cat.field);
  const json& unit = detail::need(j, "unit", path);
  for (size_t i = 0; i < unit.size(); ++i) {
    std::string up = path + ".unit[" + std::to_string(i) + "]";
    const json& t = unit[i];
    if (!t.is_array() || t.size() != 2) throw SchemaError(up, "expected [name, scalar]");
    int a = carrier->index_of(t[0].get<std::string>());
    if (a < 0) throw SchemaError(up + "[0]", "unknown basis name");
    um.add_entry(a, 0, detail::parse_scalar(t[1], cat.field, up + "[1]"));
  }
  try {
    return MonoidObject(carrier, Morphism(sq, carrier, cat.grading.zero(), std::move(mm)),
                        Morphism(unit_object(cat), carrier, cat.grading.zero(), std::move(um)));
  } catch (const ShapeError& e) {
    throw SchemaError(path, e.what());
  }
}

/// Loads a name-indexed linear map between two loaded carriers.
inline Morphism load_map(const json& j, const ObjPtr& src, const ObjPtr& tgt,
                         const std::string& path) {
  SpMat m(tgt->dim(), src->dim(), src->cat().field);
  if (!j.is_array()) throw SchemaError(path, "expected an array of [from, to, scalar]");
  for (size_t i = 0; i < j.size(); ++i) {
    std::string mp = path + "[" + std::to_string(i) + "]";
    const json& t = j[i];
    if (!t.is_array() || t.size() != 3) throw SchemaError(mp, "expected [from, to, scalar]");
    int from = src->index_of(t[0].get<std::string>());
    int to = tgt->index_of(t[1].get<std::string>());
    if (from < 0) throw SchemaError(mp + "[0]", "unknown basis name");
    if (to < 0) throw SchemaError(mp + "[1]", "unknown basis name");
    m.add_entry(to, from, detail::parse_scalar(t[2], src->cat().field, mp + "[2]"));
  }
  try {
    return Morphism(src, tgt, src->cat().grading.zero(), std::move(m));
  } catch (const ShapeError& e) {
    throw SchemaError(path, e.what());
  }
}

struct ActionData {
  LieObject actor;
  LieObject module;  // carries b_X; zero bracket for a plain module
  Morphism map;      // B (x) X -> X
};

/// {"action": {"actor": <lie>, "module": <lie>, "map": [[b, x, y, c]...]}}
inline ActionData load_action(const json& j, const std::string& path,
                              const FieldTag* field_override = nullptr) {
  LieObject actor = load_lie(detail::need(j, "actor", path), path + ".actor", field_override);
  LieObject module = load_lie(detail::need(j, "module", path), path + ".module",
                              field_override);
  if (actor.cat() != module.cat())
    throw SchemaError(path, "actor and module live in different instances");
  ObjPtr src = tensor_objects(actor.carrier, module.carrier);
  auto ti = liecat::detail::tensor_index(*actor.carrier, *module.carrier);
  SpMat mm(module.dim(), src->dim(), actor.cat().field);
  const json& map = detail::need(j, "map", path);
  for (size_t i = 0; i < map.size(); ++i) {
    std::string mp = path + ".map[" + std::to_string(i) + "]";
    const json& t = map[i];
    if (!t.is_array() || t.size() != 4)
      throw SchemaError(mp, "expected [actor, module, module, scalar]");
    int b = actor.carrier->index_of(t[0].get<std::string>());
    int xi = module.carrier->index_of(t[1].get<std::string>());
    int yi = module.carrier->index_of(t[2].get<std::string>());
    if (b < 0) throw SchemaError(mp + "[0]", "unknown actor basis name");
    if (xi < 0) throw SchemaError(mp + "[1]", "unknown module basis name");
    if (yi < 0) throw SchemaError(mp + "[2]", "unknown module basis name");
    mm.add_entry(yi, ti.at(b, xi), detail::parse_scalar(t[3], actor.cat().field, mp + "[3]"));
  }
  try {
    Morphism act(src, module.carrier, actor.cat().grading.zero(), std::move(mm));
    return ActionData{std::move(actor), std::move(module), std::move(act)};
  } catch (const ShapeError& e) {
    throw SchemaError(path + ".map", e.what());
  }
}

/// {"total": <lie>, "base": <lie>, "p": [[from,to,c]...], "s": [[from,to,c]...]}
inline Point load_point(const json& j, const std::string& path,
                        const FieldTag* field_override = nullptr) {
  LieObject total = load_lie(detail::need(j, "total", path), path + ".total", field_override);
  LieObject base = load_lie(detail::need(j, "base", path), path + ".base", field_override);
  if (total.cat() != base.cat())
    throw SchemaError(path, "total and base live in different instances");
  Morphism p = load_map(detail::need(j, "p", path), total.carrier, base.carrier, path + ".p");
  Morphism s = load_map(detail::need(j, "s", path), base.carrier, total.carrier, path + ".s");
  return Point(std::move(total), std::move(base), std::move(p), std::move(s));
}

inline json parse_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw SchemaError("$", "cannot open '" + filename + "'");
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("$", std::string("malformed JSON: ") + e.what());
  }
}

// ---- report serialization ----------------------------------------------

inline json law_to_json(const LawResult& l) {
  json j;
  j["law"] = l.law;
  j["pass"] = l.pass;
  if (l.guarded) j["guarded"] = true;
  if (!l.witness.empty()) j["witness"] = l.witness;
  if (!l.note.empty()) j["note"] = l.note;
  return j;
}

inline json report_to_json(const CheckReport& r) {
  json j;
  j["subject"] = r.subject;
  j["pass"] = r.pass();
  json laws = json::array();
  for (const auto& l : r.laws) laws.push_back(law_to_json(l));
  j["laws"] = laws;
  return j;
}

inline json morphism_to_json(const Morphism& m) {
  json entries = json::array();
  for (int j = 0; j < m.mat().cols(); ++j)
    for (const auto& [i, c] : m.mat().col(j))
      entries.push_back(json::array({m.src().name(j), m.tgt().name(i), c.str()}));
  return entries;
}

}  // namespace liecat::io
