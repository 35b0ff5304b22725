#pragma once

// JSON input formats (quivers with actions, Cartan triples, presentations,
// algebra specs) and JSON dumps of the computed objects.

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "foldkit/algebra.hpp"
#include "foldkit/error.hpp"
#include "foldkit/field.hpp"
#include "foldkit/ideal.hpp"
#include "foldkit/presentation.hpp"
#include "foldkit/quiver.hpp"
#include "foldkit/skew.hpp"
#include "foldkit/weyl.hpp"

namespace foldkit::io {

using nlohmann::json;

using AnyField = std::variant<PrimeField, RationalField>;

/// "f2", "f3", "fN" for a prime N, or "q".
inline AnyField parse_field(const std::string& name) {
  if (name == "q" || name == "Q") return RationalField{};
  if (name.size() >= 2 && (name[0] == 'f' || name[0] == 'F')) {
    const auto digits = name.substr(1);
    if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 10)
      return PrimeField(static_cast<std::uint32_t>(std::stoull(digits)));
  }
  fail(ErrorKind::InvalidInput, "unknown field '" + name + "' (expected f2, f3, fN or q)");
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

namespace detail {

inline const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::InvalidInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    fail(ErrorKind::InvalidInput, std::string("malformed ") + what);
  }
}

}  // namespace detail

struct QuiverInput {
  Quiver quiver;
  std::optional<std::vector<QuiverAutomorphism>> generators;  // nullopt when no "action" key

  GroupAction action(std::size_t element_cap = GroupAction::kDefaultElementCap) const {
    if (!generators) fail(ErrorKind::InvalidInput, "input has no group action");
    return GroupAction(quiver, *generators, element_cap);
  }
};

/// Vertex and arrow maps are objects id -> id; unlisted ids are fixed.
inline QuiverAutomorphism parse_automorphism(const Quiver& q, const json& j) {
  auto g = QuiverAutomorphism::identity(q);
  if (j.contains("vertex_map"))
    for (const auto& [from, to] : detail::member(j, "vertex_map").items())
      g.vertex_map[q.vertex_index(from)] = q.vertex_index(detail::get<std::string>(to, "vertex_map"));
  if (j.contains("arrow_map"))
    for (const auto& [from, to] : detail::member(j, "arrow_map").items())
      g.arrow_map[q.arrow_index(from)] = q.arrow_index(detail::get<std::string>(to, "arrow_map"));
  validate_automorphism(q, g);
  return g;
}

inline Quiver parse_bare_quiver(const json& j) {
  Quiver q(detail::get<std::vector<std::string>>(detail::member(j, "vertices"), "vertices"));
  if (j.contains("arrows"))
    for (const auto& a : j.at("arrows"))
      q.add_arrow(detail::get<std::string>(detail::member(a, "id"), "arrow id"),
                  detail::get<std::string>(detail::member(a, "from"), "arrow source"),
                  detail::get<std::string>(detail::member(a, "to"), "arrow target"));
  return q;
}

inline QuiverInput parse_quiver(const json& j) {
  QuiverInput in{parse_bare_quiver(j), std::nullopt};
  if (j.contains("action")) {
    std::vector<QuiverAutomorphism> gens;
    const auto& action = j.at("action");
    if (action.contains("generators"))
      for (const auto& g : action.at("generators")) gens.push_back(parse_automorphism(in.quiver, g));
    in.generators = std::move(gens);
  }
  return in;
}

inline json quiver_to_json(const Quiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows())
    arrows.push_back({{"id", a.id}, {"from", q.vertex_id(a.source)}, {"to", q.vertex_id(a.target)}});
  return {{"vertices", q.vertices()}, {"arrows", arrows}};
}

inline CartanTriple parse_cartan(const json& j) {
  CartanTriple t;
  t.index = detail::get<std::vector<std::string>>(detail::member(j, "index"), "index");
  t.C = detail::get<std::vector<std::vector<int>>>(detail::member(j, "C"), "C");
  t.D = detail::get<std::vector<int>>(detail::member(j, "D"), "D");
  for (const auto& pair : detail::member(j, "Omega")) {
    auto ij = detail::get<std::vector<std::string>>(pair, "Omega pair");
    if (ij.size() != 2) fail(ErrorKind::InvalidInput, "Omega entries are pairs");
    auto find = [&](const std::string& s) {
      auto it = std::find(t.index.begin(), t.index.end(), s);
      if (it == t.index.end()) fail(ErrorKind::InvalidInput, "Omega refers to unknown index '" + s + "'");
      return static_cast<std::size_t>(it - t.index.begin());
    };
    t.omega.emplace_back(find(ij[0]), find(ij[1]));
  }
  t.validate();
  return t;
}

inline json cartan_to_json(const CartanTriple& t) {
  json omega = json::array();
  for (const auto& [i, j] : t.omega) omega.push_back({t.index[i], t.index[j]});
  return {{"index", t.index}, {"C", t.C}, {"D", t.D}, {"Omega", omega}};
}

/// Integer, or a string "n" / "n/d".
template <Field F>
typename F::value_type parse_coeff(const F& field, const json& c) {
  if (c.is_number_integer()) return field.from_int(c.get<long long>());
  if (c.is_string()) {
    const auto s = c.get<std::string>();
    const auto slash = s.find('/');
    try {
      const auto num = field.from_int(std::stoll(s.substr(0, slash)));
      if (slash == std::string::npos) return num;
      return field.mul(num, field.inv(field.from_int(std::stoll(s.substr(slash + 1)))));
    } catch (const std::logic_error&) {
    }
  }
  fail(ErrorKind::InvalidInput, "malformed coefficient " + c.dump());
}

/// {"quiver": {...}, "relations": [[{"coeff": c, "path": [arrow ids]}...]...]}.
/// Paths are written left to right and composed right to left.
template <Field F>
Presentation<F> parse_presentation(const json& j, const F& field) {
  Presentation<F> p{parse_bare_quiver(detail::member(j, "quiver")), {}, field};
  for (const auto& rel : detail::member(j, "relations")) {
    PathElement<F> r(field);
    for (const auto& term : rel) {
      const auto ids = detail::get<std::vector<std::string>>(detail::member(term, "path"), "path");
      if (ids.empty()) fail(ErrorKind::InvalidInput, "relation terms must be nontrivial paths");
      std::vector<std::size_t> word;
      for (const auto& id : ids) word.push_back(p.quiver.arrow_index(id));
      r.add_term(Path::of_word(p.quiver, word), parse_coeff(field, detail::member(term, "coeff")));
    }
    if (r.is_zero()) fail(ErrorKind::InvalidInput, "zero relation");
    p.relations.push_back(std::move(r));
  }
  return p;
}

template <Field F>
json presentation_to_json(const Presentation<F>& p) {
  json rels = json::array();
  for (const auto& r : p.relations) {
    json terms = json::array();
    for (const auto& [path, c] : r.terms()) {
      std::vector<std::string> ids;
      for (auto a : path.arrows) ids.push_back(p.quiver.arrow(a).id);
      terms.push_back({{"coeff", p.field.to_json(c)}, {"path", ids}});
    }
    rels.push_back(terms);
  }
  return {{"quiver", quiver_to_json(p.quiver)}, {"relations", rels}, {"field", p.field.descriptor()}};
}

/// {"kind": "preprojective", "quiver": ...}, {"kind": "gls_pi" | "gls_h",
/// "cartan": ...} or {"kind": "presentation", "quiver": ..., "relations": ...}.
template <Field F>
Presentation<F> parse_algebra_spec(const json& j, const F& field) {
  const auto kind = detail::get<std::string>(detail::member(j, "kind"), "kind");
  if (kind == "preprojective") return preprojective_presentation(parse_bare_quiver(detail::member(j, "quiver")), field);
  if (kind == "gls_pi") return gls_pi_presentation(parse_cartan(detail::member(j, "cartan")), field);
  if (kind == "gls_h") return gls_H_presentation(parse_cartan(detail::member(j, "cartan")), field);
  if (kind == "presentation") return parse_presentation(j, field);
  fail(ErrorKind::InvalidInput, "unknown algebra kind '" + kind + "'");
}

template <Field F>
json sparse_to_json(const F& field, const Vector<F>& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!field.is_zero(v[i])) out.push_back({i, field.to_json(v[i])});
  return out;
}

/// Basis labels, dimension and structure constants as [i, j, k, c] with b_i b_j = sum c b_k.
template <Field F>
json algebra_to_json(const FiniteDimAlgebra<F>& a) {
  const auto& field = a.field();
  json constants = json::array();
  for (std::size_t i = 0; i < a.dimension(); ++i)
    for (std::size_t j = 0; j < a.dimension(); ++j)
      for (const auto& t : a.basis_product(i, j)) constants.push_back({i, j, t.index, field.to_json(t.coeff)});
  json idempotents = json::array();
  for (const auto& e : a.idempotents()) idempotents.push_back(sparse_to_json(field, e));
  return {{"field", field.descriptor()},
          {"dimension", a.dimension()},
          {"basis", a.labels()},
          {"idempotents", idempotents},
          {"structure_constants", constants}};
}

template <Field F>
json skew_to_json(const SkewAlgebra<F>& s) {
  auto out = algebra_to_json(*s.algebra());
  out["group"] = s.group().labels;
  out["group_table"] = s.group().table;
  out["base_dimension"] = s.base()->dimension();
  return out;
}

template <Field F>
json monoid_to_json(const IdealMonoid<F>& m) {
  json elements = json::array();
  for (std::size_t k = 0; k < m.size(); ++k)
    elements.push_back({{"word", m.word_label(k)},
                        {"dimension", m.elements[k].dimension()},
                        {"is_zero_ideal", m.elements[k].is_zero()},
                        {"is_unit", m.elements[k].is_unit()}});
  return {{"size", m.size()},
          {"generators", m.generator_labels},
          {"elements", elements},
          {"table", m.table}};
}

inline std::vector<std::string> word_labels(const WeylGroup& w, const std::vector<std::size_t>& word) {
  std::vector<std::string> out;
  for (auto i : word) out.push_back(w.labels()[i]);
  return out;
}

inline json weyl_to_json(const WeylGroup& w) {
  json relations = json::array();
  for (const auto& r : check_presentation(w))
    relations.push_back({{"i", w.labels()[r.i]},
                         {"j", w.labels()[r.j]},
                         {"order", r.exponent},
                         {"group_relation", r.group_ok},
                         {"monoid_relation", r.monoid_ok}});
  return {{"labels", w.labels()},
          {"cartan", w.cartan()},
          {"order", w.order()},
          {"length_histogram", w.length_histogram()},
          {"longest_element", word_labels(w, w.reduced_word(w.longest_element()))},
          {"relations", relations}};
}

}  // namespace foldkit::io
