#pragma once

// JSON forms. Rationals are strings "p/q" (plain integers are accepted on
// input). Matrices are arrays of rows, tensors are T[i][j][k].

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dialg/cohomology.hpp"
#include "dialg/deformations.hpp"
#include "dialg/dialgebra.hpp"
#include "dialg/error.hpp"
#include "dialg/extensions.hpp"
#include "dialg/oriented.hpp"
#include "dialg/trees.hpp"

namespace dialg::io {

using Json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Parse, where + ": " + what);
}

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing key '") + key + "'");
  return *it;
}

inline std::size_t count(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    bad(where, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

}  // namespace detail

inline Rational rational_from_json(const Json& j, const std::string& where = "rational") {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.dump());
  detail::bad(where, "expected a rational string");
}

inline Json to_json(const Rational& x) { return format_rational(x); }

inline Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

inline Vector vector_from_json(const Json& j, const std::string& where = "vector") {
  if (!j.is_array()) detail::bad(where, "expected an array");
  Vector v;
  for (const auto& x : j) v.push_back(rational_from_json(x, where));
  return v;
}

inline Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

inline Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows) detail::bad(where, "expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) detail::bad(where, "expected rows of length " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c], where);
  }
  return m;
}

inline Json to_json(const Tensor3& t) {
  const std::size_t d = t.dim();
  Json out = Json::array();
  for (std::size_t i = 0; i < d; ++i) {
    Json a = Json::array();
    for (std::size_t j = 0; j < d; ++j) {
      Json b = Json::array();
      for (std::size_t k = 0; k < d; ++k) b.push_back(to_json(t.at(i, j, k)));
      a.push_back(std::move(b));
    }
    out.push_back(std::move(a));
  }
  return out;
}

inline Tensor3 tensor_from_json(const Json& j, std::size_t d, const std::string& where) {
  Tensor3 t(d);
  if (!j.is_array() || j.size() != d) detail::bad(where, "expected a " + std::to_string(d) + "x" + std::to_string(d) + "x" + std::to_string(d) + " tensor");
  for (std::size_t a = 0; a < d; ++a) {
    if (!j[a].is_array() || j[a].size() != d) detail::bad(where, "tensor slice has the wrong length");
    for (std::size_t b = 0; b < d; ++b) {
      if (!j[a][b].is_array() || j[a][b].size() != d) detail::bad(where, "tensor fibre has the wrong length");
      for (std::size_t c = 0; c < d; ++c) t.at(a, b, c) = rational_from_json(j[a][b][c], where);
    }
  }
  return t;
}

inline Json to_json(const Tree& t) {
  if (t.is_leaf()) return Json::array({0});
  Json out = Json::array();
  for (int x : t.word()) out.push_back(x);
  return out;
}

inline Tree tree_from_json(const Json& j) {
  if (!j.is_array()) detail::bad("tree", "expected a word array");
  std::vector<int> w;
  for (const auto& x : j) {
    if (!x.is_number_integer()) detail::bad("tree", "word entries must be integers");
    w.push_back(x.get<int>());
  }
  if (w == std::vector<int>{0}) return Tree::leaf();
  return Tree::from_word(std::move(w));
}

inline Json to_json(const Dialgebra& D) {
  return Json{{"dim", D.dim()}, {"left", to_json(D.left)}, {"right", to_json(D.right)}};
}

/// Structure constants only; the axioms are checked separately.
inline Dialgebra dialgebra_from_json(const Json& j) {
  const std::size_t d = detail::count(detail::field(j, "dim", "dialgebra"), "dialgebra.dim");
  if (d == 0) detail::bad("dialgebra.dim", "dimension must be positive");
  return Dialgebra(tensor_from_json(detail::field(j, "left", "dialgebra"), d, "dialgebra.left"),
                   tensor_from_json(detail::field(j, "right", "dialgebra"), d, "dialgebra.right"));
}

inline Json to_json(const OrientedGroup& G) {
  Json table = Json::array();
  for (const auto& row : G.table) table.push_back(row);
  return Json{{"order", G.order()}, {"table", table}, {"epsilon", G.epsilon}};
}

inline OrientedGroup group_from_json(const Json& j) {
  const std::size_t m = detail::count(detail::field(j, "order", "group"), "group.order");
  const Json& table = detail::field(j, "table", "group");
  const Json& eps = detail::field(j, "epsilon", "group");
  if (!table.is_array() || table.size() != m) detail::bad("group.table", "expected " + std::to_string(m) + " rows");
  if (!eps.is_array() || eps.size() != m) detail::bad("group.epsilon", "expected " + std::to_string(m) + " values");
  OrientedGroup G;
  for (const auto& row : table) {
    if (!row.is_array() || row.size() != m) detail::bad("group.table", "rows must have length " + std::to_string(m));
    std::vector<std::size_t> r;
    for (const auto& x : row) r.push_back(detail::count(x, "group.table"));
    G.table.push_back(std::move(r));
  }
  for (const auto& x : eps) {
    if (!x.is_number_integer()) detail::bad("group.epsilon", "values must be integers");
    G.epsilon.push_back(x.get<int>());
  }
  return G;
}

inline Json action_to_json(const std::vector<Matrix>& action) {
  Json out = Json::array();
  for (const auto& m : action) out.push_back(to_json(m));
  return out;
}

inline std::vector<Matrix> action_from_json(const Json& j, std::size_t m, std::size_t d, const std::string& where) {
  if (!j.is_array() || j.size() != m) detail::bad(where, "expected one matrix per group element (" + std::to_string(m) + ")");
  std::vector<Matrix> out;
  for (const auto& x : j) out.push_back(matrix_from_json(x, d, d, where));
  return out;
}

inline Json to_json(const Degree1Pair& p) {
  return Json{{"alpha", action_to_json(p.alpha)}, {"beta_l", to_json(p.beta_l)}, {"beta_r", to_json(p.beta_r)}};
}

inline Degree1Pair cocycle_from_json(const Json& j, std::size_t m, std::size_t d) {
  return {action_from_json(detail::field(j, "alpha", "cocycle"), m, d, "cocycle.alpha"),
          tensor_from_json(detail::field(j, "beta_l", "cocycle"), d, "cocycle.beta_l"),
          tensor_from_json(detail::field(j, "beta_r", "cocycle"), d, "cocycle.beta_r")};
}

inline Json to_json(const SingularExtension& E) {
  return Json{{"dialgebra", to_json(E.total.base)},
              {"action", action_to_json(E.total.action)},
              {"inclusion", to_json(E.inclusion)},
              {"projection", to_json(E.projection)}};
}

inline SingularExtension extension_from_json(const Json& j, const OrientedGroup& G, std::size_t d) {
  SingularExtension E;
  E.total.base = dialgebra_from_json(detail::field(j, "dialgebra", "extension"));
  if (E.total.dim() != 2 * d) detail::bad("extension.dialgebra", "dimension must be " + std::to_string(2 * d));
  E.total.group = G;
  E.total.action = action_from_json(detail::field(j, "action", "extension"), G.order(), 2 * d, "extension.action");
  E.inclusion = matrix_from_json(detail::field(j, "inclusion", "extension"), 2 * d, d, "extension.inclusion");
  E.projection = matrix_from_json(detail::field(j, "projection", "extension"), d, 2 * d, "extension.projection");
  return E;
}

inline Json to_json(const TruncatedDeformation& def) {
  Json ml = Json::array(), mr = Json::array(), phi = Json::array();
  for (const auto& t : def.ml) ml.push_back(to_json(t));
  for (const auto& t : def.mr) mr.push_back(to_json(t));
  for (const auto& level : def.phi) phi.push_back(action_to_json(level));
  return Json{{"order", def.order}, {"ml", ml}, {"mr", mr}, {"phi", phi}};
}

inline TruncatedDeformation deformation_from_json(const Json& j, std::size_t m, std::size_t d,
                                                  const std::string& where = "deformation") {
  TruncatedDeformation def;
  def.order = detail::count(detail::field(j, "order", where), where + ".order");
  for (const char* key : {"ml", "mr", "phi"}) {
    const Json& arr = detail::field(j, key, where);
    if (!arr.is_array() || arr.size() != def.order + 1) {
      detail::bad(where + "." + key, "expected order + 1 = " + std::to_string(def.order + 1) + " terms");
    }
  }
  for (const auto& t : j["ml"]) def.ml.push_back(tensor_from_json(t, d, where + ".ml"));
  for (const auto& t : j["mr"]) def.mr.push_back(tensor_from_json(t, d, where + ".mr"));
  for (const auto& level : j["phi"]) def.phi.push_back(action_from_json(level, m, d, where + ".phi"));
  return def;
}

inline Json to_json(const DeformationEquivalence& eq) {
  return Json{{"order", eq.order}, {"psi", action_to_json(eq.psi)}};
}

inline DeformationEquivalence equivalence_from_json(const Json& j, std::size_t d) {
  DeformationEquivalence eq;
  eq.order = detail::count(detail::field(j, "order", "equivalence"), "equivalence.order");
  eq.psi = action_from_json(detail::field(j, "psi", "equivalence"), eq.order + 1, d, "equivalence.psi");
  return eq;
}

inline Json to_json(const CheckReport& report) {
  Json clauses = Json::array();
  for (const auto& c : report.clauses) {
    Json item{{"clause", c.clause}, {"passed", c.passed}};
    if (!c.passed) {
      item["witness"] = c.witness;
      item["detail"] = c.detail;
    }
    clauses.push_back(std::move(item));
  }
  return Json{{"ok", report.ok()}, {"clauses", clauses}};
}

/// Cohomology representatives of H~^n split into their (p,q) blocks.
inline Json total_element_to_json(const TotalDegreeElement& e) {
  Json out = Json::object();
  for (const auto& c : e.components) out[std::to_string(c.p) + "," + std::to_string(c.q)] = to_json(c.coeffs);
  return out;
}

/// Engine limits from the "config" section; values may only tighten the
/// built-in caps.
inline EngineConfig config_from_json(const Json& j) {
  EngineConfig cfg;
  if (!j.is_object()) detail::bad("config", "expected an object");
  auto limit = [&j](const char* key, std::size_t& slot) {
    auto it = j.find(key);
    if (it == j.end()) return;
    const std::size_t v = detail::count(*it, std::string("config.") + key);
    if (v > slot) throw Error(ErrorKind::Resource, std::string("config.") + key + " exceeds the built-in cap " + std::to_string(slot));
    slot = v;
  };
  limit("max_degree", cfg.max_degree);
  limit("max_tree_level", cfg.max_tree_level);
  limit("max_group_order", cfg.max_group_order);
  limit("max_dim", cfg.max_dim);
  limit("max_cells", cfg.max_cells);
  if (auto it = j.find("sign_exponent"); it != j.end()) {
    if (*it == "default") cfg.sigma = sign_exponent_default;
    else if (*it == "alternative") cfg.sigma = sign_exponent_alternative;
    else detail::bad("config.sign_exponent", "expected \"default\" or \"alternative\"");
  }
  return cfg;
}

/// Parsed input bundle. Absent group and action mean the trivial group.
struct Bundle {
  std::optional<Dialgebra> dialgebra;
  OrientedGroup group = OrientedGroup::trivial();
  bool has_group = false;
  std::optional<std::vector<Matrix>> action;
  std::optional<Degree1Pair> cocycle;
  std::optional<SingularExtension> extension;
  std::optional<Matrix> section;
  std::optional<TruncatedDeformation> deformation;
  std::optional<TruncatedDeformation> deformation2;
  std::optional<DeformationEquivalence> equivalence;
  EngineConfig config;

  OrientedDialgebra oriented() const {
    require(dialgebra.has_value(), ErrorKind::Parse, "bundle has no dialgebra");
    OrientedDialgebra OD{*dialgebra, group, {}};
    if (action) OD.action = *action;
    else for (std::size_t g = 0; g < group.order(); ++g) OD.action.push_back(Matrix::identity(dialgebra->dim()));
    return OD;
  }
};

inline Bundle bundle_from_json(const Json& j) {
  if (!j.is_object()) detail::bad("bundle", "expected a JSON object");
  Bundle b;
  if (auto it = j.find("config"); it != j.end()) b.config = config_from_json(*it);
  if (auto it = j.find("dialgebra"); it != j.end()) b.dialgebra = dialgebra_from_json(*it);
  if (auto it = j.find("group"); it != j.end()) {
    b.group = group_from_json(*it);
    b.has_group = true;
  }
  const bool needs_base = j.contains("action") || j.contains("cocycle") || j.contains("extension") ||
                          j.contains("section") || j.contains("deformation") || j.contains("deformation2") ||
                          j.contains("equivalence");
  if (needs_base && !b.dialgebra) detail::bad("bundle", "sections other than group need a dialgebra");
  if (!b.dialgebra) return b;
  const std::size_t d = b.dialgebra->dim();
  const std::size_t m = b.group.order();
  if (auto it = j.find("action"); it != j.end()) b.action = action_from_json(*it, m, d, "action");
  else if (b.has_group && m > 1) detail::bad("bundle", "a nontrivial group needs an action");
  if (auto it = j.find("cocycle"); it != j.end()) b.cocycle = cocycle_from_json(*it, m, d);
  if (auto it = j.find("extension"); it != j.end()) b.extension = extension_from_json(*it, b.group, d);
  if (auto it = j.find("section"); it != j.end()) b.section = matrix_from_json(*it, 2 * d, d, "section");
  if (auto it = j.find("deformation"); it != j.end()) b.deformation = deformation_from_json(*it, m, d);
  if (auto it = j.find("deformation2"); it != j.end()) b.deformation2 = deformation_from_json(*it, m, d, "deformation2");
  if (auto it = j.find("equivalence"); it != j.end()) b.equivalence = equivalence_from_json(*it, d);
  return b;
}

inline Bundle bundle_from_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
  return bundle_from_json(j);
}

/// Dialgebra, group and action as a bundle fragment.
inline Json base_to_json(const OrientedDialgebra& OD) {
  return Json{{"dialgebra", to_json(OD.base)}, {"group", to_json(OD.group)}, {"action", action_to_json(OD.action)}};
}

}  // namespace dialg::io
