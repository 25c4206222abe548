#pragma once

// JSON layouts:
//   algebra      {"dim": n, "matrix": [[scalar, ...], ...], "label": optional}
//   witness      {"from": label, "to": label, "g": [[laurent, ...], ...]}
//   deformation  {"base": algebra or label, "coeffs": [matrix, ...]}
// Scalars and Laurent polynomials are strings in the text grammar of
// scalars.hpp; algebra files may not mention t.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "evokit/catalog.hpp"

namespace evokit {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string index_path(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

inline const Json& require(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path.empty() ? "/" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "/" + key, "missing field");
  return *it;
}

template <class T, class ParseFn>
Matrix<T> parse_square(const Json& m, std::size_t n, const std::string& path, ParseFn&& parse) {
  if (!m.is_array()) throw SchemaError(path, "expected an array of rows");
  if (m.size() != n) throw SchemaError(path, "expected " + std::to_string(n) + " rows, found " + std::to_string(m.size()));
  Matrix<T> out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = m[i];
    std::string rp = index_path(path, i);
    if (!row.is_array()) throw SchemaError(rp, "expected an array");
    if (row.size() != n)
      throw SchemaError(rp, "expected " + std::to_string(n) + " entries, found " + std::to_string(row.size()));
    for (std::size_t j = 0; j < n; ++j) {
      std::string ep = index_path(rp, j);
      const Json& cell = row[j];
      std::string text;
      if (cell.is_string()) {
        text = cell.get<std::string>();
      } else if (cell.is_number_integer()) {
        text = std::to_string(cell.get<long long>());
      } else {
        throw SchemaError(ep, "expected a string or an integer");
      }
      try {
        out(i, j) = parse(text);
      } catch (const ParseError& e) {
        throw ParseError(ep + ": " + e.detail(), e.position());
      }
    }
  }
  return out;
}

inline std::size_t parse_dim(const Json& j, const std::string& path) {
  const Json& d = require(j, "dim", path);
  if (!d.is_number_integer() || d.get<long long>() < 1 || d.get<long long>() > 16)
    throw SchemaError(path + "/dim", "expected an integer between 1 and 16");
  return static_cast<std::size_t>(d.get<long long>());
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": invalid JSON", e.byte == 0 ? 0 : e.byte - 1);
  }
}

}  // namespace detail

inline Json scalar_matrix_json(const ScalarMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_scalar(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline Json rf_matrix_json(const RfMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_rational_fn(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline Json algebra_json(const EvolutionAlgebra& alg) {
  Json j;
  j["dim"] = alg.dim();
  j["matrix"] = scalar_matrix_json(alg.structure());
  if (!alg.label().empty()) j["label"] = alg.label();
  return j;
}

inline EvolutionAlgebra parse_algebra_json(const Json& j, const std::string& path = "") {
  std::size_t n = detail::parse_dim(j, path);
  ScalarMatrix m = detail::parse_square<CycScalar>(detail::require(j, "matrix", path), n, path + "/matrix",
                                                   [](const std::string& s) { return parse_scalar(s); });
  std::string label;
  if (auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) throw SchemaError(path + "/label", "expected a string");
    label = it->get<std::string>();
  }
  return EvolutionAlgebra(std::move(m), label);
}

inline EvolutionAlgebra parse_algebra_file(const std::string& path) {
  return parse_algebra_json(detail::read_json_file(path));
}

struct WitnessFile {
  std::optional<std::string> from;
  std::optional<std::string> to;
  BasisChangeFamily family;
};

inline Json family_json(const BasisChangeFamily& fam) {
  Json rows = Json::array();
  for (const auto& row : fam.to_strings()) rows.push_back(row);
  return rows;
}

inline WitnessFile parse_witness_json(const Json& j) {
  WitnessFile w;
  const Json& g = detail::require(j, "g", "");
  if (!g.is_array() || g.empty()) throw SchemaError("/g", "expected a nonempty array of rows");
  w.family.g = detail::parse_square<LaurentPoly>(g, g.size(), "/g",
                                                 [](const std::string& s) { return parse_laurent(s); });
  for (const char* key : {"from", "to"}) {
    auto it = j.find(key);
    if (it == j.end()) continue;
    if (!it->is_string()) throw SchemaError(std::string("/") + key, "expected a label");
    (std::string(key) == "from" ? w.from : w.to) = it->get<std::string>();
  }
  return w;
}

inline WitnessFile parse_witness_file(const std::string& path) {
  return parse_witness_json(detail::read_json_file(path));
}

inline Json witness_json(const WitnessEntry& w) {
  Json j;
  j["from"] = w.from;
  j["to"] = w.to;
  j["g"] = family_json(w.family);
  return j;
}

/// A catalog label or an algebra object.
inline EvolutionAlgebra parse_algebra_ref(const Json& j, const std::string& path) {
  if (j.is_string()) return Catalog::instance().algebra(j.get<std::string>());
  return parse_algebra_json(j, path);
}

inline Deformation parse_deformation_json(const Json& j) {
  Deformation d;
  d.base = parse_algebra_ref(detail::require(j, "base", ""), "/base");
  const Json& coeffs = detail::require(j, "coeffs", "");
  if (!coeffs.is_array()) throw SchemaError("/coeffs", "expected an array of matrices");
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    d.coeffs.push_back(detail::parse_square<CycScalar>(coeffs[k], d.base.dim(), detail::index_path("/coeffs", k),
                                                       [](const std::string& s) { return parse_scalar(s); }));
  return d;
}

inline Deformation parse_deformation_file(const std::string& path) {
  return parse_deformation_json(detail::read_json_file(path));
}

inline Json deformation_json(const Deformation& d) {
  Json j;
  j["base"] = algebra_json(d.base);
  j["coeffs"] = Json::array();
  for (const auto& c : d.coeffs) j["coeffs"].push_back(scalar_matrix_json(c));
  return j;
}

inline Json type_json(const TypeSeq& t) { return t.parts; }

inline Json subspace_json(const Subspace& s, std::size_t n) {
  Json out = Json::array();
  for (const auto& v : s.vectors()) out.push_back(scalar_matrix_json(unflatten(n, v)));
  return out;
}

inline Json positions_json(const std::vector<std::pair<std::size_t, std::size_t>>& zero_based) {
  Json out = Json::array();
  for (auto [i, j] : zero_based) out.push_back({i + 1, j + 1});
  return out;
}

inline Json cohomology_json(const EvolutionAlgebra& alg, const CohomologyReport& r) {
  Json j;
  j["dim"] = alg.dim();
  j["b2_dim"] = r.b2_dim;
  j["h2_dim"] = r.h2_dim;
  j["b2_basis"] = subspace_json(r.b2, alg.dim());
  j["h2_positions"] = positions_json(r.positions);
  j["h2_representatives"] = Json::array();
  for (const auto& m : r.representatives) j["h2_representatives"].push_back(scalar_matrix_json(m));
  return j;
}

inline Json relabeling_json(const Relabeling& r) {
  Json j;
  j["permutation"] = Json::array();
  for (auto p : r.permutation) j["permutation"].push_back(p + 1);
  j["scalings"] = Json::array();
  for (const auto& s : r.scalings) j["scalings"].push_back(format_scalar(s));
  return j;
}

inline Json degeneration_json(const DegenerationReport& r) {
  Json j;
  j["status"] = status_name(r.status);
  j["acted"] = rf_matrix_json(r.acted);
  if (r.limit_algebra) j["limit"] = scalar_matrix_json(r.limit_algebra->structure());
  j["offending"] = Json::array();
  for (const auto& e : r.offending) {
    Json o;
    o["row"] = e.row + 1;
    o["col"] = e.col + 1;
    if (r.status == DegenerationStatus::no_limit) o["valuation"] = e.valuation;
    j["offending"].push_back(o);
  }
  if (r.relabeling) j["relabeling"] = relabeling_json(*r.relabeling);
  j["pole_warnings"] = Json::array();
  for (const auto& p : r.pole_warnings) j["pole_warnings"].push_back(format_rational(p));
  if (r.pole_check_skipped) j["pole_check_skipped"] = true;
  return j;
}

inline Json obstruction_json(const ObstructionReport& r) {
  auto pair = [](auto a, auto b) { return Json::array({a, b}); };
  Json j;
  j["ann_dims"] = pair(r.ann_dims.first, r.ann_dims.second);
  j["ann_ok"] = r.ann_ok;
  j["types"] = pair(type_json(r.types.first), type_json(r.types.second));
  j["type_ok"] = r.type_ok;
  j["square_dims"] = pair(r.square_dims.first, r.square_dims.second);
  j["square_ok"] = r.square_ok;
  j["b2_dims"] = pair(r.b2_dims.first, r.b2_dims.second);
  j["b2_ok"] = r.b2_ok;
  j["h2_dims"] = pair(r.h2_dims.first, r.h2_dims.second);
  j["h2_ok"] = r.h2_ok;
  j["all_pass"] = r.all_pass;
  return j;
}

inline Json certificate_json(const NonrigidityCertificate& c) {
  Json j;
  j["branch"] = branch_name(c.branch);
  j["nu1"] = scalar_matrix_json(c.deformation.nu1);
  if (c.sign_vector) j["sign_vector"] = *c.sign_vector;
  j["trivial"] = false;
  return j;
}

inline Json catalog_json() {
  const Catalog& cat = Catalog::instance();
  Json j;
  j["algebras"] = Json::array();
  for (const auto& e : cat.all()) {
    Json a = algebra_json(e.algebra);
    a["label"] = e.label;
    if (!e.parameters.empty()) {
      Json p;
      for (const auto& [k, v] : e.parameters) p[k] = format_rational(v);
      a["parameters"] = p;
    }
    Json ex = Json::object();
    if (e.expected.type) ex["type"] = type_json(*e.expected.type);
    if (e.expected.square_dim) ex["square_dim"] = *e.expected.square_dim;
    if (e.expected.b2_generators) {
      ex["b2_generators"] = Json::array();
      for (const auto& g : *e.expected.b2_generators) ex["b2_generators"].push_back(scalar_matrix_json(g));
    }
    if (e.expected.h2_positions) {
      Json pos = Json::array();
      for (auto [r, c] : *e.expected.h2_positions) pos.push_back({r, c});
      ex["h2_positions"] = pos;
    }
    a["expected"] = ex;
    j["algebras"].push_back(a);
  }
  j["witnesses"] = Json::array();
  for (const auto& w : cat.witnesses()) j["witnesses"].push_back(witness_json(w));
  return j;
}

}  // namespace evokit
