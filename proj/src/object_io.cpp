#include "qcat/object_io.hpp"

#include <fstream>

namespace qcat {

using nlohmann::json;

namespace {

std::string at(const std::string& base, const std::string& key) { return base.empty() ? key : base + "." + key; }
std::string idx(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(ErrorKind::Parse, at(path, key), "missing field");
  return obj.at(key);
}

Scalar scalar_field(const json& value, const std::string& path) {
  if (value.is_number_integer()) return Scalar(value.get<long>());
  if (!value.is_string()) throw InputError(ErrorKind::Parse, path, "expected a rational string \"p/q\"");
  try {
    return parse_scalar(value.get<std::string>());
  } catch (const Error& e) {
    throw InputError(ErrorKind::Parse, path, e.what());
  }
}

Matrix matrix_field(const json& value, std::size_t rows, std::size_t cols, const std::string& path) {
  if (!value.is_array() || value.size() != rows)
    throw InputError(ErrorKind::Parse, path, "expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = value[r];
    if (!row.is_array() || row.size() != cols)
      throw InputError(ErrorKind::Parse, idx(path, r), "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_field(row[c], idx(idx(path, r), c));
  }
  return m;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class F>
QuantumObject with_path(const std::string& path, F&& build) {
  try {
    return build();
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(e.kind(), path, e.what());
  }
}

}  // namespace

QuantumObject object_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError(ErrorKind::Parse, "$", "object definition must be a JSON object");
  const json& version = require(doc, "format_version", "");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion)
    throw InputError(ErrorKind::Parse, "format_version", "unsupported version (expected 1)");

  const json& dim_field = require(doc, "dim", "");
  if (!dim_field.is_number_integer() || dim_field.get<long>() < 1)
    throw InputError(ErrorKind::Parse, "dim", "expected a positive integer");
  const std::size_t n = dim_field.get<std::size_t>();

  std::vector<int> parities(n, 0);
  if (doc.contains("parities")) {
    const json& p = doc.at("parities");
    if (!p.is_array() || p.size() != n)
      throw InputError(ErrorKind::Parse, "parities", "expected " + std::to_string(n) + " bits");
    for (std::size_t i = 0; i < n; ++i) {
      if (!p[i].is_number_integer() || (p[i].get<int>() != 0 && p[i].get<int>() != 1))
        throw InputError(ErrorKind::Parse, idx("parities", i), "parity must be 0 or 1");
      parities[i] = p[i].get<int>();
    }
  }
  GradedSpace space(parities);

  const json& kind_field = require(doc, "kind", "");
  if (!kind_field.is_string()) throw InputError(ErrorKind::Parse, "kind", "expected a string");
  const std::string kind = kind_field.get<std::string>();

  QuantumObject object = [&]() -> QuantumObject {
    if (kind == "classical") return make_classical(space);
    const json& params = require(doc, "params", "");
    if (kind == "sudbery") {
      Matrix q = matrix_field(require(params, "Q", "params"), n, n, "params.Q");
      Matrix p = matrix_field(require(params, "P", "params"), n, n, "params.P");
      return with_path("params", [&] { return make_sudbery(space, q, p); });
    }
    if (kind == "normalized") {
      Matrix q = matrix_field(require(params, "Q", "params"), n, n, "params.Q");
      const json& eps = require(params, "epsilon", "params");
      if (!eps.is_number_integer() || (eps.get<int>() != 1 && eps.get<int>() != -1))
        throw InputError(ErrorKind::BadParameters, "params.epsilon", "must be +1 or -1");
      Scalar lambda = scalar_field(require(params, "lambda", "params"), "params.lambda");
      if (lambda == 0)
        throw InputError(ErrorKind::BadParameters, "params.lambda", "lambda must be nonzero (lambda != 0, +-i)");
      Matrix p(n, n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) p(a, b) = 1 / q(b, a);
      if (auto why = sudbery_violation(space, q, p); !why.empty())
        throw InputError(ErrorKind::BadParameters, "params.Q", why);
      return with_path("params", [&] { return make_normalized(space, q, eps.get<int>(), lambda); });
    }
    if (kind == "general") {
      const json& comps = require(params, "components", "params");
      if (!comps.is_array() || comps.size() < 2)
        throw InputError(ErrorKind::ComponentCountMismatch, "params.components", "need at least two components");
      std::vector<Matrix> components;
      for (std::size_t k = 0; k < comps.size(); ++k) {
        const std::string path = idx("params.components", k);
        if (!comps[k].is_array()) throw InputError(ErrorKind::Parse, path, "expected a list of vectors");
        components.push_back(matrix_field(comps[k], comps[k].size(), n * n, path));
      }
      return with_path("params.components", [&] { return make_general(space, std::move(components)); });
    }
    throw InputError(ErrorKind::Parse, "kind", "unknown kind '" + kind + "'");
  }();
  if (doc.contains("name") && doc.at("name").is_string()) object.name = doc.at("name").get<std::string>();
  return object;
}

QuantumObject load_object_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(ErrorKind::Parse, path, "cannot open file");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw InputError(ErrorKind::Parse, path, std::string("invalid JSON: ") + e.what());
  }
  QuantumObject obj = object_from_json(doc);
  if (obj.name.empty()) obj.name = path;
  return obj;
}

json object_to_json(const QuantumObject& object) {
  json out;
  out["format_version"] = kFormatVersion;
  if (!object.name.empty()) out["name"] = object.name;
  out["dim"] = object.dim();
  out["parities"] = object.space().parities();
  out["kind"] = object_kind_name(object.kind());
  switch (object.kind()) {
    case ObjectKind::Classical:
      break;
    case ObjectKind::Sudbery:
      out["params"] = {{"Q", matrix_json(object.sudbery()->q)}, {"P", matrix_json(object.sudbery()->p)}};
      break;
    case ObjectKind::Normalized:
      out["params"] = {{"Q", matrix_json(object.normalized()->q)},
                       {"epsilon", object.normalized()->epsilon},
                       {"lambda", to_string(object.normalized()->lambda)}};
      break;
    case ObjectKind::General: {
      json comps = json::array();
      for (std::size_t k = 0; k < object.component_count(); ++k) comps.push_back(matrix_json(object.component(k)));
      out["params"] = {{"components", comps}};
      break;
    }
  }
  return out;
}

json relations_to_json(const RelationSet& relations) {
  json letters = json::array();
  for (const auto& g : relations.alphabet.letters)
    letters.push_back({{"name", g.name}, {"row", g.row + 1}, {"col", g.col + 1}, {"parity", g.parity}});
  json rels = json::array();
  for (const auto& rel : canonical_relations(relations)) {
    json terms = json::array();
    for (auto it = rel.terms().rbegin(); it != rel.terms().rend(); ++it) {
      std::string word;
      for (auto x : it->first) word += (word.empty() ? "" : " ") + relations.alphabet.letters[x].name;
      terms.push_back({{"word", word}, {"coeff", to_string(it->second)}});
    }
    rels.push_back({{"text", rel.to_string(relations.alphabet) + " = 0"}, {"terms", terms}});
  }
  return {{"generators", letters}, {"rank", relations.rank()}, {"relations", rels}};
}

json verdict_to_json(const PBWVerdict& v) {
  json out;
  out["criterion_holds"] = v.criterion_holds;
  out["reason"] = v.reason;
  out["constant_source"] = v.constant_source ? json(to_string(*v.constant_source)) : json(nullptr);
  out["constant_target"] = v.constant_target ? json(to_string(*v.constant_target)) : json(nullptr);
  auto ordering = [](const std::optional<std::vector<std::size_t>>& o) -> json {
    if (!o) return nullptr;
    json arr = json::array();
    for (auto i : *o) arr.push_back(i + 1);
    return arr;
  };
  out["ordering_source"] = ordering(v.ordering_source);
  out["ordering_target"] = ordering(v.ordering_target);
  json dims = json::array();
  for (const auto& d : v.oracle_dims)
    dims.push_back({{"degree", d.degree}, {"computed", d.computed}, {"classical", d.classical}});
  out["oracle_dims"] = dims;
  return out;
}

}  // namespace qcat
