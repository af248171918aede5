#pragma once

#include "qcat/pbw.hpp"
#include "qcat/quantum_object.hpp"

#include <json.hpp>

#include <string>

namespace qcat {

inline constexpr int kFormatVersion = 1;

/// Input file problem, with the JSON path of the offending field.
class InputError : public Error {
 public:
  InputError(ErrorKind kind, std::string path, const std::string& message)
      : Error(kind, path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Object definition file:
///   { "format_version": 1, "name": "...", "dim": n, "parities": [0, 1, ...],
///     "kind": "classical" | "sudbery" | "normalized" | "general",
///     "params": { "Q": [["1", "2/3"], ...], "P": [...] }          (sudbery)
///               { "Q": [...], "epsilon": -1, "lambda": "5" }        (normalized)
///               { "components": [[["1", "0", ...], ...], ...] }     (general) }
/// Rationals are strings "p" or "p/q".
QuantumObject object_from_json(const nlohmann::json& doc);
QuantumObject load_object_file(const std::string& path);
nlohmann::json object_to_json(const QuantumObject& object);

nlohmann::json relations_to_json(const RelationSet& relations);
nlohmann::json verdict_to_json(const PBWVerdict& verdict);

}  // namespace qcat
