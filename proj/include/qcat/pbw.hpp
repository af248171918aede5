#pragma once

#include "qcat/hom_algebra.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qcat {

/// Dimension of the degree-d part of the free supercommutative algebra on
/// `even` even and `odd` odd generators.
std::uint64_t classical_dimension(std::size_t even, std::size_t odd, std::size_t degree);
std::uint64_t classical_dimension(const Alphabet& alphabet, std::size_t degree);

inline constexpr std::uint64_t kOracleWordLimit = 1'000'000;

/// dim T_d - rank(sum_i U^{⊗i} ⊗ R ⊗ U^{⊗(d-2-i)}), computed exactly.
/// Throws Error(TooLarge) when letters^d exceeds `word_limit`.
std::uint64_t dimension_oracle(const RelationSet& relations, std::size_t degree,
                               std::uint64_t word_limit = kOracleWordLimit);
inline std::uint64_t dimension_oracle(const HomAlgebra& h, std::size_t degree) {
  return dimension_oracle(h.relations, degree);
}

/// c with p^{AB} = q^{AB} c^{sign(B-A)} once the basis is listed in
/// `ordering` (ordering[i] is the original index placed at position i).
struct QuantumConstant {
  Scalar c = 1;
  std::vector<std::size_t> ordering;
  /// dim <= 1: no ratio exists and any constant fits.
  bool unconstrained = false;
};

/// Ratio extraction and tournament sort.  Returns nullopt when the ratios
/// p^{AB}/q^{AB} are not all in {c, 1/c} for one c, or their orientation is
/// not transitive.  Throws Error(BadParameters) for objects without Sudbery
/// parameters.
std::optional<QuantumConstant> pbw_extract_constant(const QuantumObject& object);

/// Orientation matrix: +1 where the ratio for (A,B) is c, -1 where it is
/// 1/c, 0 on the diagonal.
using Orientation = std::vector<std::vector<int>>;

/// Topological sort of the tournament; nullopt if it has a cycle.
std::optional<std::vector<std::size_t>> order_tournament(const Orientation& eps);
/// Exhaustive search over permutations, for cross-checking (n <= 8).
std::optional<std::vector<std::size_t>> order_by_enumeration(const Orientation& eps);

struct OracleDim {
  std::size_t degree = 0;
  std::uint64_t computed = 0;
  std::uint64_t classical = 0;
};

struct PBWVerdict {
  bool criterion_holds = false;
  std::optional<Scalar> constant_source;
  std::optional<Scalar> constant_target;
  std::optional<std::vector<std::size_t>> ordering_source;
  std::optional<std::vector<std::size_t>> ordering_target;
  std::vector<OracleDim> oracle_dims;
  std::string reason;

  /// Every recorded oracle dimension equals the classical one.
  bool oracle_classical() const;
};

/// The criterion c_α = c_β^{±1}.  When either space has dimension at most 1
/// the algebra is a skew polynomial algebra and the criterion holds
/// unconditionally.  Oracle dimensions are recorded for degrees
/// 2..oracle_degree (none when oracle_degree < 2).
PBWVerdict pbw_criterion(const QuantumObject& source, const QuantumObject& target, std::size_t oracle_degree = 3);

}  // namespace qcat
