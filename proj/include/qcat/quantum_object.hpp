#pragma once

#include "qcat/graded.hpp"
#include "qcat/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qcat {

enum class ObjectKind { Classical, Sudbery, Normalized, General };

const char* object_kind_name(ObjectKind kind);

/// Q = (q^{AB}) and P = (p^{AB}) with x^A x^B = q^{AB} x^B x^A and
/// ξ^A ξ^B = -(-1)^{p(A)+p(B)} p^{AB} ξ^B ξ^A.
struct SudberyParams {
  Matrix q;
  Matrix p;
};

struct NormalizedParams {
  Matrix q;
  int epsilon = 1;
  Scalar lambda;
};

/// A graded space V together with a decomposition V'⊗V' = I_1 ⊕ ... ⊕ I_s.
/// Components are kept as spanning rows over the lexicographic word basis of
/// V'⊗V'; projectors and bases are derived on demand.
class QuantumObject {
 public:
  QuantumObject(GradedSpace space, std::vector<Matrix> components, ObjectKind kind,
                std::optional<SudberyParams> sudbery = std::nullopt,
                std::optional<NormalizedParams> normalized = std::nullopt);

  const GradedSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  std::size_t tensor_dim() const { return space_.dim() * space_.dim(); }
  std::size_t component_count() const { return components_.size(); }
  const std::vector<Matrix>& components() const { return components_; }
  const Matrix& component(std::size_t k) const { return components_[k]; }
  std::size_t component_dim(std::size_t k) const;
  /// Canonical basis (reduced echelon rows) of component k.
  Matrix component_basis(std::size_t k) const;

  ObjectKind kind() const { return kind_; }
  /// Sudbery parameters; present for classical, sudbery and normalized
  /// objects (and duals of those).
  const std::optional<SudberyParams>& sudbery() const { return sudbery_; }
  const std::optional<NormalizedParams>& normalized() const { return normalized_; }

  std::vector<Matrix> projectors() const;

  std::string name;

 private:
  GradedSpace space_;
  std::vector<Matrix> components_;
  ObjectKind kind_;
  std::optional<SudberyParams> sudbery_;
  std::optional<NormalizedParams> normalized_;
};

/// I spanned by e^A e^B - (-1)^{p(A)p(B)} e^B e^A, J by the symmetric tensors.
QuantumObject make_classical(const GradedSpace& space);

/// Throws Error(BadParameters) when reciprocity or the diagonal condition
/// q^{AA} = p^{AA} = (-1)^{p(A)} fails, Error(NotComplementary) when
/// q^{AB} + p^{AB} = 0 for some pair.
QuantumObject make_sudbery(const GradedSpace& space, const Matrix& q, const Matrix& p);

/// Objects of the normalized category: with s = sign(A-B),
///   q̂^{AB} = q^{AB} λ^{ε s},   p̂^{AB} = q^{AB} λ^{-ε s}.
/// The standard two-parameter 2x2 family is ε = -1 with q^{21} as the
/// object's parameter; its quantum constant is c = λ^{2ε}.
QuantumObject make_normalized(const GradedSpace& space, const Matrix& q, int epsilon, const Scalar& lambda);

/// A user-supplied decomposition with any number of components.
QuantumObject make_general(const GradedSpace& space, std::vector<Matrix> components);

/// (V', Ann J, Ann I) for a two-component object.  For sudbery input the
/// result is again sudbery with Q' = P^T and P' = Q^T.
QuantumObject dual_object(const QuantumObject& object);

/// Validates reciprocity and the diagonal; returns a description of the first
/// violation or an empty string.
std::string sudbery_violation(const GradedSpace& space, const Matrix& q, const Matrix& p);

/// The matrix with (-1)^{p(A)p(B)} in every entry.
Matrix classical_parameters(const GradedSpace& space);

}  // namespace qcat
