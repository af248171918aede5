#pragma once

#include "qcat/hom_algebra.hpp"

#include <vector>

namespace qcat {

/// B = sum_k λ_k P_k acting on V'⊗V' (coordinates in the word basis).
struct BMatrix {
  QuantumObject object;
  std::vector<Scalar> coefficients;
  Matrix matrix;
};

/// Throws Error(RepeatedCoefficient) unless the coefficients are pairwise
/// distinct, Error(ComponentCountMismatch) unless there is one per component.
BMatrix build_B(const QuantumObject& object, std::vector<Scalar> coefficients);

/// B = P_1 - λ P_2.
BMatrix normalized_B(const QuantumObject& object, const Scalar& lambda);

/// Recovers the projectors from B by Lagrange interpolation on its
/// eigenvalues.
std::vector<Matrix> eigen_projectors(const BMatrix& b);

/// B^{12} B^{23} B^{12} == B^{23} B^{12} B^{23} on (V')^{⊗3}.
bool yang_baxter_check(const BMatrix& b);

/// Candidates λ (λ != -1) for which P_1 - λ P_2 satisfies Yang-Baxter.
std::vector<Scalar> yang_baxter_coefficients(const QuantumObject& object, const std::vector<Scalar>& candidates);

/// The coaction on the tensor square as a matrix D with entries in the
/// degree-2 free algebra:
///   D[(C,D),(K,L)] = (-1)^{p(D)(p(C)+p(K))} t_C^K t_D^L.
/// The relation span is spanned by the entries of B_α D - D B_β.
RelationSet rmatrix_relation_span(const BMatrix& source, const BMatrix& target);

}  // namespace qcat
